#include "polyomega/exactmath.hpp"

#include "polyomega/error.hpp"

namespace polyomega {
namespace {

// Tracks L·V·R = S with L, R unimodular, together with L⁻¹ and R⁻¹.
// At the end U = L⁻¹ and W = R⁻¹.
class SmithReducer {
public:
    explicit SmithReducer(const IntMat &v)
        : s_(v), l_(IntMat::identity(v.rows())), l_inv_(IntMat::identity(v.rows())),
          r_(IntMat::identity(v.cols())), r_inv_(IntMat::identity(v.cols())) {}

    SmithDecomposition run() {
        const std::size_t n = s_.rows();
        const std::size_t k = s_.cols();
        const std::size_t diag = std::min(n, k);
        for (std::size_t t = 0; t < diag; ++t) {
            if (!move_min_to(t))
                break;
            for (;;) {
                if (!clear_cross(t))
                    continue;
                // Divisibility: every remaining entry must be a multiple of the pivot.
                auto bad = find_non_multiple(t);
                if (!bad)
                    break;
                add_row(*bad, t, 1);
            }
            if (s_(t, t) < 0) {
                negate_row(t);
            }
        }
        return {l_inv_, s_, r_inv_, l_, r_};
    }

private:
    // Row op: row[dst] += c·row[src].
    void add_row(std::size_t src, std::size_t dst, const BigInt &c) {
        for (std::size_t j = 0; j < s_.cols(); ++j)
            s_(dst, j) += c * s_(src, j);
        for (std::size_t j = 0; j < l_.cols(); ++j)
            l_(dst, j) += c * l_(src, j);
        // L⁻¹ ← L⁻¹·E⁻¹: column[src] -= c·column[dst].
        for (std::size_t i = 0; i < l_inv_.rows(); ++i)
            l_inv_(i, src) -= c * l_inv_(i, dst);
    }

    // Column op: col[dst] += c·col[src].
    void add_col(std::size_t src, std::size_t dst, const BigInt &c) {
        for (std::size_t i = 0; i < s_.rows(); ++i)
            s_(i, dst) += c * s_(i, src);
        for (std::size_t i = 0; i < r_.rows(); ++i)
            r_(i, dst) += c * r_(i, src);
        // R⁻¹ ← F⁻¹·R⁻¹: row[src] -= c·row[dst].
        for (std::size_t j = 0; j < r_inv_.cols(); ++j)
            r_inv_(src, j) -= c * r_inv_(dst, j);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        s_.swap_rows(a, b);
        l_.swap_rows(a, b);
        l_inv_.swap_columns(a, b);
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        s_.swap_columns(a, b);
        r_.swap_columns(a, b);
        r_inv_.swap_rows(a, b);
    }

    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < s_.cols(); ++j)
            s_(a, j) = -s_(a, j);
        for (std::size_t j = 0; j < l_.cols(); ++j)
            l_(a, j) = -l_(a, j);
        for (std::size_t i = 0; i < l_inv_.rows(); ++i)
            l_inv_(i, a) = -l_inv_(i, a);
    }

    // Moves the nonzero entry of least absolute value in the trailing block to (t, t).
    bool move_min_to(std::size_t t) {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        for (std::size_t j = t; j < s_.cols(); ++j)
            for (std::size_t i = t; i < s_.rows(); ++i) {
                if (s_(i, j) == 0)
                    continue;
                if (!best || abs(s_(i, j)) < abs(s_(best->first, best->second)))
                    best = {i, j};
            }
        if (!best)
            return false;
        swap_rows(t, best->first);
        swap_cols(t, best->second);
        return true;
    }

    // Reduces row t and column t modulo the pivot. Returns true once both are zero
    // off the diagonal; otherwise a smaller remainder has become the new pivot.
    bool clear_cross(std::size_t t) {
        for (std::size_t i = t + 1; i < s_.rows(); ++i) {
            if (s_(i, t) == 0)
                continue;
            add_row(t, i, -floor_div(s_(i, t), s_(t, t)));
        }
        for (std::size_t j = t + 1; j < s_.cols(); ++j) {
            if (s_(t, j) == 0)
                continue;
            add_col(t, j, -floor_div(s_(t, j), s_(t, t)));
        }
        std::optional<std::pair<std::size_t, std::size_t>> smaller;
        for (std::size_t i = t + 1; i < s_.rows(); ++i)
            if (s_(i, t) != 0 && (!smaller || abs(s_(i, t)) < abs(s_(smaller->first, smaller->second))))
                smaller = {i, t};
        for (std::size_t j = t + 1; j < s_.cols(); ++j)
            if (s_(t, j) != 0 && (!smaller || abs(s_(t, j)) < abs(s_(smaller->first, smaller->second))))
                smaller = {t, j};
        if (!smaller)
            return true;
        swap_rows(t, smaller->first);
        swap_cols(t, smaller->second);
        return false;
    }

    std::optional<std::size_t> find_non_multiple(std::size_t t) const {
        for (std::size_t j = t + 1; j < s_.cols(); ++j)
            for (std::size_t i = t + 1; i < s_.rows(); ++i)
                if (!mpz_divisible_p(s_(i, j).get_mpz_t(), s_(t, t).get_mpz_t()))
                    return i;
        return std::nullopt;
    }

    IntMat s_;
    IntMat l_;
    IntMat l_inv_;
    IntMat r_;
    IntMat r_inv_;
};

} // namespace

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    while (r < std::min(s.rows(), s.cols()) && s(r, r) != 0)
        ++r;
    return r;
}

SmithDecomposition snf(const IntMat &v) { return SmithReducer(v).run(); }

} // namespace polyomega
