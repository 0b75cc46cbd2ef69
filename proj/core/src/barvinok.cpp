#include "polyomega/barvinok.hpp"

#include "polyomega/error.hpp"
#include "polyomega/exactmath.hpp"

#include <random>

namespace polyomega {
namespace {

// Thrown when the reference direction lies on a facet hyperplane of some cone in
// the recursion; the decomposition is then restarted with a fresh direction.
struct DegenerateDirection {};

BigInt sup_norm(const IntVec &v) {
    BigInt m = 0;
    for (const auto &x : v)
        if (abs(x) > m)
            m = abs(x);
    return m;
}

// Shortest nonzero vector, in the sup norm, of the lattice spanned by the columns of
// `basis` (an LLL-reduced integer basis), among those with a positive entry.
// Ties go to the lexicographically smallest vector.
//
// The sign restriction matters: if every nonzero λ_i is negative, {v_i} ∪ {w} span a
// line positively and the children sum to [C] only modulo that line. Of λ and −λ at
// least one qualifies, and both give the same child indices.
IntVec shortest_vector(const IntMat &basis) {
    const std::size_t d = basis.cols();
    BigInt radius = -1;
    for (std::size_t j = 0; j < d; ++j) {
        BigInt r = sup_norm(basis.column(j));
        if (radius < 0 || r < radius)
            radius = r;
    }
    // Any lattice vector B·c with sup norm ≤ radius has |c_j| ≤ ‖row_j(B⁻¹)‖₁·radius.
    const RatMat inv = inverse(basis);
    IntVec bound(d);
    for (std::size_t j = 0; j < d; ++j) {
        BigRat l1 = 0;
        for (std::size_t c = 0; c < d; ++c)
            l1 += abs(inv(j, c));
        bound[j] = floor(l1 * radius);
    }
    IntVec lo(d);
    for (std::size_t j = 0; j < d; ++j)
        lo[j] = -bound[j];

    IntVec best;
    BigInt best_norm = -1;
    for_each_box_point(lo, bound, [&](const IntVec &c) {
        IntVec lambda = basis * c;
        bool positive = false;
        for (const auto &x : lambda)
            positive = positive || x > 0;
        if (!positive)
            return;
        const BigInt norm = sup_norm(lambda);
        if (best_norm < 0 || norm < best_norm || (norm == best_norm && lambda < best)) {
            best = std::move(lambda);
            best_norm = norm;
        }
    });
    return best;
}

class Decomposer {
public:
    Decomposer(const BarvinokOptions &options, RatVec direction)
        : options_(options), direction_(std::move(direction)) {}

    void run(const SymbolicCone &cone, int sign) {
        const BigInt ind = index(cone);
        if (ind <= options_.index_threshold) {
            out_.add(cone, sign);
            return;
        }
        const IntMat &v = cone.generators;
        const std::size_t d = v.cols();

        // λ ranges over V⁻¹Z^d, stored scaled by |det V| = ind: ±adj(V) spans ind·V⁻¹Z^d.
        IntMat lattice = adjugate(v);
        if (det(v) < 0)
            for (std::size_t j = 0; j < d; ++j)
                for (auto &x : lattice.column_view(j))
                    x = -x;
        const IntVec scaled = shortest_vector(lll_reduce(lattice, ind));
        if (scaled.empty() || sup_norm(scaled) >= ind)
            throw InternalError("barvinok_decompose: no index-reducing vector found");

        // w = V·λ is integral; child i has index |λ_i|·ind / content(w) < ind.
        IntVec w = v * scaled;
        for (auto &x : w) {
            if (!mpz_divisible_p(x.get_mpz_t(), ind.get_mpz_t()))
                throw InternalError("barvinok_decompose: lattice vector is not integral");
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), ind.get_mpz_t());
        }
        w = prim(w);
        for (std::size_t i = 0; i < d; ++i) {
            const int s = polyomega::sign(scaled[i]);
            if (s == 0)
                continue;
            IntMat child_v = v;
            child_v.set_column(i, w);
            run(child(std::move(child_v), cone.apex), sign * s);
        }
    }

    ConeCombination result() && { return std::move(out_); }

private:
    // Openness induced by the reference direction: facet j closed iff ξ points into the cone.
    SymbolicCone child(IntMat v, const RatVec &apex) const {
        const RatVec lambda = *solve_rational(v, direction_);
        Openness o(lambda.size());
        for (std::size_t j = 0; j < lambda.size(); ++j) {
            if (lambda[j] == 0)
                throw DegenerateDirection{};
            o[j] = lambda[j] < 0 ? 1 : 0;
        }
        return SymbolicCone{std::move(v), apex, std::move(o)};
    }

    const BarvinokOptions &options_;
    RatVec direction_;
    ConeCombination out_;
};

} // namespace

BigInt index(const SymbolicCone &cone) {
    if (!cone.generators.square())
        throw DimensionError("index is defined for full-dimensional cones only");
    return abs(det(cone.generators));
}

ConeCombination barvinok_decompose(const SymbolicCone &cone, const BarvinokOptions &options) {
    if (!cone.generators.square())
        throw DimensionError("barvinok_decompose needs a full-dimensional cone");
    if (options.index_threshold < 1)
        throw Error("index threshold must be at least 1");
    const SymbolicCone start = canonicalize(cone);
    const std::size_t d = start.num_generators();
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> jitter(1, 997);
    constexpr int kAttempts = 64;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        // ξ = V·σ with sign(σ_j) chosen so that ξ induces exactly the input openness,
        // perturbed away from the facet hyperplanes of the descendants.
        RatVec sigma(d);
        for (std::size_t j = 0; j < d; ++j) {
            BigRat mag = BigRat(1) + BigRat(jitter(rng), 1999);
            sigma[j] = start.open[j] ? BigRat(-mag) : mag;
        }
        try {
            Decomposer dec(options, apply_rational(start.generators, sigma));
            dec.run(start, 1);
            return std::move(dec).result();
        } catch (const DegenerateDirection &) {
            continue;
        }
    }
    throw InternalError("barvinok_decompose: no generic reference direction found");
}

} // namespace polyomega
