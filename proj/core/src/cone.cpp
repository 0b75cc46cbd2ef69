#include "polyomega/cone.hpp"

#include "polyomega/error.hpp"
#include "polyomega/exactmath.hpp"

#include <algorithm>
#include <numeric>

namespace polyomega {
namespace {

template <class T>
int compare_values(const std::vector<T> &a, const std::vector<T> &b) {
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0)
            return c < 0 ? -1 : 1;
    }
    return 0;
}

bool lex_less(std::span<const BigInt> a, std::span<const BigInt> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

SymbolicCone SymbolicCone::make(IntMat generators, RatVec apex, Openness open) {
    if (apex.size() != generators.rows())
        throw DimensionError("apex of length " + std::to_string(apex.size()) + " for cone in R^" +
                             std::to_string(generators.rows()));
    if (open.size() != generators.cols())
        throw DimensionError("openness vector of length " + std::to_string(open.size()) + " for " +
                             std::to_string(generators.cols()) + " generators");
    if (generators.cols() > generators.rows())
        throw DimensionError("simplicial cone with more generators than dimensions");
    for (auto o : open)
        if (o > 1)
            throw Error("openness entries must be 0 or 1");
    return SymbolicCone{std::move(generators), std::move(apex), std::move(open)};
}

SymbolicCone SymbolicCone::closed(IntMat generators, RatVec apex) {
    Openness o(generators.cols(), 0);
    return make(std::move(generators), std::move(apex), std::move(o));
}

bool ConeLess::operator()(const SymbolicCone &a, const SymbolicCone &b) const {
    if (a.generators.rows() != b.generators.rows())
        return a.generators.rows() < b.generators.rows();
    if (int c = compare_values(a.generators.data(), b.generators.data()); c != 0)
        return c < 0;
    if (int c = compare_values(a.apex, b.apex); c != 0)
        return c < 0;
    return a.open < b.open;
}

void ConeCombination::add(const SymbolicCone &cone, const BigInt &mult) {
    add_canonical(canonicalize(cone), mult);
}

void ConeCombination::add_canonical(const SymbolicCone &cone, const BigInt &mult) {
    if (mult == 0)
        return;
    if (terms_.empty() && dimension_ == 0)
        dimension_ = cone.ambient_dimension();
    else if (cone.ambient_dimension() != dimension_)
        throw DimensionError("cone in R^" + std::to_string(cone.ambient_dimension()) +
                             " added to a combination in R^" + std::to_string(dimension_));
    auto [it, inserted] = terms_.try_emplace(cone, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void ConeCombination::merge(const ConeCombination &other, const BigInt &scale) {
    for (const auto &[cone, mult] : other)
        add_canonical(cone, mult * scale);
}

BigInt ConeCombination::multiplicity(const SymbolicCone &canonical_cone) const {
    auto it = terms_.find(canonical_cone);
    return it == terms_.end() ? BigInt(0) : it->second;
}

bool is_forward(std::span<const BigInt> v) {
    for (const auto &x : v)
        if (x != 0)
            return x > 0;
    return false;
}

SymbolicCone canonicalize(const SymbolicCone &cone) {
    const std::size_t k = cone.num_generators();
    const std::size_t n = cone.ambient_dimension();
    std::vector<IntVec> cols(k);
    for (std::size_t j = 0; j < k; ++j)
        cols[j] = prim(cone.generator(j));
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return lex_less(cols[a], cols[b]); });
    IntMat v(n, k);
    Openness o(k);
    for (std::size_t j = 0; j < k; ++j) {
        v.set_column(j, cols[order[j]]);
        o[j] = cone.open[order[j]];
    }
    if (rank(v) != k)
        throw Error("generators not linearly independent");
    return SymbolicCone{std::move(v), cone.apex, std::move(o)};
}

FlipResult flip(const SymbolicCone &cone) {
    FlipResult out{1, cone};
    for (std::size_t j = 0; j < cone.num_generators(); ++j) {
        if (is_forward(cone.generators.column_view(j)))
            continue;
        for (auto &x : out.cone.generators.column_view(j))
            x = -x;
        out.cone.open[j] ^= 1;
        out.sign = -out.sign;
    }
    return out;
}

bool contains(const SymbolicCone &cone, const RatVec &x) {
    if (x.size() != cone.ambient_dimension())
        throw DimensionError("point of length " + std::to_string(x.size()) + " for cone in R^" +
                             std::to_string(cone.ambient_dimension()));
    RatVec rhs(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        rhs[i] = x[i] - cone.apex[i];
    const auto lambda = solve_rational(cone.generators, rhs);
    if (!lambda)
        return false;
    for (std::size_t j = 0; j < lambda->size(); ++j) {
        const int s = sign((*lambda)[j]);
        if (s < 0 || (s == 0 && cone.open[j]))
            return false;
    }
    return true;
}

bool contains(const SymbolicCone &cone, const IntVec &x) { return contains(cone, to_rational(x)); }

BigInt eval_combination(const ConeCombination &combination, const RatVec &x) {
    BigInt total = 0;
    for (const auto &[cone, mult] : combination)
        if (contains(cone, x))
            total += mult;
    return total;
}

BigInt eval_combination(const ConeCombination &combination, const IntVec &x) {
    return eval_combination(combination, to_rational(x));
}

std::set<IntVec> lattice_points_in_box(const SymbolicCone &cone, const IntVec &lo,
                                       const IntVec &hi) {
    if (lo.size() != cone.ambient_dimension() || hi.size() != cone.ambient_dimension())
        throw DimensionError("box bounds do not match the ambient dimension");
    std::set<IntVec> out;
    for_each_box_point(lo, hi, [&](const IntVec &x) {
        if (contains(cone, x))
            out.insert(x);
    });
    return out;
}

} // namespace polyomega
