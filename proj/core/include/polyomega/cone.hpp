#pragma once

#include "polyomega/bigint.hpp"
#include "polyomega/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

namespace polyomega {

using Openness = std::vector<std::uint8_t>;

/// Half-open affine simplicial cone {q + V·λ : λ_i ≥ 0 if o_i = 0, λ_i > 0 if o_i = 1}.
///
/// Generators are the columns of V. The representation is canonical once the
/// columns are primitive and sorted lexicographically (see canonicalize()), which
/// is what ConeCombination relies on to collect equal cones.
struct SymbolicCone {
    IntMat generators;
    RatVec apex;
    Openness open;

    /// Validates shapes: apex length = rows, openness length = columns, k ≤ n.
    static SymbolicCone make(IntMat generators, RatVec apex, Openness open);
    /// Closed cone with the given apex.
    static SymbolicCone closed(IntMat generators, RatVec apex);

    std::size_t ambient_dimension() const noexcept { return generators.rows(); }
    std::size_t num_generators() const noexcept { return generators.cols(); }
    IntVec generator(std::size_t j) const { return generators.column(j); }

    friend bool operator==(const SymbolicCone &, const SymbolicCone &) = default;
};

/// Total order on cones: generators, then apex, then openness.
struct ConeLess {
    bool operator()(const SymbolicCone &a, const SymbolicCone &b) const;
};

/// Finite signed sum Σ α_i [C_i] keyed by canonical cone; zero multiplicities are dropped.
class ConeCombination {
public:
    using Map = std::map<SymbolicCone, BigInt, ConeLess>;
    using const_iterator = Map::const_iterator;

    ConeCombination() = default;

    /// Adds mult·[cone]. The cone is canonicalized first.
    void add(const SymbolicCone &cone, const BigInt &mult);
    /// Adds mult·[cone] for a cone already in canonical form.
    void add_canonical(const SymbolicCone &cone, const BigInt &mult);
    /// this += scale·other.
    void merge(const ConeCombination &other, const BigInt &scale = 1);

    BigInt multiplicity(const SymbolicCone &canonical_cone) const;

    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    /// Equal as formal sums; an emptied combination equals a fresh one.
    friend bool operator==(const ConeCombination &a, const ConeCombination &b) {
        return a.terms_ == b.terms_;
    }

private:
    Map terms_;
    std::size_t dimension_ = 0;
};

/// A vector is forward if its first non-zero entry is positive.
bool is_forward(std::span<const BigInt> v);

/// Primitive columns in lexicographic order, openness permuted alongside.
/// Throws Error on zero or linearly dependent generators.
SymbolicCone canonicalize(const SymbolicCone &cone);

struct FlipResult {
    int sign;
    SymbolicCone cone;
};

/// Reverses every backward generator, toggling its openness bit.
/// [cone] ≡ sign·[result.cone] modulo lines.
FlipResult flip(const SymbolicCone &cone);

bool contains(const SymbolicCone &cone, const RatVec &x);
bool contains(const SymbolicCone &cone, const IntVec &x);

/// Σ α_i [C_i](x).
BigInt eval_combination(const ConeCombination &combination, const RatVec &x);
BigInt eval_combination(const ConeCombination &combination, const IntVec &x);

/// Lattice points of the half-open fundamental parallelepiped
/// Π^o(V; q) = {q + V·λ : 0 ≤ λ_i < 1 (o_i = 0), 0 < λ_i ≤ 1 (o_i = 1)},
/// enumerated through the Smith normal form of V. Empty if aff(C) has no lattice point.
std::vector<IntVec> enum_fundpar(const SymbolicCone &cone);

/// Lattice points x with lo ≤ x ≤ hi that lie in the cone, by membership scan.
std::set<IntVec> lattice_points_in_box(const SymbolicCone &cone, const IntVec &lo,
                                       const IntVec &hi);

/// Calls fn(x) for every lattice point x of the box lo ≤ x ≤ hi.
template <class Fn>
void for_each_box_point(const IntVec &lo, const IntVec &hi, Fn &&fn) {
    const std::size_t n = lo.size();
    for (std::size_t i = 0; i < n; ++i)
        if (lo[i] > hi[i])
            return;
    IntVec x = lo;
    for (;;) {
        fn(static_cast<const IntVec &>(x));
        std::size_t i = 0;
        while (i < n) {
            if (x[i] < hi[i]) {
                ++x[i];
                break;
            }
            x[i] = lo[i];
            ++i;
        }
        if (i == n)
            return;
    }
}

} // namespace polyomega
