#pragma once

#include "polyomega/bigint.hpp"
#include "polyomega/cone.hpp"

#include <cstdint>

namespace polyomega {

/// Number of lattice points in the fundamental parallelepiped: |det V|.
/// Throws DimensionError unless the cone is full-dimensional.
BigInt index(const SymbolicCone &cone);

struct BarvinokOptions {
    /// Leaves are cones with index ≤ index_threshold.
    BigInt index_threshold = 1;
    /// Seeds the choice of the reference direction that fixes half-open facets.
    std::uint64_t seed = 0;
};

/// Signed decomposition [C] = Σ ±[C_i] into half-open cones of index ≤ threshold,
/// all with the apex of C. The identity holds pointwise on R^d, not just modulo lines.
ConeCombination barvinok_decompose(const SymbolicCone &cone, const BarvinokOptions &options = {});

} // namespace polyomega
