#pragma once

#include "polyomega/bigint.hpp"
#include "polyomega/cone.hpp"
#include "polyomega/matrix.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace polyomega {

enum class Relation { Geq, Eq };

/// Linear Diophantine system A·x (≥ | =) b over x ∈ Z^d, x ≥ 0 implied.
struct LDSystem {
    IntMat a;
    std::vector<Relation> rel;
    IntVec b;

    /// Validates m ≥ 1, d ≥ 1 and consistent dimensions.
    static LDSystem make(IntMat a, std::vector<Relation> rel, IntVec b);

    std::size_t num_variables() const noexcept { return a.cols(); }
    std::size_t num_constraints() const noexcept { return a.rows(); }

    /// Each equality a·x = β replaced by a·x ≥ β and −a·x ≥ −β, in place.
    LDSystem expanded() const;

    /// Direct check of the constraints at x, including x ≥ 0.
    bool satisfied_by(const IntVec &x) const;
};

struct EliminationStep {
    std::size_t iteration;
    std::size_t cone_count;
    std::size_t max_generator_bits;
};

using EliminationTrace = std::vector<EliminationStep>;

/// Observer invoked with the collected combination after every round (round 0 is the input).
using RoundObserver = std::function<void(std::size_t iteration, const ConeCombination &)>;

struct EliminationOptions {
    /// Worker threads for per-cone elimination; results are identical for any value.
    std::size_t threads = 1;
    RoundObserver observer;
};

/// Cone with generators [Id_d ; A], apex (0, −b), all facets closed.
SymbolicCone macmahon_lift(const IntMat &a, const IntVec &b);

/// Ω_≥ applied to one forward cone: intersect with x_n ≥ 0, forget x_n. Exact identity.
ConeCombination eliminate_last_coordinate(const SymbolicCone &cone);

/// Applies eliminate_last_coordinate `rounds` times, collecting after each round.
ConeCombination eliminate(const SymbolicCone &cone, std::size_t rounds,
                          EliminationTrace *trace = nullptr,
                          const EliminationOptions &options = {});

/// Signed cone decomposition of {x ∈ R^d_{≥0} : A·x ≥ b, equalities as given}.
ConeCombination solve(const LDSystem &system, EliminationTrace *trace = nullptr,
                      const EliminationOptions &options = {});

} // namespace polyomega
