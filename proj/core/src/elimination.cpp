#include "polyomega/elimination.hpp"

#include "polyomega/error.hpp"
#include "polyomega/exactmath.hpp"

#include <algorithm>
#include <thread>

namespace polyomega {
namespace {

// Drops the last coordinate of every column and makes the columns primitive.
IntMat project_columns(const IntMat &g) {
    IntMat out(g.rows() - 1, g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j) {
        IntVec col(g.rows() - 1);
        for (std::size_t i = 0; i + 1 < g.rows(); ++i)
            col[i] = g(i, j);
        out.set_column(j, prim(col));
    }
    return out;
}

RatVec project(const RatVec &x) { return RatVec(x.begin(), x.end() - 1); }

void add_flipped(ConeCombination &out, const SymbolicCone &cone) {
    FlipResult f = flip(cone);
    out.add(f.cone, f.sign);
}

std::size_t max_bits(const ConeCombination &combination) {
    std::size_t bits = 0;
    for (const auto &[cone, mult] : combination)
        for (const auto &x : cone.generators.data())
            bits = std::max(bits, bit_length(x));
    return bits;
}

ConeCombination eliminate_round(const ConeCombination &input, std::size_t threads) {
    std::vector<const ConeCombination::Map::value_type *> terms;
    terms.reserve(input.size());
    for (const auto &term : input)
        terms.push_back(&term);

    const std::size_t workers = std::max<std::size_t>(1, std::min(threads, terms.size()));
    std::vector<ConeCombination> partial(workers);
    auto work = [&](std::size_t w) {
        for (std::size_t t = w; t < terms.size(); t += workers)
            partial[w].merge(eliminate_last_coordinate(terms[t]->first), terms[t]->second);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (auto &th : pool)
            th.join();
    }
    ConeCombination out;
    for (const auto &p : partial)
        out.merge(p);
    return out;
}

} // namespace

LDSystem LDSystem::make(IntMat a, std::vector<Relation> rel, IntVec b) {
    if (a.rows() == 0 || a.cols() == 0)
        throw DimensionError("a system needs at least one constraint and one variable");
    if (rel.size() != a.rows() || b.size() != a.rows())
        throw DimensionError("constraint matrix has " + std::to_string(a.rows()) + " rows but " +
                             std::to_string(rel.size()) + " relations and " +
                             std::to_string(b.size()) + " right-hand sides");
    return LDSystem{std::move(a), std::move(rel), std::move(b)};
}

LDSystem LDSystem::expanded() const {
    std::vector<IntVec> rows;
    IntVec rhs;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        rows.push_back(a.row(i));
        rhs.push_back(b[i]);
        if (rel[i] == Relation::Eq) {
            IntVec neg = a.row(i);
            for (auto &x : neg)
                x = -x;
            rows.push_back(std::move(neg));
            rhs.push_back(-b[i]);
        }
    }
    IntMat out(rows.size(), a.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = rows[i][j];
    return LDSystem{std::move(out), std::vector<Relation>(rows.size(), Relation::Geq),
                    std::move(rhs)};
}

bool LDSystem::satisfied_by(const IntVec &x) const {
    if (x.size() != a.cols())
        throw DimensionError("point has the wrong number of variables");
    for (const auto &xi : x)
        if (xi < 0)
            return false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        BigInt lhs = 0;
        for (std::size_t j = 0; j < a.cols(); ++j)
            lhs += a(i, j) * x[j];
        if (rel[i] == Relation::Eq ? lhs != b[i] : lhs < b[i])
            return false;
    }
    return true;
}

SymbolicCone macmahon_lift(const IntMat &a, const IntVec &b) {
    if (a.rows() != b.size())
        throw DimensionError("macmahon_lift: A has " + std::to_string(a.rows()) +
                             " rows, b has length " + std::to_string(b.size()));
    const std::size_t d = a.cols();
    const std::size_t m = a.rows();
    IntMat v(d + m, d);
    for (std::size_t j = 0; j < d; ++j) {
        v(j, j) = 1;
        for (std::size_t i = 0; i < m; ++i)
            v(d + i, j) = a(i, j);
    }
    RatVec q(d + m);
    for (std::size_t i = 0; i < m; ++i)
        q[d + i] = -b[i];
    return SymbolicCone::closed(std::move(v), std::move(q));
}

ConeCombination eliminate_last_coordinate(const SymbolicCone &cone) {
    const IntMat &v = cone.generators;
    const std::size_t n = cone.ambient_dimension();
    const std::size_t k = cone.num_generators();
    if (n < 2)
        throw DimensionError("cannot eliminate the only coordinate of a cone in R^1");
    const BigRat &qn = cone.apex[n - 1];
    const bool above = qn >= 0;
    const int sg = above ? 1 : -1;

    ConeCombination out;
    for (std::size_t j = 0; j < k; ++j) {
        const BigInt &vjn = v(n - 1, j);
        // Case A/C use the downward generators, case B the upward ones.
        if (above ? vjn >= 0 : vjn <= 0)
            continue;
        // G = sg·V·T^j: column i ≠ j is v_{i,n}·v_j − v_{j,n}·v_i, column j is −v_j.
        IntMat g(n, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t r = 0; r < n; ++r) {
                BigInt e = i == j ? BigInt(-v(r, j)) : BigInt(v(n - 1, i) * v(r, j) - vjn * v(r, i));
                g(r, i) = sg * e;
            }
        RatVec w(n);
        const BigRat t = qn / BigRat(vjn);
        for (std::size_t r = 0; r < n; ++r)
            w[r] = cone.apex[r] - t * v(r, j);
        Openness o = cone.open;
        o[j] = 0;
        add_flipped(out, SymbolicCone{project_columns(g), project(w), std::move(o)});
    }
    if (above)
        add_flipped(out, SymbolicCone{project_columns(v), project(cone.apex), cone.open});
    return out;
}

ConeCombination eliminate(const SymbolicCone &cone, std::size_t rounds, EliminationTrace *trace,
                          const EliminationOptions &options) {
    ConeCombination current;
    current.add(cone, 1);
    if (options.observer)
        options.observer(0, current);
    for (std::size_t i = 1; i <= rounds; ++i) {
        current = eliminate_round(current, options.threads);
        if (trace)
            trace->push_back({i, current.size(), max_bits(current)});
        if (options.observer)
            options.observer(i, current);
    }
    return current;
}

ConeCombination solve(const LDSystem &system, EliminationTrace *trace,
                      const EliminationOptions &options) {
    const LDSystem ineq = system.expanded();
    return eliminate(macmahon_lift(ineq.a, ineq.b), ineq.num_constraints(), trace, options);
}

} // namespace polyomega
