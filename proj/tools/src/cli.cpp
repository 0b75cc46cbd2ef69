#include "polyomega/cli.hpp"

#include "polyomega/error.hpp"
#include "polyomega/io.hpp"
#include "polyomega/ratfun.hpp"

#include <ostream>

namespace polyomega::cli {
namespace {

void print_trace(const EliminationTrace &trace, std::ostream &err) {
    for (const auto &step : trace)
        err << "round " << step.iteration << ": " << step.cone_count << " cones, "
            << step.max_generator_bits << " bits max\n";
}

std::string describe(const ConeCombination &l) {
    std::string out;
    for (const auto &[cone, mult] : l) {
        out += mult.get_str() + " * C(";
        for (std::size_t j = 0; j < cone.num_generators(); ++j) {
            out += j ? ", (" : "(";
            for (std::size_t i = 0; i < cone.ambient_dimension(); ++i)
                out += (i ? "," : "") + cone.generators(i, j).get_str();
            out += cone.open[j] ? ")'" : ")";
        }
        out += "; q = (";
        for (std::size_t i = 0; i < cone.apex.size(); ++i)
            out += (i ? "," : "") + to_string(cone.apex[i]);
        out += "))\n";
    }
    return out;
}

} // namespace

bool satisfies(const LDSystem &system, const IntVec &x) {
    for (const auto &xi : x)
        if (xi < 0)
            return false;
    for (std::size_t i = 0; i < system.num_constraints(); ++i) {
        BigInt lhs = 0;
        for (std::size_t j = 0; j < system.num_variables(); ++j)
            lhs += system.a(i, j) * x[j];
        const bool ok = system.rel[i] == Relation::Eq ? lhs == system.b[i] : lhs >= system.b[i];
        if (!ok)
            return false;
    }
    return true;
}

int check(const LDSystem &system, const ConeCombination &l, long box, std::ostream &out) {
    const std::size_t d = system.num_variables();
    IntVec x(d, BigInt(0));
    std::size_t points = 0;
    for (;;) {
        ++points;
        const BigInt got = eval_combination(l, x);
        const int want = satisfies(system, x) ? 1 : 0;
        if (got != want) {
            out << "FAIL at (";
            for (std::size_t i = 0; i < d; ++i)
                out << (i ? "," : "") << x[i];
            out << "): combination " << got << ", constraints " << want << "\n";
            return exit_code::fail;
        }
        std::size_t i = 0;
        for (; i < d; ++i) {
            if (x[i] < box) {
                ++x[i];
                break;
            }
            x[i] = 0;
        }
        if (i == d)
            break;
    }
    out << "PASS " << points << " points\n";
    return exit_code::ok;
}

int run(const RunConfig &config, const LDSystem &system, std::ostream &out, std::ostream &err) {
    if (config.box < 0) {
        err << "error: --box must be non-negative\n";
        return exit_code::usage;
    }
    if (config.index_threshold < 1) {
        err << "error: --index-threshold must be at least 1\n";
        return exit_code::usage;
    }
    if (config.command == Command::Count && !config.assert_bounded) {
        err << "error: count needs --assert-bounded; the solution set must be finite\n";
        return exit_code::usage;
    }
    const Format format =
        config.format.value_or(config.command == Command::Ratfun ? Format::Plain : Format::Json);
    if (config.command == Command::Solve && format == Format::Latex) {
        err << "error: solve supports --format json or plain\n";
        return exit_code::usage;
    }

    EliminationTrace trace;
    EliminationOptions options;
    options.threads = config.threads == 0 ? 1 : config.threads;
    const ConeCombination l = solve(system, &trace, options);
    if (config.verbose)
        print_trace(trace, err);

    switch (config.command) {
    case Command::Solve:
        out << (format == Format::Json ? cones_to_json(l, system.num_variables()) + "\n"
                                       : describe(l));
        return exit_code::ok;
    case Command::Ratfun: {
        ConversionOptions conv;
        conv.method = config.method == Method::Barvinok ? ConversionMethod::Barvinok
                                                        : ConversionMethod::FundamentalParallelepiped;
        conv.index_threshold = config.index_threshold;
        conv.seed = config.seed;
        RatFunExpr expr = combination_to_ratfun(l, conv);
        expr.dimension = system.num_variables();
        const RenderFormat rf = format == Format::Json    ? RenderFormat::Json
                                : format == Format::Latex ? RenderFormat::Latex
                                                          : RenderFormat::Plain;
        out << render(expr, rf, {config.vector_exponents}) << "\n";
        return exit_code::ok;
    }
    case Command::Count:
        out << count_lattice_points(l, {config.seed}) << "\n";
        return exit_code::ok;
    case Command::Check:
        return check(system, l, config.box, out);
    }
    return exit_code::usage;
}

int run(const RunConfig &config, const std::string &input, std::ostream &out, std::ostream &err) {
    LDSystem system;
    try {
        system = parse_system(input);
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const DimensionError &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
    try {
        return run(config, system, out, err);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code::fail;
    }
}

} // namespace polyomega::cli
