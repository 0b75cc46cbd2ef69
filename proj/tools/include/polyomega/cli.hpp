#pragma once

#include "polyomega/bigint.hpp"
#include "polyomega/cone.hpp"
#include "polyomega/elimination.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace polyomega::cli {

enum class Command { Solve, Ratfun, Count, Check };
enum class Method { Fp, Barvinok };
enum class Format { Json, Plain, Latex };

struct RunConfig {
    Command command = Command::Solve;
    Method method = Method::Fp;
    /// Unset means the command's default: json for solve, plain for ratfun.
    std::optional<Format> format;
    std::uint64_t seed = 0;
    long box = 8;
    bool assert_bounded = false;
    BigInt index_threshold = 1;
    std::size_t threads = 1;
    bool verbose = false;
    /// LaTeX only: z^{(a,b)} monomials.
    bool vector_exponents = false;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int fail = 1;
inline constexpr int usage = 2;
} // namespace exit_code

/// Runs one command on an already parsed system. Output goes to `out`, diagnostics
/// to `err`. Returns the process exit status.
int run(const RunConfig &config, const LDSystem &system, std::ostream &out, std::ostream &err);

/// Parses `input` and runs; parse errors are reported as usage errors.
int run(const RunConfig &config, const std::string &input, std::ostream &out, std::ostream &err);

/// Direct evaluation of x ≥ 0 and every constraint row at x.
bool satisfies(const LDSystem &system, const IntVec &x);

/// Compares eval_combination with `satisfies` on [0, box]^d. Prints one PASS/FAIL line.
int check(const LDSystem &system, const ConeCombination &combination, long box, std::ostream &out);

} // namespace polyomega::cli
