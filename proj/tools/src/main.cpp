#include "polyomega/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

namespace pc = polyomega::cli;

int main(int argc, char **argv) {
    CLI::App app{"Solve linear Diophantine systems as signed sums of symbolic cones."};
    app.require_subcommand(1);
    app.set_version_flag("--version", "polyomega 0.1.0");

    pc::RunConfig config;
    std::string input = "-";
    std::string index_threshold = "1";

    const std::map<std::string, pc::Method> methods{{"fp", pc::Method::Fp},
                                                    {"barvinok", pc::Method::Barvinok}};
    const std::map<std::string, pc::Format> formats{
        {"json", pc::Format::Json}, {"plain", pc::Format::Plain}, {"latex", pc::Format::Latex}};

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("input", input, "System file, '-' for stdin")->capture_default_str();
        sub->add_option("--seed", config.seed, "Seed for every randomized choice")
            ->capture_default_str();
        sub->add_option("--threads", config.threads, "Worker threads for elimination")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_flag("--verbose", config.verbose, "Print the elimination trace to stderr");
    };

    CLI::App *solve = app.add_subcommand("solve", "Print the cone decomposition");
    add_common(solve);
    solve->add_option("--format", config.format, "json or plain")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    CLI::App *ratfun = app.add_subcommand("ratfun", "Print a rational function expression");
    add_common(ratfun);
    ratfun->add_option("--method", config.method, "fp or barvinok")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    ratfun->add_option("--format", config.format, "json, plain or latex")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    ratfun->add_option("--index-threshold", index_threshold,
                       "Barvinok leaves may keep this index")
        ->capture_default_str();
    ratfun->add_flag("--vector-exponents", config.vector_exponents,
                     "LaTeX: write monomials as z^{(a,b)}");

    CLI::App *count = app.add_subcommand("count", "Count the solutions of a bounded system");
    add_common(count);
    count->add_flag("--assert-bounded", config.assert_bounded,
                    "Confirm that the solution set is finite");

    CLI::App *check = app.add_subcommand("check", "Compare the decomposition with the system");
    add_common(check);
    check->add_option("--box", config.box, "Check every point of [0, B]^d")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : pc::exit_code::usage;
    }

    if (solve->parsed())
        config.command = pc::Command::Solve;
    else if (ratfun->parsed())
        config.command = pc::Command::Ratfun;
    else if (count->parsed())
        config.command = pc::Command::Count;
    else
        config.command = pc::Command::Check;

    try {
        config.index_threshold = polyomega::parse_bigint(index_threshold);
    } catch (const std::exception &) {
        std::cerr << "error: --index-threshold expects an integer\n";
        return pc::exit_code::usage;
    }

    std::string text;
    if (input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream file(input);
        if (!file) {
            std::cerr << "error: cannot open " << input << "\n";
            return pc::exit_code::usage;
        }
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    return pc::run(config, text, std::cout, std::cerr);
}
