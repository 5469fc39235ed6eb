// sisctl: batch front end for extra-invariance analysis.
//
//   sisctl analyze        --input problem.json [--tol 1e-9] [--pretty]
//   sisctl invariance-set --input problem.json
//   sisctl construct      --input request.json   (group, H, M)
//   sisctl verify         --input problem.json
//
// Reads stdin when --input is omitted or "-". Exit codes: 0 success,
// 1 input error, 2 not invariant (analyze), 3 criteria disagree.

#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sis/errors.hpp"
#include "sis/problem.hpp"

namespace {

struct Options {
    std::string input = "-";
    double tol = sis::kDefaultTolerance;
    bool pretty = false;
};

sis::ProblemFile load(const Options& opt) {
    if (opt.input == "-") return sis::read_problem(std::cin);
    std::ifstream in(opt.input);
    if (!in) throw sis::InputError("cannot open " + opt.input);
    return sis::read_problem(in);
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--input,-i", opt.input, "Problem file (JSON); '-' for stdin");
    cmd->add_option("--tol", opt.tol, "Relative rank/residual tolerance")->check(CLI::PositiveNumber);
    auto* pretty = cmd->add_flag("--pretty", opt.pretty, "Indented JSON output");
    cmd->add_flag("--json", "Compact JSON output (default)")->excludes(pretty);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Extra-invariance analysis of shift-invariant spaces on finite abelian groups"};
    app.require_subcommand(1);
    Options opt;
    auto* analyze = app.add_subcommand("analyze", "Decide M-invariance with both fiber criteria");
    auto* inv_set = app.add_subcommand("invariance-set", "Compute the invariance set of S_H(Phi)");
    auto* construct = app.add_subcommand("construct", "Build a generator whose space is exactly M-invariant");
    auto* verify = app.add_subcommand("verify", "Cross-check fiber criteria against the brute-force oracle");
    for (auto* cmd : {analyze, inv_set, construct, verify}) add_common(cmd, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : sis::kExitInputError;
    }

    try {
        const auto problem = load(opt);
        sis::CommandResult result;
        if (analyze->parsed()) {
            result = sis::cmd_analyze(problem, opt.tol);
        } else if (inv_set->parsed()) {
            result = sis::cmd_invariance_set(problem, opt.tol);
        } else if (construct->parsed()) {
            result = sis::cmd_construct(problem);
        } else {
            result = sis::cmd_verify(problem, opt.tol);
        }
        std::cout << result.report.dump(opt.pretty ? 2 : -1) << '\n';
        return result.exit_code;
    } catch (const sis::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return sis::kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return sis::kExitInputError;
    } catch (const sis::InconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return sis::kExitDisagreement;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return sis::kExitInputError;
    }
}
