// Problem files and the batch commands behind the sisctl tool.
//
// Problem file (UTF-8 JSON):
//   {
//     "group":      {"moduli": [8]},
//     "H":          {"generators": [[4]]},
//     "M":          {"generators": [[2]]},          optional
//     "generators": [ {"spectrum": [[1,0], [1,0], ...]},
//                     {"signal":   [[0.5,0], ...]} ]
//   }
// Complex entries are [re, im] pairs; a bare number is read as a real value.
// Each generator carries exactly one of "spectrum" or "signal".

#ifndef SIS_PROBLEM_HPP
#define SIS_PROBLEM_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sis/group.hpp"
#include "sis/invariance.hpp"
#include "sis/spectral.hpp"

namespace sis {

using Json = nlohmann::json;

enum ExitCode : int {
    kExitOk = 0,
    kExitInputError = 1,
    kExitNotInvariant = 2,
    kExitDisagreement = 3,
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ProblemFile {
    Group group;
    Subgroup h;
    std::optional<Subgroup> m;
    /// Generators normalized to spectra.
    std::vector<Spectrum> generators;
};

/// Throws InputError on any schema or dimension problem, including M not containing H.
ProblemFile parse_problem(const Json& doc);
ProblemFile read_problem(std::istream& in);

Json to_json(const Element& e);
Json to_json(const Subgroup& s);
Json to_json(const std::vector<Complex>& values);
Json to_json(const InvarianceReport& r);
Json to_json(const SupportReport& r);

struct CommandResult {
    Json report;
    int exit_code = kExitOk;
};

CommandResult cmd_analyze(const ProblemFile& p, double tol_rel = kDefaultTolerance);
CommandResult cmd_invariance_set(const ProblemFile& p, double tol_rel = kDefaultTolerance);
/// Emits a problem file whose single generator has invariance set exactly M.
CommandResult cmd_construct(const ProblemFile& p);
CommandResult cmd_verify(const ProblemFile& p, double tol_rel = kDefaultTolerance);

}  // namespace sis

#endif  // SIS_PROBLEM_HPP
