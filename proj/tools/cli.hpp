#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qary::cli {

/// Exit codes: 0 all requested checks pass, 2 parse errors (flags or input
/// files), 3 validation failures (graph property, audits, field specs),
/// 4 check failures (axioms, comparisons, lemma identities, fixtures).
enum ExitCode : int {
    kOk = 0,
    kParseError = 2,
    kValidationFailure = 3,
    kCheckFailure = 4,
};

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qary::cli
