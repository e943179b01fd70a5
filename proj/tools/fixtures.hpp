#pragma once

#include <string>
#include <vector>

namespace qary::fixtures {

struct Result {
    std::string name;
    bool pass = false;
    std::string output;
};

std::vector<std::string> names();
/// Regenerates the named example from the library and diffs it byte for
/// byte against the pinned expected text. Throws on unknown names.
Result run(const std::string& name);
std::vector<Result> run_all();

/// Reference incidence-matrix files (shared with the test suites).
const char* gf8_qp2_matrix_text();
const char* gf8_qc3_matrix_text();

}  // namespace qary::fixtures
