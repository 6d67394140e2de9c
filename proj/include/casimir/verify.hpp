#pragma once

#include <map>
#include <string>
#include <vector>

namespace casimir {

// One verified identity instance. Params identify the case, witness carries
// rendered exact values backing the verdict; both map to JSON one-to-one.
struct CheckResult {
    std::string check;
    std::map<std::string, std::string> params;
    bool pass = false;
    std::map<std::string, std::string> witness;
};

// Suites runnable individually or as "all". gl2 and plethysm are rank-2
// families and ignore n; the others honor n within desk scale (2..4, fusion
// and omega-star cap the box count by rank as documented in run_verify_suite).
const std::vector<std::string>& verify_suite_names();

// Executes every check of the named suite at rank n and reports each
// instance. Unknown suite names throw std::invalid_argument.
std::vector<CheckResult> run_verify_suite(const std::string& suite, int n);

}  // namespace casimir
