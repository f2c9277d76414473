#ifndef KSCHUR_VERIFY_HPP
#define KSCHUR_VERIFY_HPP

#include <string>
#include <vector>

#include "kschur/json_io.hpp"

namespace kschur {

// Verdicts: theorems report PASS/FAIL (a FAIL is an implementation bug and
// fails the process); conjecture regressions report HOLDS/COUNTEREXAMPLE (a
// counterexample is a finding, not a build failure).
struct verify_case {
    std::string name;
    std::string verdict;
    std::string detail;
};

struct verify_options {
    int k = -1;          // -1: the check's default range
    int max_degree = -1; // -1: the check's default cap
    int jobs = 1;
};

struct verify_report {
    std::string check;
    verify_options options;
    std::vector<verify_case> cases;

    int count(const std::string& verdict) const;
    bool theorem_failure() const { return count("FAIL") > 0; }
    json to_json() const;
};

// Check registry; "all" runs every one of these in order.
const std::vector<std::string>& verify_check_names();

verify_report run_verify(const std::string& check, const verify_options& opts);

} // namespace kschur

#endif
