#pragma once

#include <string>
#include <vector>

namespace flagpoly {

struct CheckResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

// Named suites: minors, charts, quiver, fillings, polytopes, toeplitz, all.
std::vector<CheckResult> run_verification(const std::string& suite);

// The ten acceptance checks (suite "all").
CheckResult check_golden_superpotentials();   // 1
CheckResult check_golden_polytopes();         // 2
CheckResult check_lattice_counts();           // 3
CheckResult check_monomiality();              // 4
CheckResult check_coordinate_change();        // 5
CheckResult check_chart_consistency();        // 6
CheckResult check_tropical_critical_point();  // 7
CheckResult check_filling_bijection();        // 8
CheckResult check_toeplitz();                 // 9
CheckResult check_quiver_identities();        // 10

}  // namespace flagpoly
