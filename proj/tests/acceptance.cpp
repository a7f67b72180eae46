// Acceptance gate: one pass/fail line per criterion group.

#include "sesh/verify.hpp"

#include <iostream>

int main() {
    static const char* kCriteria[] = {
        "fermat quartic geometry (48 lines, 216 points, profile, ratio, groups)",
        "fermat plane arrangements n=3..6 (profiles, per-line counts, identity)",
        "preset pair-count identities (klein, wiman, quasi-pencils)",
        "star pullback on X_2: nef failure with witness, ratio 3/8",
        "pullback configurational constants on X_e",
        "hesse conics: nef failure, bounds (1/22, 1/4), base constant 8",
        "star configurations d=5,6,10 certify exactly 1/(d-1)",
        "double-cover instances: bounds, Kodaira-type inequality and bound",
        "property suites (random stars, homogeneity, ruled bounds, round-trip)",
    };

    auto checks = sesh::run_verification_suite();
    bool all = true;
    for (int crit = 1; crit <= 9; ++crit) {
        int total = 0, passed = 0;
        std::string first_fail;
        for (const auto& c : checks) {
            if (c.criterion != crit) continue;
            ++total;
            if (c.passed) ++passed;
            else if (first_fail.empty())
                first_fail = c.name + " (expected " + c.expected + ", got " + c.actual + ")";
        }
        bool ok = total > 0 && passed == total;
        all = all && ok;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << crit << ": "
                  << kCriteria[crit - 1] << " [" << passed << "/" << total << "]";
        if (!first_fail.empty()) std::cout << "  first failure: " << first_fail;
        std::cout << "\n";
    }
    std::cout << (all ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << "\n";
    return all ? 0 : 1;
}
