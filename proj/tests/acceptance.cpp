/*
  acceptance.cpp

  The eight acceptance criteria, one pass/fail line each. A criterion
  fails when any of its checks fails or when it exceeds its stated
  runtime bound. Exit 0 iff every criterion passes.
*/
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <vector>

#include "ssv/verify.hpp"

using namespace ssv;

namespace {

struct Criterion {
    std::string name;
    std::function<SuiteReport()> run;
    double bound_seconds = 0; // 0: no bound
};

SuiteReport merged(std::initializer_list<CheckFamily> families) {
    SuiteReport out;
    for (CheckFamily family : families) {
        SuiteReport part = run_family(family);
        out.checks.insert(out.checks.end(), part.checks.begin(), part.checks.end());
    }
    return out;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"golden nonsymmetric table", [] { return merged({CheckFamily::golden_e}); }, 5},
        {"golden symmetric table", [] { return merged({CheckFamily::golden_p}); }, 10},
        {"dual construction equality",
         [] { return merged({CheckFamily::oracle_equality}); }, 300},
        {"operator relations", [] { return merged({CheckFamily::relations}); }, 120},
        {"eigenvalue law", [] { return merged({CheckFamily::eigenvalue}); }},
        {"triangular support",
         [] { return merged({CheckFamily::order_support, CheckFamily::order_shrinkage}); }},
        {"degree embedding", [] { return merged({CheckFamily::embedding}); }},
        {"q-limits", [] { return merged({CheckFamily::limits}); }},
    };

    bool all_passed = true;
    std::cout << std::fixed << std::setprecision(2);
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& criterion = criteria[i];
        auto start = std::chrono::steady_clock::now();
        SuiteReport report = criterion.run();
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_bound = criterion.bound_seconds == 0 || seconds < criterion.bound_seconds;
        bool passed = report.all_passed() && in_bound;
        all_passed = all_passed && passed;
        std::cout << "criterion " << (i + 1) << " (" << criterion.name << "): "
                  << (passed ? "PASS" : "FAIL") << " (" << report.passed_count() << "/"
                  << report.checks.size() << " checks, " << seconds << "s)\n";
        if (const CheckResult* failure = report.first_failure())
            std::cout << "  first failure: " << failure->name << ": " << failure->detail
                      << "\n";
        if (!in_bound)
            std::cout << "  exceeded the " << criterion.bound_seconds << "s bound\n";
    }
    std::cout << (all_passed ? "all criteria passed" : "some criteria failed") << "\n";
    return all_passed ? 0 : 1;
}
