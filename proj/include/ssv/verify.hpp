/*
  verify.hpp

  Batch check suites behind the verify command and the acceptance
  program. Every suite is a flat list of named independent checks; the
  checks run on a small worker pool and the report keeps task order, so
  output is identical at every parallelism level.

  Families compose into the named suites as

    golden    = golden_e + golden_p
    relations = relations
    oracle    = oracle_equality + eigenvalue + embedding
    limits    = limits
    order     = order_support + order_shrinkage
    all       = the five suites above in that order.
*/
#pragma once

#include <string>
#include <vector>

namespace ssv {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // empty when passed
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    int passed_count() const;
    bool all_passed() const;
    const CheckResult* first_failure() const;
};

enum class CheckFamily {
    golden_e,
    golden_p,
    relations,
    oracle_equality,
    eigenvalue,
    embedding,
    limits,
    order_support,
    order_shrinkage,
};

// Sweep restrictions; an empty list means the family default. The
// golden families honor only degrees (their tables fix the rest);
// embedding honors only degrees; shrinkage filters its (m, n) pairs
// by n.
struct SweepOptions {
    std::vector<int> ranks;
    std::vector<int> degrees;
};

SuiteReport run_family(CheckFamily family, const SweepOptions& options = {});

// suite is one of golden, relations, oracle, limits, order, all;
// throws malformed_error for anything else.
SuiteReport run_suite(const std::string& suite, const SweepOptions& options = {});

// Worker count: SSV_THREADS when set to a positive integer, else the
// hardware concurrency, at least 1.
int suite_thread_count();

} // namespace ssv
