#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symdisc {

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::vector<std::string> notes; // findings worth printing (e.g. "n = 3")
    bool pass() const { return failures == 0; }
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int c = 0; // 0 = suite default
    int d = 0;
    int m = 0;
    int n_max = 0;
};

// Suite names, in acceptance order.
std::vector<std::string> verify_suite_names();

// Runs one named suite ("all" runs every suite and aggregates).
// Unknown names raise argument_error.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

} // namespace symdisc
