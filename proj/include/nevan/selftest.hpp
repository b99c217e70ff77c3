#pragma once

// A seeded battery of exact property checks over every field configuration,
// run by the `selftest` command. The output is CSV (suite, field, cases,
// failures, first failure) and is byte-identical for a fixed seed.

#include <cstdint>
#include <string>
#include <vector>

namespace nevan {

struct SelftestResult {
    std::string suite, field;
    std::size_t cases = 0, failures = 0;
    std::string first_failure;
};

std::vector<SelftestResult> run_selftest(std::uint64_t seed);
std::string selftest_csv(const std::vector<SelftestResult>& results);

}  // namespace nevan
