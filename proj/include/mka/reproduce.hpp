#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mka {

/// One reproduction check: an expected value, the value the library computed,
/// and whether they agree. Rendered as "PASS <id> expected=<v> got=<v>".
struct CheckResult {
    std::string id;
    std::string expected;
    std::string got;
    bool pass = false;
};

std::string format_check(const CheckResult& c);
bool all_passed(const std::vector<CheckResult>& checks);

/// Two dining philosophers: reachable part, exact transition matrix, deadlock
/// series, convergence threshold, and the absorption hypotheses (also for the
/// three-philosopher table).
std::vector<CheckResult> reproduce_df2();

/// Birthday party with three seats and two children: reachable part, eating
/// states, exact series, and the long-run eating probability.
std::vector<CheckResult> reproduce_sofia();

/// Randomized interchange laws: normalization versus the two parallel
/// compositions, and k-step versus the parallel product.
std::vector<CheckResult> reproduce_lemmas(std::uint32_t seed = 42,
                                          int pairs = 200);

} // namespace mka
