#pragma once

#include <string>
#include <vector>

namespace univoque {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

// Named property suites backing the `verify-paper` command: each runs the
// module-level invariants (random-sample properties, exhaustive identities,
// cross-checks) and reports one line per invariant.
//   words, expansion, solver, dimension, families, thue-morse, isolated
std::vector<std::string> verify_suite_names();
std::vector<CheckResult> run_verify_suite(const std::string& name, std::uint64_t seed = 0);

} // namespace univoque
