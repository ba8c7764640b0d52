#pragma once

#include "projlmo/sets.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace projlmo {

struct VerifyConfig {
    /// Fixed set to check; random instances of every family when absent.
    std::optional<SetDescriptor> set;
    std::uint64_t seed = 1;
    std::size_t trials = 1000;
    /// 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Outcome of one invariant over all trials it applied to. Slack is
/// tolerance minus the measured violation, so a check passes iff slack >= 0.
struct InvariantTally {
    std::string name;
    std::size_t checked = 0;
    std::size_t passed = 0;
    double worst_slack = 0.0;

    bool ok() const { return passed == checked; }
};

struct VerifyReport {
    std::string set_label;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<InvariantTally> invariants;

    bool all_pass() const;
    /// Fixed-width text table; identical for identical config and seed.
    std::string text() const;
};

/// Runs the randomized invariant suites. Trial t draws everything from
/// trial_rng(seed, t), and tallies are reduced in trial order, so the
/// report does not depend on the thread count.
VerifyReport run_verify(const VerifyConfig& config);

}  // namespace projlmo
