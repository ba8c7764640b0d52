#pragma once

#include "projlmo/linalg.hpp"
#include "projlmo/sets.hpp"

#include <cstddef>
#include <vector>

namespace projlmo {

/// Accuracy requested from the linear oracle at iteration k.
struct EpsilonSchedule {
    enum class Kind {
        /// Closed-form lmo, epsilon_k = 0.
        exact,
        /// epsilon_k = scale.
        constant,
        /// epsilon_k = scale / (k + 2).
        harmonic,
    };
    Kind kind = Kind::harmonic;
    double scale = 1.0;

    double at(std::size_t k) const;
};

/// Minimize 0.5 ||z - target||^2 over a set.
struct FwProblem {
    SetDescriptor set;
    Vector target;
    EpsilonSchedule schedule;
};

struct FwIterate {
    std::size_t k = 0;
    double objective = 0.0;
    /// <grad, z - v> with v the oracle answer; the true gap is at most this plus epsilon_k.
    double fw_gap = 0.0;
    double epsilon = 0.0;
};

struct FwTrace {
    std::vector<FwIterate> iterates;
};

struct FwResult {
    Vector solution;
    FwTrace trace;
    bool converged = false;
};

struct FwOptions {
    std::size_t max_iter = 10000;
    /// Stops once fw_gap + epsilon_k <= stop_gap.
    double stop_gap = 1e-10;
};

/// Frank-Wolfe with exact line search, using approx_lmo(set, grad, epsilon_k)
/// as the linear oracle (lmo itself for the exact schedule).
FwResult fw_solve(const FwProblem& problem, const FwOptions& options = {});

}  // namespace projlmo
