#pragma once

#include "projlmo/fw.hpp"
#include "projlmo/reduction.hpp"
#include "projlmo/sets.hpp"
#include "projlmo/verify.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace projlmo {

/// Exit statuses shared by every command.
enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitUsage = 2 };

struct CommandOutput {
    /// Primary output: CSV or report text.
    std::string text;
    /// Human-readable notes for stderr.
    std::string notes;
    int exit_code = kExitPass;
};

/// `a:b:steps`, log-spaced from a to b inclusive. Throws InputError unless
/// 0 < a <= b and steps >= 1 (a single step requires a == b).
std::vector<double> parse_lambda_grid(std::string_view text);

/// Comma-separated reals.
Vector parse_real_list(std::string_view text);

/// Decimal with 17 significant digits.
std::string format_csv_real(double value);

CommandOutput cmd_verify(const VerifyConfig& config);

struct SweepConfig {
    SetDescriptor set;
    Vector x;
    std::vector<double> lambdas;
};

/// CSV `lambda,gap,thm1_bound,eps_from_eq6`, one row per lambda. Every row
/// is re-checked for gap <= thm1_bound + tolerance; a violation sets exit 1.
CommandOutput cmd_sweep(const SweepConfig& config);

struct LambdaStarConfig {
    SetDescriptor set;
    Vector x;
    LambdaStarOptions options;
};

/// CSV `lambda_star,exactness_gap,tol_exact,exact,min_norm_match,min_norm_distance,search_iterations,p_0..`.
/// Sets without a vertex list are converted when possible. Exit 1 when the
/// search did not certify an exact point or the minimal-norm match failed.
CommandOutput cmd_lambdastar(const LambdaStarConfig& config);

struct FwConfig {
    FwProblem problem;
    FwOptions options;
};

/// CSV `k,objective,fw_gap,eps_k`; the final iterate goes to notes.
CommandOutput cmd_fw(const FwConfig& config);

struct BenchConfig {
    SetDescriptor set;
    std::uint64_t seed = 1;
    std::size_t trials = 1000;
    double epsilon = 1e-3;
};

/// Wall-clock medians and maxima of project, lmo and approx_lmo. Reported,
/// never asserted. Throws InputError when trials == 0.
CommandOutput cmd_bench(const BenchConfig& config);

}  // namespace projlmo
