#include "projlmo/verify.hpp"

#include "projlmo/mnp.hpp"
#include "projlmo/random_instances.hpp"
#include "projlmo/reduction.hpp"
#include "projlmo/set_spec.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <thread>

namespace projlmo {

namespace {

enum Check : std::size_t {
    kMembership,
    kProjectionOptimality,
    kLmoOptimality,
    kIdempotence,
    kNonexpansive,
    kIdentity,
    kThm1Lower,
    kThm1Upper,
    kNormDomination,
    kEpsGuarantee,
    kMnpState,
    kMnpVsClosedForm,
    kLambdaStarExact,
    kLambdaStarMinNorm,
    kCheckCount,
};

constexpr std::array<const char*, kCheckCount> kCheckNames = {
    "membership",        "projection_optimality", "lmo_optimality", "idempotence",
    "nonexpansiveness",  "projlmo_identity",      "thm1_lower",     "thm1_upper",
    "norm_domination",   "eps_guarantee",         "mnp_state",      "mnp_vs_closed_form",
    "lambda_star_exact", "lambda_star_min_norm",
};

constexpr double kFailed = -std::numeric_limits<double>::infinity();

struct TrialOutcome {
    std::array<std::optional<double>, kCheckCount> slack;

    void record(Check check, double value) {
        if (std::isnan(value)) value = kFailed;
        slack[check] = slack[check] ? std::min(*slack[check], value) : value;
    }
};

double mnp_state_slack(const MnpResult& r, std::span<const Vector> vertices, std::size_t dim) {
    double slack = r.converged ? 0.0 : -1.0;
    double total = 0.0;
    Vector combined = Vector::Zero(vertices.front().size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        slack = std::min(slack, r.weights[i]);
        total += r.weights[i];
        combined += r.weights[i] * vertices[i];
    }
    slack = std::min(slack, 1e-12 - std::abs(total - 1.0));
    slack = std::min(slack, 1e-12 - (combined - r.point).lpNorm<Eigen::Infinity>());
    slack = std::min(slack, static_cast<double>(dim + 1) - static_cast<double>(r.max_active));
    for (std::size_t k = 1; k < r.distance_history.size(); ++k)
        slack = std::min(slack, 1e-12 * (1.0 + r.distance_history[k - 1]) -
                                    (r.distance_history[k] - r.distance_history[k - 1]));
    return slack;
}

void run_checks(const ConvexSet& set, std::mt19937_64& rng, TrialOutcome& out) {
    const std::size_t n = set.dim();
    const double mu = set.constants().norm_bound;
    const Vector x = random_gaussian(n, rng);
    const Vector y = random_gaussian(n, rng);
    const double lambda = log_uniform(1e-3, 1e6, rng);
    const double epsilon = log_uniform(1e-6, 1.0, rng);
    const double tol = set.tolerance(x);

    const Vector p = set.project(x);
    const Vector v = set.lmo(x);

    const double member_tol = 1e-9 * (1.0 + mu);
    auto distance_to_set = [&](const Vector& point) { return (point - set.project(point)).norm(); };
    out.record(kMembership, member_tol - std::max(distance_to_set(p), distance_to_set(v)));

    out.record(kProjectionOptimality, tol - (x - p).dot(set.lmo(p - x) - p));
    out.record(kLmoOptimality, tol - std::abs(v.dot(x) - min_linear_value(set.descriptor(), x)));
    out.record(kIdempotence, 1e-12 * (1.0 + x.norm()) - (set.project(p) - p).norm());
    out.record(kNonexpansive,
               (x - y).norm() + 1e-12 * (1.0 + x.norm() + y.norm()) - (p - set.project(y)).norm());

    out.record(kIdentity, tol - check_projlmo_identity(set, x).gap);

    const ApproxLmoResult scaled = approx_lmo_with_lambda(set, x, lambda);
    const GapCertificate& cert = scaled.certificate;
    out.record(kThm1Lower, tol + cert.raw_gap);
    out.record(kThm1Upper, *cert.bound + tol - cert.gap);
    out.record(kNormDomination, tol - (scaled.point.norm() - v.norm()));
    out.record(kMembership, member_tol - distance_to_set(scaled.point));

    const ApproxLmoResult approx = approx_lmo(set, x, epsilon);
    out.record(kEpsGuarantee, epsilon + tol - approx.certificate.gap);

    const auto* own = std::get_if<PolytopeV>(&set.descriptor());
    std::optional<PolytopeV> converted;
    if (own == nullptr) converted = as_polytope(set.descriptor());
    const PolytopeV* poly = own != nullptr ? own : (converted ? &*converted : nullptr);
    if (poly == nullptr) return;

    const MnpResult mnp = mnp_project(poly->vertices, x);
    out.record(kMnpState, mnp_state_slack(mnp, poly->vertices, n));
    if (own == nullptr) out.record(kMnpVsClosedForm, 1e-8 - (mnp.point - p).norm());

    const ConvexSet polytope_set(*poly);
    const LambdaStarResult star = lambda_star_search(polytope_set, x);
    out.record(kLambdaStarExact, star.exact ? star.tol_exact - star.exactness_gap : kFailed);
    if (star.exact) out.record(kLambdaStarMinNorm, 1e-7 - star.min_norm_distance);
}

TrialOutcome run_trial(const VerifyConfig& config, std::size_t index) {
    std::mt19937_64 rng = trial_rng(config.seed, index);
    TrialOutcome out;
    try {
        const SetDescriptor descriptor =
            config.set ? *config.set : random_set(kAllFamilies[index % kAllFamilies.size()], rng);
        run_checks(ConvexSet(descriptor), rng, out);
    } catch (const std::exception&) {
        // An oracle throwing on valid input counts against membership.
        out.record(kMembership, kFailed);
    }
    return out;
}

std::string format_slack(double slack) {
    if (slack == kFailed) return "-inf";
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3e", slack);
    return buffer;
}

}  // namespace

bool VerifyReport::all_pass() const {
    return std::all_of(invariants.begin(), invariants.end(), [](const InvariantTally& t) { return t.ok(); });
}

std::string VerifyReport::text() const {
    std::string out = "set: " + set_label + "\nseed: " + std::to_string(seed) +
                      "\ntrials: " + std::to_string(trials) + "\n";
    char line[160];
    std::snprintf(line, sizeof line, "%-24s %9s %9s  %s\n", "invariant", "passed", "checked", "worst_slack");
    out += line;
    for (const auto& t : invariants) {
        const std::string slack = t.checked == 0 ? "n/a" : format_slack(t.worst_slack);
        std::snprintf(line, sizeof line, "%-24s %9zu %9zu  %s\n", t.name.c_str(), t.passed, t.checked,
                      slack.c_str());
        out += line;
    }
    out += all_pass() ? "result: PASS\n" : "result: FAIL\n";
    return out;
}

VerifyReport run_verify(const VerifyConfig& config) {
    if (config.set) ConvexSet validated(*config.set);

    std::vector<TrialOutcome> outcomes(config.trials);
    unsigned threads = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(config.trials, 1)));
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < threads; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t t = w; t < config.trials; t += threads) outcomes[t] = run_trial(config, t);
            });
        }
    }

    VerifyReport report;
    report.set_label = config.set ? format_set_spec(*config.set) : "random (all families)";
    report.seed = config.seed;
    report.trials = config.trials;
    for (std::size_t c = 0; c < kCheckCount; ++c) {
        InvariantTally tally{kCheckNames[c], 0, 0, std::numeric_limits<double>::infinity()};
        for (const auto& outcome : outcomes) {
            if (!outcome.slack[c]) continue;
            ++tally.checked;
            if (*outcome.slack[c] >= 0.0) ++tally.passed;
            tally.worst_slack = std::min(tally.worst_slack, *outcome.slack[c]);
        }
        report.invariants.push_back(std::move(tally));
    }
    return report;
}

}  // namespace projlmo
