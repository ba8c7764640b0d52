// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include "projlmo/commands.hpp"
#include "projlmo/fw.hpp"
#include "projlmo/mnp.hpp"
#include "projlmo/random_instances.hpp"
#include "projlmo/reduction.hpp"
#include "projlmo/set_spec.hpp"
#include "projlmo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace projlmo;

namespace {

struct Outcome {
    bool pass = true;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::string detail;

    void record(bool ok) {
        ++trials;
        if (!ok) {
            ++failures;
            pass = false;
        }
    }
};

double scaled_tol(const ConvexSet& set, const Vector& x) {
    return 1e-9 * (1.0 + x.norm()) * (1.0 + set.constants().norm_bound);
}

SetFamily family_for(std::size_t t) { return kAllFamilies[t % kAllFamilies.size()]; }

// Criterion 1: projection identity on every catalog family.
Outcome identity_suite() {
    Outcome out;
    double worst = 0.0;
    for (std::size_t f = 0; f < kAllFamilies.size(); ++f) {
        for (std::size_t t = 0; t < 10000; ++t) {
            auto rng = trial_rng(100 + f, t);
            const ConvexSet set(random_set(kAllFamilies[f], rng));
            const Vector x = 3.0 * random_gaussian(set.dim(), rng);
            const auto cert = check_projlmo_identity(set, x);
            const double tol = scaled_tol(set, x);
            worst = std::max(worst, cert.raw_gap / tol);
            out.record(cert.raw_gap <= tol);
        }
    }
    out.detail = "worst gap/tol " + format_csv_real(worst);
    return out;
}

// Criterion 2: two-sided error bound and norm domination.
Outcome bound_suite() {
    Outcome out;
    double worst = 0.0;
    for (std::size_t t = 0; t < 10000; ++t) {
        auto rng = trial_rng(200, t);
        const ConvexSet set(random_set(family_for(t), rng));
        const Vector x = random_gaussian(set.dim(), rng);
        const double lambda = log_uniform(1e-3, 1e6, rng);
        const auto r = approx_lmo_with_lambda(set, x, lambda);
        const double tol = scaled_tol(set, x);
        const double v_norm = set.lmo(x).norm();
        const double excess = std::max({-r.certificate.raw_gap, r.certificate.gap - *r.certificate.bound,
                                        r.point.norm() - v_norm});
        worst = std::max(worst, excess / tol);
        out.record(excess <= tol);
    }
    out.detail = "worst violation/tol " + format_csv_real(worst);
    return out;
}

// Criterion 3: gap <= epsilon with the prescribed lambda.
Outcome epsilon_suite() {
    Outcome out;
    double worst = 0.0;
    for (std::size_t t = 0; t < 10000; ++t) {
        auto rng = trial_rng(300, t);
        const ConvexSet set(random_set(family_for(t), rng));
        const Vector x = random_gaussian(set.dim(), rng);
        const double eps = log_uniform(1e-6, 1.0, rng);
        const auto r = approx_lmo(set, x, eps);
        worst = std::max(worst, r.certificate.gap / eps);
        out.record(r.certificate.gap <= eps + scaled_tol(set, x));
    }
    out.detail = "worst gap/eps " + format_csv_real(worst);
    return out;
}

// Criterion 4: finite exactness scale and minimal-norm match on polytopes.
Outcome lambda_star_suite() {
    Outcome out;
    double worst_distance = 0.0, largest_lambda = 0.0;
    for (std::size_t t = 0; t < 1000; ++t) {
        auto rng = trial_rng(400, t);
        const auto poly = std::get<PolytopeV>(random_set(SetFamily::polytope, rng));
        const ConvexSet set(poly);
        Vector x;
        // Redraw until the vertex products are pairwise separated.
        while (true) {
            x = random_gaussian(set.dim(), rng);
            std::vector<double> products;
            for (const auto& v : poly.vertices) products.push_back(v.dot(x));
            std::sort(products.begin(), products.end());
            bool distinct = true;
            for (std::size_t i = 1; i < products.size(); ++i)
                if (products[i] - products[i - 1] <= 1e-6 * (1.0 + std::abs(products[i]))) distinct = false;
            if (distinct) break;
        }
        const auto r = lambda_star_search(set, x);
        worst_distance = std::max(worst_distance, r.min_norm_distance);
        largest_lambda = std::max(largest_lambda, r.lambda_star);
        out.record(r.exact && r.exactness_gap <= r.tol_exact && r.min_norm_distance <= 1e-7);
    }
    out.detail = "worst min-norm distance " + format_csv_real(worst_distance) + ", largest lambda* " +
                 format_csv_real(largest_lambda);
    return out;
}

// Criterion 5: minimum-norm-point projection against closed forms.
Outcome mnp_suite() {
    Outcome out;
    double worst = 0.0;
    for (std::size_t t = 0; t < 1000; ++t) {
        auto rng = trial_rng(500, t);
        const SetFamily family = t % 2 == 0 ? SetFamily::simplex : SetFamily::box;
        const std::size_t dim = 1 + t / 2 % 6;
        const SetDescriptor set = random_set(family, dim, rng);
        const ConvexSet closed(set);
        const auto poly = as_polytope(set);
        const Vector x = 2.0 * random_gaussian(dim, rng);
        const auto r = mnp_project(poly->vertices, x);
        const double distance = (r.point - closed.project(x)).norm();
        worst = std::max(worst, distance);
        out.record(r.converged && distance <= 1e-8);
    }
    out.detail = "worst distance " + format_csv_real(worst);
    return out;
}

std::vector<std::vector<double>> parse_csv_body(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) row.push_back(std::stod(field));
        rows.push_back(row);
    }
    return rows;
}

// Criterion 6: gap-versus-lambda sweep on the offset disk.
Outcome sweep_suite() {
    Outcome out;
    const auto result = cmd_sweep({parse_set_spec("ball2 c=2,2 r=1"), make_vector({1.0, 0.0}),
                                   parse_lambda_grid("1:1e6:7")});
    const auto rows = parse_csv_body(result.text);
    out.record(result.exit_code == kExitPass);
    out.record(rows.size() == 7);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.record(rows[i][1] <= rows[i][2]);
        if (i > 0) out.record(rows[i][1] < rows[i - 1][1]);
    }
    const double last = rows.empty() ? 1.0 : rows.back()[1];
    out.record(last < 1e-6);
    out.detail = "final gap " + format_csv_real(last);
    return out;
}

// Criterion 7: Frank-Wolfe with the harmonic accuracy schedule.
Outcome fw_suite() {
    Outcome out;
    double worst = 0.0;
    std::size_t most_iterations = 0;
    for (std::size_t t = 0; t < 100; ++t) {
        auto rng = trial_rng(700, t);
        const SetDescriptor set = random_set(family_for(t), rng);
        const ConvexSet closed(set);
        const Vector target = random_gaussian(closed.dim(), rng);
        FwOptions options;
        options.max_iter = 10000;
        const auto r = fw_solve({set, target, {EpsilonSchedule::Kind::harmonic, 1.0}}, options);
        const double distance = (r.solution - closed.project(target)).norm();
        worst = std::max(worst, distance);
        most_iterations = std::max(most_iterations, r.trace.iterates.size() - 1);
        out.record(distance <= 1e-3);
    }
    out.detail = "worst distance " + format_csv_real(worst) + ", most iterations " + std::to_string(most_iterations);
    return out;
}

// Criterion 8: byte-identical verify and sweep output.
Outcome determinism_suite() {
    Outcome out;
    for (std::uint64_t seed : {1u, 42u}) {
        VerifyConfig config;
        config.seed = seed;
        config.trials = 2000;
        config.threads = 1;
        const auto serial = cmd_verify(config).text;
        config.threads = 4;
        const auto parallel_a = cmd_verify(config).text;
        const auto parallel_b = cmd_verify(config).text;
        out.record(serial == parallel_a);
        out.record(parallel_a == parallel_b);
    }
    const SweepConfig sweep{parse_set_spec("polytope v=0,0;1,0;0,1;1,1.5"), make_vector({0.3, -0.7}),
                            parse_lambda_grid("1e-3:1e6:31")};
    out.record(cmd_sweep(sweep).text == cmd_sweep(sweep).text);
    out.detail = "verify (threads 1 vs 4, repeated) and sweep outputs compared";
    return out;
}

struct Criterion {
    int id;
    const char* name;
    double time_limit;  // seconds; <= 0 means no limit
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "projection identity", 10.0, identity_suite},
        {2, "two-sided error bound", 30.0, bound_suite},
        {3, "epsilon guarantee", 30.0, epsilon_suite},
        {4, "finite lambda* and minimal-norm match", 60.0, lambda_star_suite},
        {5, "mnp vs closed-form projection", 0.0, mnp_suite},
        {6, "gap sweep on the offset disk", 0.0, sweep_suite},
        {7, "Frank-Wolfe with harmonic epsilon", 0.0, fw_suite},
        {8, "determinism", 0.0, determinism_suite},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.time_limit <= 0.0 || seconds < c.time_limit;
        const bool pass = o.pass && in_time;
        all = all && pass;
        std::printf("criterion %d %s: %s (%zu/%zu checks, %.2f s%s; %s)\n", c.id, c.name, pass ? "PASS" : "FAIL",
                    o.trials - o.failures, o.trials, seconds, in_time ? "" : ", over time limit", o.detail.c_str());
    }
    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
