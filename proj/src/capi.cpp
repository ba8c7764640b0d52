#include "projlmo/projlmo.h"

#include "projlmo/commands.hpp"
#include "projlmo/errors.hpp"
#include "projlmo/mnp.hpp"
#include "projlmo/reduction.hpp"
#include "projlmo/set_spec.hpp"
#include "projlmo/sets.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <new>
#include <string>

struct plm_set {
    projlmo::ConvexSet set;
    std::string kind;
};

struct plm_text {
    std::string value;
};

namespace {

thread_local std::string last_error;

constexpr double kAbsent = std::numeric_limits<double>::quiet_NaN();

plm_status fail(plm_status status, const char* message) {
    last_error = message;
    return status;
}

template <class Fn>
plm_status guarded(Fn&& fn) {
    try {
        last_error.clear();
        fn();
        return PLM_OK;
    } catch (const projlmo::DimensionError& e) {
        return fail(PLM_ERR_DIMENSION, e.what());
    } catch (const projlmo::NonFiniteError& e) {
        return fail(PLM_ERR_NONFINITE, e.what());
    } catch (const projlmo::InputError& e) {
        return fail(PLM_ERR_INPUT, e.what());
    } catch (const projlmo::NumericalError& e) {
        return fail(PLM_ERR_NUMERICAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(PLM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(PLM_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(PLM_ERR_INTERNAL, "unknown error");
    }
}

projlmo::Vector read_vector(const plm_set* set, const double* x, size_t n) {
    if (n != set->set.dim())
        throw projlmo::DimensionError("expected dimension " + std::to_string(set->set.dim()) + ", got " +
                                      std::to_string(n));
    return projlmo::make_vector(std::span<const double>(x, n));
}

void write_vector(const projlmo::Vector& v, double* out) {
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i];
}

void fill_certificate(const projlmo::GapCertificate& c, std::optional<double> epsilon, plm_certificate* out) {
    out->gap = c.gap;
    out->raw_gap = c.raw_gap;
    out->bound = c.bound.value_or(kAbsent);
    out->lambda = c.lambda.value_or(kAbsent);
    out->epsilon = epsilon.value_or(kAbsent);
    out->tolerance = c.tolerance;
    out->relaxed = c.relaxed ? 1 : 0;
}

void fill_command(projlmo::CommandOutput&& output, plm_command_result* result) {
    result->exit_code = output.exit_code;
    result->output = new plm_text{std::move(output.text)};
    result->notes = new plm_text{std::move(output.notes)};
}

void reset_command(plm_command_result* result) {
    result->exit_code = projlmo::kExitUsage;
    result->output = nullptr;
    result->notes = nullptr;
}

}  // namespace

extern "C" {

const char* plm_version(void) { return "1.0.0"; }

const char* plm_last_error(void) { return last_error.c_str(); }

const char* plm_status_string(plm_status status) {
    switch (status) {
        case PLM_OK: return "ok";
        case PLM_ERR_NULL: return "null argument";
        case PLM_ERR_INPUT: return "invalid input";
        case PLM_ERR_DIMENSION: return "dimension mismatch";
        case PLM_ERR_NONFINITE: return "non-finite value";
        case PLM_ERR_NUMERICAL: return "numerical check failed";
        case PLM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

plm_status plm_set_parse(const char* spec, plm_set** out) {
    if (spec == nullptr || out == nullptr) return fail(PLM_ERR_NULL, "null argument");
    *out = nullptr;
    return guarded([&] {
        projlmo::ConvexSet set(projlmo::parse_set_spec(spec));
        std::string kind(projlmo::kind_name(set.descriptor()));
        *out = new plm_set{std::move(set), std::move(kind)};
    });
}

void plm_set_free(plm_set* set) { delete set; }

plm_status plm_set_dim(const plm_set* set, size_t* dim) {
    if (set == nullptr || dim == nullptr) return fail(PLM_ERR_NULL, "null argument");
    *dim = set->set.dim();
    return PLM_OK;
}

plm_status plm_set_kind(const plm_set* set, const char** kind) {
    if (set == nullptr || kind == nullptr) return fail(PLM_ERR_NULL, "null argument");
    *kind = set->kind.c_str();
    return PLM_OK;
}

plm_status plm_set_constants(const plm_set* set, double* diameter, double* norm_bound) {
    if (set == nullptr || diameter == nullptr || norm_bound == nullptr) return fail(PLM_ERR_NULL, "null argument");
    *diameter = set->set.constants().diameter;
    *norm_bound = set->set.constants().norm_bound;
    return PLM_OK;
}

plm_status plm_set_format(const plm_set* set, plm_text** out) {
    if (set == nullptr || out == nullptr) return fail(PLM_ERR_NULL, "null argument");
    return guarded([&] { *out = new plm_text{projlmo::format_set_spec(set->set.descriptor())}; });
}

plm_status plm_project(const plm_set* set, const double* x, size_t n, double* out) {
    if (set == nullptr || x == nullptr || out == nullptr) return fail(PLM_ERR_NULL, "null argument");
    return guarded([&] { write_vector(set->set.project(read_vector(set, x, n)), out); });
}

plm_status plm_lmo(const plm_set* set, const double* x, size_t n, double* out) {
    if (set == nullptr || x == nullptr || out == nullptr) return fail(PLM_ERR_NULL, "null argument");
    return guarded([&] { write_vector(set->set.lmo(read_vector(set, x, n)), out); });
}

plm_status plm_contains(const plm_set* set, const double* x, size_t n, double tol, int* inside) {
    if (set == nullptr || x == nullptr || inside == nullptr) return fail(PLM_ERR_NULL, "null argument");
    return guarded([&] {
        if (!(tol >= 0.0)) throw projlmo::InputError("tolerance must be nonnegative");
        *inside = set->set.contains(read_vector(set, x, n), tol) ? 1 : 0;
    });
}

plm_status plm_min_linear_value(const plm_set* set, const double* x, size_t n, double* value) {
    if (set == nullptr || x == nullptr || value == nullptr) return fail(PLM_ERR_NULL, "null argument");
    return guarded([&] {
        const projlmo::Vector direction = read_vector(set, x, n);
        projlmo::validate_vector(direction, "direction");
        *value = projlmo::min_linear_value(set->set.descriptor(), direction);
    });
}

plm_status plm_choose_lambda(const plm_set* set, double epsilon, double* lambda) {
    if (set == nullptr || lambda == nullptr) return fail(PLM_ERR_NULL, "null argument");
    return guarded([&] { *lambda = projlmo::choose_lambda(set->set.constants(), epsilon); });
}

plm_status plm_gap(const plm_set* set, const double* candidate, const double* x, size_t n, double* gap) {
    if (set == nullptr || candidate == nullptr || x == nullptr || gap == nullptr)
        return fail(PLM_ERR_NULL, "null argument");
    return guarded([&] { *gap = projlmo::gap(set->set, read_vector(set, candidate, n), read_vector(set, x, n)); });
}

plm_status plm_approx_lmo(const plm_set* set, const double* x, size_t n, double epsilon, double* point,
                          plm_certificate* cert) {
    if (set == nullptr || x == nullptr || point == nullptr || cert == nullptr)
        return fail(PLM_ERR_NULL, "null argument");
    return guarded([&] {
        const auto r = projlmo::approx_lmo(set->set, read_vector(set, x, n), epsilon);
        write_vector(r.point, point);
        fill_certificate(r.certificate, r.epsilon, cert);
    });
}

plm_status plm_approx_lmo_with_lambda(const plm_set* set, const double* x, size_t n, double lambda, double* point,
                                      plm_certificate* cert) {
    if (set == nullptr || x == nullptr || point == nullptr || cert == nullptr)
        return fail(PLM_ERR_NULL, "null argument");
    return guarded([&] {
        const auto r = projlmo::approx_lmo_with_lambda(set->set, read_vector(set, x, n), lambda);
        write_vector(r.point, point);
        fill_certificate(r.certificate, r.epsilon, cert);
    });
}

plm_status plm_check_projlmo_identity(const plm_set* set, const double* x, size_t n, plm_certificate* cert) {
    if (set == nullptr || x == nullptr || cert == nullptr) return fail(PLM_ERR_NULL, "null argument");
    return guarded([&] {
        fill_certificate(projlmo::check_projlmo_identity(set->set, read_vector(set, x, n)), std::nullopt, cert);
    });
}

plm_status plm_lambda_star(const plm_set* set, const double* x, size_t n, double tol_exact, double lambda0,
                           int max_doublings, double* point, plm_lambda_star_result* result) {
    if (set == nullptr || x == nullptr || point == nullptr || result == nullptr)
        return fail(PLM_ERR_NULL, "null argument");
    return guarded([&] {
        const auto poly = projlmo::as_polytope(set->set.descriptor());
        if (!poly) throw projlmo::InputError("set has no practical vertex representation");
        const projlmo::ConvexSet polytope(*poly);
        projlmo::LambdaStarOptions options;
        options.tol_exact = tol_exact;
        options.lambda0 = lambda0;
        options.max_doublings = max_doublings;
        const auto r = projlmo::lambda_star_search(polytope, read_vector(set, x, n), options);
        write_vector(r.point, point);
        *result = {r.lambda_star, r.exactness_gap,      r.tol_exact,         r.min_norm_distance,
                   r.exact ? 1 : 0, r.min_norm_match ? 1 : 0, r.search_iterations};
    });
}

plm_status plm_mnp_project(const double* vertices, size_t count, size_t dim, const double* x, double tol,
                           size_t max_iter, double* point, double* weights, int* converged) {
    if (vertices == nullptr || x == nullptr || point == nullptr || converged == nullptr)
        return fail(PLM_ERR_NULL, "null argument");
    return guarded([&] {
        if (count == 0 || dim == 0) throw projlmo::InputError("mnp: empty vertex list");
        std::vector<projlmo::Vector> list;
        for (size_t i = 0; i < count; ++i)
            list.push_back(projlmo::make_vector(std::span<const double>(vertices + i * dim, dim)));
        projlmo::MnpOptions options;
        if (tol > 0.0) options.tol = tol;
        options.max_iter = max_iter;
        const auto r = projlmo::mnp_project(list, projlmo::make_vector(std::span<const double>(x, dim)), options);
        write_vector(r.point, point);
        if (weights != nullptr)
            for (size_t i = 0; i < count; ++i) weights[i] = r.weights[i];
        *converged = r.converged ? 1 : 0;
    });
}

plm_status plm_run_verify(const plm_verify_config* config, plm_command_result* result) {
    if (config == nullptr || result == nullptr) return fail(PLM_ERR_NULL, "null argument");
    reset_command(result);
    return guarded([&] {
        projlmo::VerifyConfig cfg;
        if (config->set != nullptr) cfg.set = config->set->set.descriptor();
        cfg.seed = config->seed;
        cfg.trials = config->trials;
        cfg.threads = config->threads;
        fill_command(projlmo::cmd_verify(cfg), result);
    });
}

plm_status plm_run_sweep(const plm_set* set, const double* x, size_t n, const char* lambda_grid,
                         plm_command_result* result) {
    if (set == nullptr || x == nullptr || lambda_grid == nullptr || result == nullptr)
        return fail(PLM_ERR_NULL, "null argument");
    reset_command(result);
    return guarded([&] {
        projlmo::SweepConfig cfg{set->set.descriptor(), read_vector(set, x, n),
                                 projlmo::parse_lambda_grid(lambda_grid)};
        fill_command(projlmo::cmd_sweep(cfg), result);
    });
}

plm_status plm_run_lambdastar(const plm_set* set, const double* x, size_t n, double tol_exact, double lambda0,
                              int max_doublings, plm_command_result* result) {
    if (set == nullptr || x == nullptr || result == nullptr) return fail(PLM_ERR_NULL, "null argument");
    reset_command(result);
    return guarded([&] {
        projlmo::LambdaStarConfig cfg{set->set.descriptor(), read_vector(set, x, n), {}};
        cfg.options.tol_exact = tol_exact;
        cfg.options.lambda0 = lambda0;
        cfg.options.max_doublings = max_doublings;
        fill_command(projlmo::cmd_lambdastar(cfg), result);
    });
}

plm_status plm_run_fw(const plm_set* set, const double* target, size_t n, plm_eps_schedule schedule,
                      double eps_scale, size_t max_iter, double stop_gap, plm_command_result* result) {
    if (set == nullptr || target == nullptr || result == nullptr) return fail(PLM_ERR_NULL, "null argument");
    reset_command(result);
    return guarded([&] {
        projlmo::FwConfig cfg;
        cfg.problem.set = set->set.descriptor();
        cfg.problem.target = read_vector(set, target, n);
        switch (schedule) {
            case PLM_EPS_EXACT: cfg.problem.schedule.kind = projlmo::EpsilonSchedule::Kind::exact; break;
            case PLM_EPS_CONSTANT: cfg.problem.schedule.kind = projlmo::EpsilonSchedule::Kind::constant; break;
            case PLM_EPS_HARMONIC: cfg.problem.schedule.kind = projlmo::EpsilonSchedule::Kind::harmonic; break;
            default: throw projlmo::InputError("unknown epsilon schedule");
        }
        cfg.problem.schedule.scale = eps_scale;
        cfg.options.max_iter = max_iter;
        cfg.options.stop_gap = stop_gap;
        fill_command(projlmo::cmd_fw(cfg), result);
    });
}

plm_status plm_run_bench(const plm_set* set, uint64_t seed, size_t trials, double epsilon,
                         plm_command_result* result) {
    if (set == nullptr || result == nullptr) return fail(PLM_ERR_NULL, "null argument");
    reset_command(result);
    return guarded([&] {
        projlmo::BenchConfig cfg{set->set.descriptor(), seed, trials, epsilon};
        fill_command(projlmo::cmd_bench(cfg), result);
    });
}

void plm_command_result_free(plm_command_result* result) {
    if (result == nullptr) return;
    delete result->output;
    delete result->notes;
    result->output = nullptr;
    result->notes = nullptr;
}

const char* plm_text_data(const plm_text* text) { return text == nullptr ? "" : text->value.c_str(); }

size_t plm_text_size(const plm_text* text) { return text == nullptr ? 0 : text->value.size(); }

void plm_text_free(plm_text* text) { delete text; }

}  // extern "C"
