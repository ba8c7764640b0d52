#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "projlmo/projlmo.h"

#include <cmath>
#include <cstring>
#include <string>
#include <thread>
#include <vector>

namespace {

struct Set {
    plm_set* handle = nullptr;
    explicit Set(const char* spec) { REQUIRE(plm_set_parse(spec, &handle) == PLM_OK); }
    ~Set() { plm_set_free(handle); }
};

std::string text_of(const plm_text* text) { return std::string(plm_text_data(text), plm_text_size(text)); }

}  // namespace

TEST_CASE("set lifecycle and queries") {
    Set set("ball2 c=2,2 r=1");
    size_t dim = 0;
    CHECK(plm_set_dim(set.handle, &dim) == PLM_OK);
    CHECK(dim == 2);
    const char* kind = nullptr;
    CHECK(plm_set_kind(set.handle, &kind) == PLM_OK);
    CHECK(std::string(kind) == "ball2");
    double diameter = 0, norm = 0;
    CHECK(plm_set_constants(set.handle, &diameter, &norm) == PLM_OK);
    CHECK(diameter == doctest::Approx(2.0));
    CHECK(norm == doctest::Approx(std::sqrt(8.0) + 1.0));
    plm_text* text = nullptr;
    CHECK(plm_set_format(set.handle, &text) == PLM_OK);
    CHECK(text_of(text) == "ball2 c=2,2 r=1");
    plm_text_free(text);
    plm_set_free(nullptr);
    CHECK(std::strlen(plm_version()) > 0);
}

TEST_CASE("parse errors set status and message") {
    plm_set* handle = nullptr;
    CHECK(plm_set_parse("box l=1,0 u=0,1", &handle) == PLM_ERR_INPUT);
    CHECK(handle == nullptr);
    CHECK(std::strlen(plm_last_error()) > 0);
    CHECK(plm_set_parse(nullptr, &handle) == PLM_ERR_NULL);
    CHECK(plm_set_parse("simplex n=2", nullptr) == PLM_ERR_NULL);
    CHECK(std::string(plm_status_string(PLM_ERR_DIMENSION)).size() > 0);
}

TEST_CASE("oracles") {
    Set set("simplex n=3");
    const double x[] = {3.0, 1.0, 2.0};
    double out[3];
    CHECK(plm_lmo(set.handle, x, 3, out) == PLM_OK);
    CHECK(out[1] == 1.0);
    CHECK(plm_project(set.handle, x, 3, out) == PLM_OK);
    CHECK(out[0] == doctest::Approx(1.0));
    int inside = 0;
    CHECK(plm_contains(set.handle, out, 3, 1e-12, &inside) == PLM_OK);
    CHECK(inside == 1);
    double value = 0;
    CHECK(plm_min_linear_value(set.handle, x, 3, &value) == PLM_OK);
    CHECK(value == 1.0);

    CHECK(plm_project(set.handle, x, 2, out) == PLM_ERR_DIMENSION);
    const double bad[] = {1.0, NAN, 0.0};
    CHECK(plm_lmo(set.handle, bad, 3, out) == PLM_ERR_NONFINITE);
    CHECK(plm_project(nullptr, x, 3, out) == PLM_ERR_NULL);
}

TEST_CASE("reduction") {
    Set linf("linf n=2 r=1");
    double lambda = 0;
    CHECK(plm_choose_lambda(linf.handle, 0.1, &lambda) == PLM_OK);
    CHECK(lambda == doctest::Approx(20.0));
    CHECK(plm_choose_lambda(linf.handle, 0.0, &lambda) == PLM_ERR_INPUT);

    const double x[] = {1.0, 1.0};
    double gap = -1;
    CHECK(plm_gap(linf.handle, x, x, 2, &gap) == PLM_OK);
    CHECK(gap == doctest::Approx(4.0));
    const double outside[] = {2.0, 0.0};
    CHECK(plm_gap(linf.handle, outside, x, 2, &gap) == PLM_ERR_INPUT);

    double point[2];
    plm_certificate cert{};
    CHECK(plm_approx_lmo(linf.handle, x, 2, 0.1, point, &cert) == PLM_OK);
    CHECK(point[0] == -1.0);
    CHECK(cert.gap == 0.0);
    CHECK(cert.epsilon == 0.1);

    Set ball("ball2 c=2,2 r=1");
    const double e1[] = {1.0, 0.0};
    CHECK(plm_approx_lmo_with_lambda(ball.handle, e1, 2, 100.0, point, &cert) == PLM_OK);
    CHECK(cert.gap == doctest::Approx(1.92e-4).epsilon(1e-2));
    CHECK(cert.bound == doctest::Approx(3.87e-4).epsilon(1e-2));
    CHECK(std::isnan(cert.epsilon));
    CHECK(cert.relaxed == 0);

    const double y[] = {3.0, 4.0};
    CHECK(plm_check_projlmo_identity(ball.handle, y, 2, &cert) == PLM_OK);
    CHECK(cert.gap <= cert.tolerance);
}

TEST_CASE("lambda star and mnp") {
    Set linf("linf n=2 r=1");
    const double x[] = {0.5, -0.25};
    double point[2];
    plm_lambda_star_result r{};
    CHECK(plm_lambda_star(linf.handle, x, 2, 0.0, 1.0, 64, point, &r) == PLM_OK);
    CHECK(r.lambda_star == 4.0);
    CHECK(r.exact == 1);
    CHECK(r.min_norm_match == 1);
    CHECK(point[0] == -1.0);
    CHECK(point[1] == 1.0);

    const double vertices[] = {1.0, 0.0, 0.0, 1.0};
    const double target[] = {1.0, 1.0};
    double weights[2];
    int converged = 0;
    CHECK(plm_mnp_project(vertices, 2, 2, target, 0.0, 0, point, weights, &converged) == PLM_OK);
    CHECK(converged == 1);
    CHECK(point[0] == doctest::Approx(0.5));
    CHECK(weights[1] == doctest::Approx(0.5));
    CHECK(plm_mnp_project(vertices, 0, 2, target, 0.0, 0, point, nullptr, &converged) != PLM_OK);
}

TEST_CASE("commands") {
    Set ball("ball2 c=2,2 r=1");
    const double x[] = {1.0, 0.0};
    plm_command_result result{};
    CHECK(plm_run_sweep(ball.handle, x, 2, "1:1e6:7", &result) == PLM_OK);
    CHECK(result.exit_code == 0);
    CHECK(text_of(result.output).rfind("lambda,gap,thm1_bound,eps_from_eq6\n", 0) == 0);
    plm_command_result_free(&result);
    CHECK(result.output == nullptr);

    CHECK(plm_run_sweep(ball.handle, x, 2, "bad", &result) == PLM_ERR_INPUT);

    plm_verify_config config{ball.handle, 3, 100, 1};
    CHECK(plm_run_verify(&config, &result) == PLM_OK);
    CHECK(result.exit_code == 0);
    plm_command_result_free(&result);

    config.trials = 0;
    CHECK(plm_run_verify(&config, &result) == PLM_ERR_INPUT);

    CHECK(plm_run_fw(ball.handle, x, 2, PLM_EPS_HARMONIC, 1.0, 100, 1e-10, &result) == PLM_OK);
    CHECK(text_of(result.notes).find("solution: ") == 0);
    plm_command_result_free(&result);

    CHECK(plm_run_bench(ball.handle, 1, 0, 1e-3, &result) == PLM_ERR_INPUT);
}

TEST_CASE("last error is per thread") {
    plm_set* handle = nullptr;
    CHECK(plm_set_parse("nonsense", &handle) != PLM_OK);
    const std::string main_error = plm_last_error();
    std::string other;
    std::thread([&] { other = plm_last_error(); }).join();
    CHECK(other.empty());
    CHECK(plm_last_error() == main_error);
}
