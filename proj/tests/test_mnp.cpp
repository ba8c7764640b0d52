#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "projlmo/errors.hpp"
#include "projlmo/mnp.hpp"
#include "projlmo/random_instances.hpp"
#include "projlmo/sets.hpp"

#include <cmath>
#include <numeric>

using namespace projlmo;

namespace {

double weight_sum(const MnpResult& r) { return std::accumulate(r.weights.begin(), r.weights.end(), 0.0); }

Vector combine(const std::vector<Vector>& vertices, const std::vector<double>& weights) {
    Vector p = Vector::Zero(vertices.front().size());
    for (std::size_t i = 0; i < vertices.size(); ++i) p += weights[i] * vertices[i];
    return p;
}

}  // namespace

TEST_CASE("examples") {
    const std::vector<Vector> segment = {make_vector({1.0, 0.0}), make_vector({0.0, 1.0})};
    auto r = mnp_project(segment, make_vector({1.0, 1.0}));
    CHECK(r.converged);
    CHECK((r.point - make_vector({0.5, 0.5})).norm() <= 1e-12);

    r = min_norm_point(segment);
    CHECK((r.point - make_vector({0.5, 0.5})).norm() <= 1e-12);
    CHECK(r.weights[0] == doctest::Approx(0.5));
    CHECK(r.weights[1] == doctest::Approx(0.5));

    const std::vector<Vector> top = {make_vector({-1.0, 1.0}), make_vector({1.0, 1.0})};
    r = min_norm_point(top);
    CHECK((r.point - make_vector({0.0, 1.0})).norm() <= 1e-12);
}

TEST_CASE("single vertex and interior points") {
    const std::vector<Vector> one = {make_vector({2.0, -1.0})};
    auto r = mnp_project(one, make_vector({5.0, 5.0}));
    CHECK(r.converged);
    CHECK(r.point == one[0]);
    CHECK(r.weights[0] == 1.0);

    const std::vector<Vector> triangle = {make_vector({0.0, 0.0}), make_vector({1.0, 0.0}), make_vector({0.0, 1.0})};
    r = mnp_project(triangle, make_vector({0.2, 0.3}));
    CHECK(r.converged);
    CHECK((r.point - make_vector({0.2, 0.3})).norm() <= 1e-12);
}

TEST_CASE("duplicate and collinear vertices") {
    const std::vector<Vector> dup = {make_vector({1.0, 0.0}), make_vector({1.0, 0.0}), make_vector({0.0, 1.0}),
                                     make_vector({0.5, 0.5})};
    const auto r = min_norm_point(dup);
    CHECK(r.converged);
    CHECK((r.point - make_vector({0.5, 0.5})).norm() <= 1e-10);
    CHECK(weight_sum(r) == doctest::Approx(1.0));
}

TEST_CASE("errors") {
    const std::vector<Vector> none;
    CHECK_THROWS_AS(mnp_project(none, make_vector({1.0})), InputError);
    const std::vector<Vector> mixed = {make_vector({1.0}), make_vector({1.0, 2.0})};
    CHECK_THROWS_AS(mnp_project(mixed, make_vector({1.0})), InputError);
    const std::vector<Vector> fine = {make_vector({1.0, 0.0})};
    CHECK_THROWS_AS(mnp_project(fine, make_vector({1.0})), InputError);
}

TEST_CASE("agrees with subset enumeration on random polytopes") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        InstanceRanges ranges;
        ranges.polytope_max_dim = 4;
        ranges.polytope_max_vertices = 8;
        const auto poly = std::get<PolytopeV>(random_set(SetFamily::polytope, rng, ranges));
        const Vector x = 2.0 * random_gaussian(static_cast<std::size_t>(poly.vertices.front().size()), rng);
        const auto r = mnp_project(poly.vertices, x);
        CHECK(r.converged);
        CHECK((r.point - oracles::polytope_projection_by_enumeration(poly.vertices, x)).norm() <= 1e-8);
    }
}

TEST_CASE("weights, certificate and descent on random polytopes") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 500; ++trial) {
        const auto poly = std::get<PolytopeV>(random_set(SetFamily::polytope, rng));
        const auto dim = static_cast<std::size_t>(poly.vertices.front().size());
        const Vector x = 3.0 * random_gaussian(dim, rng);
        const auto r = mnp_project(poly.vertices, x);
        REQUIRE(r.converged);
        CHECK(r.weights.size() == poly.vertices.size());
        for (double w : r.weights) CHECK(w >= 0.0);
        CHECK(weight_sum(r) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((combine(poly.vertices, r.weights) - r.point).norm() <= 1e-10 * (1.0 + x.norm()));
        CHECK(r.max_active <= dim + 1);
        // Certificate recomputed directly from the vertex list.
        double cert = -1e300;
        for (const auto& v : poly.vertices) cert = std::max(cert, (x - r.point).dot(v - r.point));
        CHECK(cert <= 1e-10 * (1.0 + x.norm()));
        for (std::size_t i = 1; i < r.distance_history.size(); ++i)
            CHECK(r.distance_history[i] <= r.distance_history[i - 1] * (1.0 + 1e-12) + 1e-15);
    }
}

TEST_CASE("matches closed-form projection on simplex and box") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        const SetFamily family = trial % 2 == 0 ? SetFamily::simplex : SetFamily::box;
        const SetDescriptor set = random_set(family, 1 + static_cast<std::size_t>(trial % 6), rng);
        const ConvexSet closed(set);
        const auto poly = as_polytope(set);
        REQUIRE(poly);
        const Vector x = 2.0 * random_gaussian(closed.dim(), rng);
        CHECK((mnp_project(poly->vertices, x).point - closed.project(x)).norm() <= 1e-8);
    }
}
