#include "projlmo/sets.hpp"

#include "projlmo/errors.hpp"
#include "projlmo/mnp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

namespace projlmo {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive_radius(double radius, std::string_view kind) {
    if (!std::isfinite(radius) || radius <= 0.0)
        throw InputError(std::string(kind) + ": radius must be positive and finite");
}

std::size_t validate(const SetDescriptor& set) {
    return std::visit(
        Overloaded{
            [](const Box& b) {
                validate_vector(b.lower, "box lower");
                validate_vector(b.upper, dim_of(b.lower), "box upper");
                for (Eigen::Index i = 0; i < b.lower.size(); ++i)
                    if (b.lower[i] > b.upper[i])
                        throw InputError("box: lower exceeds upper at coordinate " + std::to_string(i));
                return dim_of(b.lower);
            },
            [](const Ball2& b) {
                validate_vector(b.center, "ball2 center");
                require_positive_radius(b.radius, "ball2");
                return dim_of(b.center);
            },
            [](const Ball1& b) {
                if (b.dim == 0) throw InputError("ball1: dimension must be at least 1");
                require_positive_radius(b.radius, "ball1");
                return b.dim;
            },
            [](const BallInf& b) {
                if (b.dim == 0) throw InputError("linf: dimension must be at least 1");
                require_positive_radius(b.radius, "linf");
                return b.dim;
            },
            [](const Simplex& s) {
                if (s.dim == 0) throw InputError("simplex: dimension must be at least 1");
                return s.dim;
            },
            [](const PolytopeV& p) {
                if (p.vertices.empty()) throw InputError("polytope: at least one vertex required");
                validate_vector(p.vertices.front(), "polytope vertex");
                const std::size_t n = dim_of(p.vertices.front());
                for (const auto& v : p.vertices) validate_vector(v, n, "polytope vertex");
                return n;
            },
            [](const Singleton& s) {
                validate_vector(s.point, "point");
                return dim_of(s.point);
            },
        },
        set);
}

// sgn with sgn(0) = 1, so zero coordinates pick the lower face.
double sign_up(double value) { return value < 0.0 ? -1.0 : 1.0; }

std::size_t argmin_index(const Vector& values) {
    std::size_t best = 0;
    for (Eigen::Index i = 1; i < values.size(); ++i)
        if (values[i] < values[static_cast<Eigen::Index>(best)]) best = static_cast<std::size_t>(i);
    return best;
}

Vector project_ball1(const Vector& x, double radius) {
    if (x.lpNorm<1>() <= radius) return x;
    Vector magnitude = project_simplex(x.cwiseAbs(), radius);
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (x[i] < 0.0) magnitude[i] = -magnitude[i];
    return magnitude;
}

}  // namespace

std::string_view kind_name(const SetDescriptor& set) {
    return std::visit(Overloaded{
                          [](const Box&) { return std::string_view("box"); },
                          [](const Ball2&) { return std::string_view("ball2"); },
                          [](const Ball1&) { return std::string_view("ball1"); },
                          [](const BallInf&) { return std::string_view("linf"); },
                          [](const Simplex&) { return std::string_view("simplex"); },
                          [](const PolytopeV&) { return std::string_view("polytope"); },
                          [](const Singleton&) { return std::string_view("point"); },
                      },
                      set);
}

Vector project_simplex(const Vector& x, double total) {
    // Threshold tau so that sum max(x_i - tau, 0) = total.
    std::vector<double> sorted(x.data(), x.data() + x.size());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double prefix = 0.0;
    double tau = 0.0;
    for (std::size_t j = 0; j < sorted.size(); ++j) {
        prefix += sorted[j];
        const double candidate = (prefix - total) / static_cast<double>(j + 1);
        if (sorted[j] - candidate > 0.0) tau = candidate;
    }
    return (x.array() - tau).cwiseMax(0.0).matrix();
}

SetConstants set_constants(const SetDescriptor& set) {
    return std::visit(
        Overloaded{
            [](const Box& b) {
                const Vector extent = b.lower.cwiseAbs().cwiseMax(b.upper.cwiseAbs());
                return SetConstants{(b.upper - b.lower).norm(), extent.norm()};
            },
            [](const Ball2& b) { return SetConstants{2.0 * b.radius, b.center.norm() + b.radius}; },
            [](const Ball1& b) {
                // Attained by the antipodal vertices +-r e_1.
                return SetConstants{2.0 * b.radius, b.radius};
            },
            [](const BallInf& b) {
                const double root_n = std::sqrt(static_cast<double>(b.dim));
                return SetConstants{2.0 * b.radius * root_n, b.radius * root_n};
            },
            [](const Simplex& s) {
                return SetConstants{s.dim > 1 ? std::sqrt(2.0) : 0.0, 1.0};
            },
            [](const PolytopeV& p) {
                SetConstants c;
                for (std::size_t i = 0; i < p.vertices.size(); ++i) {
                    c.norm_bound = std::max(c.norm_bound, p.vertices[i].norm());
                    for (std::size_t j = i + 1; j < p.vertices.size(); ++j)
                        c.diameter = std::max(c.diameter, (p.vertices[i] - p.vertices[j]).norm());
                }
                return c;
            },
            [](const Singleton& s) { return SetConstants{0.0, s.point.norm()}; },
        },
        set);
}

double min_linear_value(const SetDescriptor& set, const Vector& x) {
    return std::visit(
        Overloaded{
            [&](const Box& b) { return b.lower.cwiseProduct(x).cwiseMin(b.upper.cwiseProduct(x)).sum(); },
            [&](const Ball2& b) { return b.center.dot(x) - b.radius * x.norm(); },
            [&](const Ball1& b) { return -b.radius * x.lpNorm<Eigen::Infinity>(); },
            [&](const BallInf& b) { return -b.radius * x.lpNorm<1>(); },
            [&](const Simplex&) { return x.minCoeff(); },
            [&](const PolytopeV& p) {
                double best = std::numeric_limits<double>::infinity();
                for (const auto& v : p.vertices) best = std::min(best, v.dot(x));
                return best;
            },
            [&](const Singleton& s) { return s.point.dot(x); },
        },
        set);
}

std::optional<PolytopeV> as_polytope(const SetDescriptor& set, std::size_t max_box_dim) {
    auto corners = [max_box_dim](const Vector& lower, const Vector& upper) -> std::optional<PolytopeV> {
        const auto n = static_cast<std::size_t>(lower.size());
        if (n > max_box_dim) return std::nullopt;
        PolytopeV poly;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            Vector v(lower.size());
            for (std::size_t i = 0; i < n; ++i) {
                const auto k = static_cast<Eigen::Index>(i);
                v[k] = (mask >> i) & 1U ? upper[k] : lower[k];
            }
            poly.vertices.push_back(std::move(v));
        }
        return poly;
    };
    return std::visit(
        Overloaded{
            [&](const Box& b) { return corners(b.lower, b.upper); },
            [](const Ball2&) -> std::optional<PolytopeV> { return std::nullopt; },
            [](const Ball1& b) -> std::optional<PolytopeV> {
                PolytopeV poly;
                for (std::size_t i = 0; i < b.dim; ++i) {
                    for (double s : {1.0, -1.0}) {
                        Vector v = Vector::Zero(static_cast<Eigen::Index>(b.dim));
                        v[static_cast<Eigen::Index>(i)] = s * b.radius;
                        poly.vertices.push_back(std::move(v));
                    }
                }
                return poly;
            },
            [&](const BallInf& b) {
                const auto n = static_cast<Eigen::Index>(b.dim);
                return corners(Vector::Constant(n, -b.radius), Vector::Constant(n, b.radius));
            },
            [](const Simplex& s) -> std::optional<PolytopeV> {
                PolytopeV poly;
                const auto n = static_cast<Eigen::Index>(s.dim);
                for (Eigen::Index i = 0; i < n; ++i) poly.vertices.push_back(Vector::Unit(n, i));
                return poly;
            },
            [](const PolytopeV& p) -> std::optional<PolytopeV> { return p; },
            [](const Singleton& s) -> std::optional<PolytopeV> { return PolytopeV{{s.point}}; },
        },
        set);
}

ConvexSet::ConvexSet(SetDescriptor descriptor)
    : descriptor_(std::move(descriptor)), dim_(validate(descriptor_)), constants_(set_constants(descriptor_)) {}

double ConvexSet::tolerance(const Vector& x) const {
    return 1e-9 * (1.0 + x.norm()) * (1.0 + constants_.norm_bound);
}

Vector ConvexSet::project(const Vector& x) const {
    validate_vector(x, dim_, "project input");
    return std::visit(
        Overloaded{
            [&](const Box& b) -> Vector { return x.cwiseMax(b.lower).cwiseMin(b.upper); },
            [&](const Ball2& b) -> Vector {
                const Vector offset = x - b.center;
                const double distance = offset.norm();
                if (distance <= b.radius) return x;
                return b.center + (b.radius / distance) * offset;
            },
            [&](const Ball1& b) -> Vector { return project_ball1(x, b.radius); },
            [&](const BallInf& b) -> Vector { return x.cwiseMax(-b.radius).cwiseMin(b.radius); },
            [&](const Simplex&) -> Vector { return project_simplex(x); },
            [&](const PolytopeV& p) -> Vector { return mnp_project(p.vertices, x).point; },
            [&](const Singleton& s) -> Vector { return s.point; },
        },
        descriptor_);
}

Vector ConvexSet::lmo(const Vector& x) const {
    validate_vector(x, dim_, "lmo input");
    return std::visit(
        Overloaded{
            [&](const Box& b) -> Vector {
                Vector v(x.size());
                for (Eigen::Index i = 0; i < x.size(); ++i) v[i] = x[i] < 0.0 ? b.upper[i] : b.lower[i];
                return v;
            },
            [&](const Ball2& b) -> Vector {
                const double norm = x.norm();
                if (norm == 0.0) return b.center - b.radius * Vector::Unit(x.size(), 0);
                return b.center - (b.radius / norm) * x;
            },
            [&](const Ball1& b) -> Vector {
                const auto k = static_cast<Eigen::Index>(argmin_index(-x.cwiseAbs()));
                Vector v = Vector::Zero(x.size());
                v[k] = -b.radius * sign_up(x[k]);
                return v;
            },
            [&](const BallInf& b) -> Vector {
                return x.unaryExpr([r = b.radius](double xi) { return -r * sign_up(xi); });
            },
            [&](const Simplex&) -> Vector {
                return Vector::Unit(x.size(), static_cast<Eigen::Index>(argmin_index(x)));
            },
            [&](const PolytopeV& p) -> Vector {
                Vector values(static_cast<Eigen::Index>(p.vertices.size()));
                for (std::size_t i = 0; i < p.vertices.size(); ++i)
                    values[static_cast<Eigen::Index>(i)] = p.vertices[i].dot(x);
                return p.vertices[argmin_index(values)];
            },
            [&](const Singleton& s) -> Vector { return s.point; },
        },
        descriptor_);
}

bool ConvexSet::contains(const Vector& x, double tol) const {
    return (x - project(x)).norm() <= tol;
}

}  // namespace projlmo
