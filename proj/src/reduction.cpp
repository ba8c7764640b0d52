#include "projlmo/reduction.hpp"

#include "projlmo/errors.hpp"
#include "projlmo/mnp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace projlmo {

double choose_lambda(const SetConstants& constants, double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw InputError("epsilon must be positive and finite");
    const double numerator = std::min(constants.diameter * constants.norm_bound,
                                      constants.norm_bound * constants.norm_bound);
    return std::max(numerator / epsilon, kLambdaMin);
}

GapCertificate gap_certificate(const ConvexSet& set, const Vector& candidate, const Vector& x) {
    validate_vector(x, set.dim(), "gap direction");
    validate_vector(candidate, set.dim(), "gap candidate");
    GapCertificate cert;
    cert.point = candidate;
    cert.direction = x;
    cert.tolerance = set.tolerance(x);
    cert.raw_gap = (candidate - set.lmo(x)).dot(x);
    if (!cert.lower_holds())
        throw NumericalError("gap " + std::to_string(cert.raw_gap) + " below the oracle minimum");
    cert.gap = std::max(cert.raw_gap, 0.0);
    return cert;
}

double gap(const ConvexSet& set, const Vector& candidate, const Vector& x) {
    validate_vector(candidate, set.dim(), "gap candidate");
    if (!set.contains(candidate, 1e-9 * (1.0 + set.constants().norm_bound)))
        throw InputError("gap: candidate lies outside the set");
    return gap_certificate(set, candidate, x).gap;
}

ApproxLmoResult approx_lmo_with_lambda(const ConvexSet& set, const Vector& x, double lambda, BoundMode mode) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InputError("lambda must be positive and finite");
    validate_vector(x, set.dim(), "approx_lmo direction");

    ApproxLmoResult result;
    result.lambda = lambda;
    result.point = set.project(-lambda * x);
    result.certificate = gap_certificate(set, result.point, x);

    const double p_norm = result.point.norm();
    const bool relaxed = mode == BoundMode::norm_bound;
    const double v_norm = relaxed ? set.constants().norm_bound : set.lmo(x).norm();
    // Clamped: rounding can push ||p|| a hair above ||v|| when p == v.
    result.certificate.bound = std::max(p_norm * (v_norm - p_norm) / lambda, 0.0);
    result.certificate.lambda = lambda;
    result.certificate.relaxed = relaxed;
    return result;
}

ApproxLmoResult approx_lmo(const ConvexSet& set, const Vector& x, double epsilon, BoundMode mode) {
    ApproxLmoResult result = approx_lmo_with_lambda(set, x, choose_lambda(set.constants(), epsilon), mode);
    result.epsilon = epsilon;
    return result;
}

GapCertificate check_projlmo_identity(const ConvexSet& set, const Vector& x) {
    const Vector p = set.project(x);
    return gap_certificate(set, p, p - x);
}

LambdaStarResult lambda_star_search(const ConvexSet& set, const Vector& x, const LambdaStarOptions& options) {
    const auto* polytope = std::get_if<PolytopeV>(&set.descriptor());
    if (polytope == nullptr) throw InputError("lambda-star search requires a polytope given by vertices");
    validate_vector(x, set.dim(), "lambda-star direction");
    if (!(options.lambda0 > 0.0)) throw InputError("lambda0 must be positive");
    if (options.max_doublings < 0) throw InputError("max_doublings must be nonnegative");

    LambdaStarResult result;
    result.tol_exact = options.tol_exact > 0.0 ? options.tol_exact : set.tolerance(x);

    double lambda = options.lambda0;
    double best_gap = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= options.max_doublings; ++k, lambda *= 2.0) {
        Vector p = set.project(-lambda * x);
        const double g = gap_certificate(set, p, x).gap;
        ++result.search_iterations;
        if (g < best_gap) {
            best_gap = g;
            result.lambda_star = lambda;
            result.point = std::move(p);
            result.exactness_gap = g;
        }
        if (g <= result.tol_exact) {
            result.exact = true;
            break;
        }
    }
    if (!result.exact) return result;

    // Minimal-norm element of the argmin face conv{v : <v, x> = min}.
    const auto& vertices = polytope->vertices;
    double minimum = std::numeric_limits<double>::infinity();
    for (const auto& v : vertices) minimum = std::min(minimum, v.dot(x));
    std::vector<Vector> face;
    const double face_tol = 1e-12 * (1.0 + x.norm()) * (1.0 + set.constants().norm_bound);
    for (const auto& v : vertices)
        if (v.dot(x) <= minimum + face_tol) face.push_back(v);
    const MnpResult nearest = min_norm_point(face);
    result.min_norm_distance = (result.point - nearest.point).norm();
    result.min_norm_match = result.min_norm_distance <= options.match_tol;
    return result;
}

}  // namespace projlmo
