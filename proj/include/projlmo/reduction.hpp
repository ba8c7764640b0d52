#pragma once

#include "projlmo/linalg.hpp"
#include "projlmo/sets.hpp"

#include <cstddef>
#include <optional>

namespace projlmo {

/// Smallest scale used when the prescribed lambda would be zero.
inline constexpr double kLambdaMin = 1e-12;

/// Duality gap <point, x> - min_c <c, x> of a candidate, optionally with the
/// error bound ||p|| (||v|| - ||p||) / lambda attached.
struct GapCertificate {
    Vector point;
    Vector direction;
    double gap = 0.0;
    /// Gap before clamping at zero.
    double raw_gap = 0.0;
    std::optional<double> bound;
    std::optional<double> lambda;
    /// True when ||v|| was replaced by the norm bound because no exact LMO
    /// was available.
    bool relaxed = false;
    double tolerance = 0.0;

    bool lower_holds() const { return raw_gap >= -tolerance; }
    bool upper_holds() const { return !bound || gap <= *bound + tolerance; }
};

struct ApproxLmoResult {
    Vector point;
    double lambda = 0.0;
    /// Target accuracy; absent when lambda was supplied directly.
    std::optional<double> epsilon;
    GapCertificate certificate;
};

struct LambdaStarResult {
    double lambda_star = 0.0;
    Vector point;
    double exactness_gap = 0.0;
    double tol_exact = 0.0;
    bool exact = false;
    bool min_norm_match = false;
    /// ||point - minimal-norm element of the argmin face||.
    double min_norm_distance = 0.0;
    /// Number of projections evaluated.
    std::size_t search_iterations = 0;
};

/// min{diameter * norm_bound, norm_bound^2} / epsilon, floored at kLambdaMin.
/// Throws InputError unless epsilon > 0.
double choose_lambda(const SetConstants& constants, double epsilon);

/// <candidate, x> - <lmo(x), x>, clamped at zero once it is within
/// -tolerance. Throws InputError when the candidate lies outside the set.
double gap(const ConvexSet& set, const Vector& candidate, const Vector& x);

/// Full gap certificate of a candidate without the membership check.
GapCertificate gap_certificate(const ConvexSet& set, const Vector& candidate, const Vector& x);

/// Which value of ||v|| enters the error bound.
enum class BoundMode {
    /// ||lmo(x)||.
    exact_lmo,
    /// The set's norm bound; valid for every v in the set, flagged relaxed.
    norm_bound,
};

/// project(-lambda x) together with both sides of the error bound.
/// Throws InputError unless lambda > 0.
ApproxLmoResult approx_lmo_with_lambda(const ConvexSet& set, const Vector& x, double lambda,
                                       BoundMode mode = BoundMode::exact_lmo);

/// epsilon-approximate LMO from a single projection, lambda from choose_lambda.
ApproxLmoResult approx_lmo(const ConvexSet& set, const Vector& x, double epsilon,
                           BoundMode mode = BoundMode::exact_lmo);

/// Gap of project(x) as an LMO point for the direction project(x) - x.
/// The projection is always an exact minimizer, so the gap should vanish.
GapCertificate check_projlmo_identity(const ConvexSet& set, const Vector& x);

struct LambdaStarOptions {
    /// <= 0 selects 1e-9 * (1 + ||x||) * (1 + norm_bound).
    double tol_exact = 0.0;
    double lambda0 = 1.0;
    int max_doublings = 64;
    /// Tolerance on the minimal-norm comparison.
    double match_tol = 1e-7;
};

/// Doubles lambda from lambda0 until project(-lambda x) is a certified exact
/// LMO point, then compares it with the minimal-norm element of the argmin
/// face. Exhausting the doubling budget returns exact == false with the best
/// lambda tried. Throws InputError unless the set is a PolytopeV.
LambdaStarResult lambda_star_search(const ConvexSet& set, const Vector& x,
                                    const LambdaStarOptions& options = {});

}  // namespace projlmo
