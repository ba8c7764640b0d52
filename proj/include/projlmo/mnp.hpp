#pragma once

#include "projlmo/linalg.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace projlmo {

struct MnpOptions {
    /// Certificate tolerance; the result is certified when
    /// max_v <x - p, v - p> <= tol * (1 + ||x||).
    double tol = 1e-10;
    /// 0 selects 100 * (dim + vertex count).
    std::size_t max_iter = 0;
};

struct MnpResult {
    Vector point;
    /// One convex weight per input vertex; zero outside the final active set.
    std::vector<double> weights;
    std::vector<std::size_t> active;
    /// max_v <x - p, v - p> over all vertices at exit.
    double certificate = 0.0;
    bool converged = false;
    std::size_t iterations = 0;
    /// ||p - x|| at the end of every major cycle.
    std::vector<double> distance_history;
    /// Largest active-set size observed after a major cycle.
    std::size_t max_active = 0;
};

/// Euclidean projection of x onto conv(vertices) by Wolfe's minimum-norm-point
/// method run on the translated points v_i - x.
///
/// The affine subproblem on the active set is solved as a least-squares
/// problem over edge differences v_i - v_0 (Householder QR), which keeps
/// the solve well conditioned when x is far from the hull.
///
/// Throws InputError for an empty vertex list or inconsistent dimensions.
MnpResult mnp_project(std::span<const Vector> vertices, const Vector& x,
                      const MnpOptions& options = {});

/// Minimum-norm point of conv(vertices), i.e. mnp_project with x = 0.
MnpResult min_norm_point(std::span<const Vector> vertices, const MnpOptions& options = {});

}  // namespace projlmo
