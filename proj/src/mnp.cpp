#include "projlmo/mnp.hpp"

#include "projlmo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace projlmo {

namespace {

struct ActiveSet {
    std::vector<std::size_t> index;
    std::vector<double> weight;
};

Vector combine(std::span<const Vector> vertices, const ActiveSet& active) {
    Vector point = Vector::Zero(vertices.front().size());
    for (std::size_t k = 0; k < active.index.size(); ++k) point += active.weight[k] * vertices[active.index[k]];
    return point;
}

// Affine weights of the point of aff(active vertices) nearest to x.
std::vector<double> affine_weights(std::span<const Vector> vertices, const std::vector<std::size_t>& index,
                                   const Vector& x) {
    const std::size_t count = index.size();
    if (count == 1) return {1.0};
    const Vector& base = vertices[index.front()];
    Eigen::MatrixXd edges(base.size(), static_cast<Eigen::Index>(count - 1));
    for (std::size_t k = 1; k < count; ++k) edges.col(static_cast<Eigen::Index>(k - 1)) = vertices[index[k]] - base;
    const Vector beta = edges.colPivHouseholderQr().solve(x - base);
    std::vector<double> alpha(count);
    alpha[0] = 1.0 - beta.sum();
    for (std::size_t k = 1; k < count; ++k) alpha[k] = beta[static_cast<Eigen::Index>(k - 1)];
    return alpha;
}

// Returns (argmin_j <z, v_j>, max_j <z, p - v_j>).
std::pair<std::size_t, double> most_violating(std::span<const Vector> vertices, const Vector& z, const Vector& p) {
    std::size_t best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < vertices.size(); ++j) {
        const double value = z.dot(vertices[j] - p);
        if (value < best_value) {
            best_value = value;
            best = j;
        }
    }
    return {best, -best_value};
}

void normalize(ActiveSet& active) {
    double total = 0.0;
    for (double w : active.weight) total += w;
    for (double& w : active.weight) w /= total;
}

}  // namespace

MnpResult mnp_project(std::span<const Vector> vertices, const Vector& x, const MnpOptions& options) {
    if (vertices.empty()) throw InputError("mnp: empty vertex list");
    validate_vector(x, "mnp input");
    for (const auto& v : vertices) validate_vector(v, dim_of(x), "mnp vertex");
    if (!(options.tol > 0.0)) throw InputError("mnp: tolerance must be positive");

    const std::size_t max_iter =
        options.max_iter > 0 ? options.max_iter : 100 * (dim_of(x) + vertices.size());
    const double scale = 1.0 + x.norm();

    std::size_t start = 0;
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if ((vertices[i] - x).squaredNorm() < (vertices[start] - x).squaredNorm()) start = i;

    ActiveSet active{{start}, {1.0}};
    Vector point = vertices[start];
    MnpResult result;

    bool budget_left = true;
    while (budget_left) {
        const Vector z = point - x;
        const double distance = z.norm();
        result.distance_history.push_back(distance);
        result.max_active = std::max(result.max_active, active.index.size());

        const auto [entering, certificate] = most_violating(vertices, z, point);
        double spread = 0.0;
        for (const auto& v : vertices) spread = std::max(spread, (v - point).norm());
        // Below this the certificate is rounding noise.
        const double noise = 1e-14 * (1.0 + distance) * (1.0 + spread);
        if (certificate <= std::min(noise, options.tol * scale)) break;
        if (std::find(active.index.begin(), active.index.end(), entering) != active.index.end()) break;

        const ActiveSet previous = active;
        active.index.push_back(entering);
        active.weight.push_back(0.0);

        // Minor cycles: move toward the affine minimizer without leaving the simplex.
        while (true) {
            if (++result.iterations > max_iter) {
                budget_left = false;
                break;
            }
            const std::vector<double> alpha = affine_weights(vertices, active.index, x);
            if (std::all_of(alpha.begin(), alpha.end(), [](double a) { return a > 0.0; })) {
                active.weight = alpha;
                break;
            }
            double theta = std::numeric_limits<double>::infinity();
            std::size_t blocking = 0;
            for (std::size_t k = 0; k < alpha.size(); ++k) {
                if (alpha[k] > 0.0) continue;
                const double step = active.weight[k] / (active.weight[k] - alpha[k]);
                if (step < theta) {
                    theta = step;
                    blocking = k;
                }
            }
            for (std::size_t k = 0; k < alpha.size(); ++k)
                active.weight[k] += theta * (alpha[k] - active.weight[k]);
            active.weight[blocking] = 0.0;
            ActiveSet kept;
            for (std::size_t k = 0; k < alpha.size(); ++k) {
                if (active.weight[k] > 0.0) {
                    kept.index.push_back(active.index[k]);
                    kept.weight.push_back(active.weight[k]);
                }
            }
            if (kept.index.empty()) {
                kept = previous;
                active = kept;
                break;
            }
            active = std::move(kept);
            normalize(active);
        }
        normalize(active);

        Vector next = combine(vertices, active);
        if ((next - x).norm() > distance * (1.0 + 1e-15)) {
            // No descent: rounding stalled the cycle, keep the better iterate.
            active = previous;
            break;
        }
        point = std::move(next);
    }

    result.point = combine(vertices, active);
    result.weights.assign(vertices.size(), 0.0);
    for (std::size_t k = 0; k < active.index.size(); ++k) result.weights[active.index[k]] = active.weight[k];
    result.active = active.index;
    result.max_active = std::max(result.max_active, active.index.size());
    result.certificate = most_violating(vertices, result.point - x, result.point).second;
    result.converged = result.certificate <= options.tol * scale;
    return result;
}

MnpResult min_norm_point(std::span<const Vector> vertices, const MnpOptions& options) {
    if (vertices.empty()) throw InputError("mnp: empty vertex list");
    return mnp_project(vertices, Vector::Zero(vertices.front().size()), options);
}

}  // namespace projlmo
