#include "projlmo/fw.hpp"

#include "projlmo/errors.hpp"
#include "projlmo/reduction.hpp"

#include <algorithm>

namespace projlmo {

double EpsilonSchedule::at(std::size_t k) const {
    switch (kind) {
        case Kind::exact: return 0.0;
        case Kind::constant: return scale;
        case Kind::harmonic: return scale / (static_cast<double>(k) + 2.0);
    }
    return 0.0;
}

FwResult fw_solve(const FwProblem& problem, const FwOptions& options) {
    const ConvexSet set(problem.set);
    validate_vector(problem.target, set.dim(), "fw target");
    if (problem.schedule.kind != EpsilonSchedule::Kind::exact && !(problem.schedule.scale > 0.0))
        throw InputError("fw: epsilon schedule scale must be positive");
    if (options.max_iter == 0) throw InputError("fw: max_iter must be positive");

    auto oracle = [&](const Vector& direction, double epsilon) {
        if (epsilon <= 0.0) return set.lmo(direction);
        return approx_lmo(set, direction, epsilon).point;
    };

    FwResult result;
    // Start from the oracle answer for the gradient at the origin.
    Vector z = oracle(-problem.target, problem.schedule.at(0));

    for (std::size_t k = 0; k < options.max_iter; ++k) {
        const Vector grad = z - problem.target;
        const double epsilon = problem.schedule.at(k);
        const Vector v = oracle(grad, epsilon);
        const Vector direction = v - z;
        const double fw_gap = -grad.dot(direction);
        result.trace.iterates.push_back({k, 0.5 * grad.squaredNorm(), fw_gap, epsilon});
        if (fw_gap + epsilon <= options.stop_gap) {
            result.converged = true;
            break;
        }
        const double length2 = direction.squaredNorm();
        if (length2 == 0.0) continue;
        const double step = std::clamp(fw_gap / length2, 0.0, 1.0);
        z += step * direction;
    }
    result.solution = std::move(z);
    return result;
}

}  // namespace projlmo
