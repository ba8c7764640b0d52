#include "projlmo/random_instances.hpp"

#include <cmath>

namespace projlmo {

namespace {

double uniform(double lo, double hi, std::mt19937_64& rng) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t uniform_count(std::size_t lo, std::size_t hi, std::mt19937_64& rng) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Vector uniform_vector(std::size_t dim, double range, std::mt19937_64& rng) {
    Vector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = uniform(-range, range, rng);
    return v;
}

}  // namespace

std::string_view family_name(SetFamily family) {
    switch (family) {
        case SetFamily::box: return "box";
        case SetFamily::ball2: return "ball2";
        case SetFamily::ball1: return "ball1";
        case SetFamily::linf: return "linf";
        case SetFamily::simplex: return "simplex";
        case SetFamily::polytope: return "polytope";
        case SetFamily::point: return "point";
    }
    return "unknown";
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

SetDescriptor random_set(SetFamily family, std::mt19937_64& rng, const InstanceRanges& ranges) {
    const std::size_t max_dim = family == SetFamily::polytope ? ranges.polytope_max_dim : ranges.max_dim;
    return random_set(family, uniform_count(1, max_dim, rng), rng, ranges);
}

SetDescriptor random_set(SetFamily family, std::size_t dim, std::mt19937_64& rng, const InstanceRanges& ranges) {
    const double range = ranges.coordinate_range;
    switch (family) {
        case SetFamily::box: {
            Vector lower = uniform_vector(dim, range, rng);
            Vector upper = lower;
            for (Eigen::Index i = 0; i < upper.size(); ++i) upper[i] += uniform(0.05, 2.0 * range, rng);
            return Box{std::move(lower), std::move(upper)};
        }
        case SetFamily::ball2: {
            Vector center = uniform_vector(dim, range, rng);
            return Ball2{std::move(center), uniform(ranges.min_radius, ranges.max_radius, rng)};
        }
        case SetFamily::ball1: return Ball1{dim, uniform(ranges.min_radius, ranges.max_radius, rng)};
        case SetFamily::linf: return BallInf{dim, uniform(ranges.min_radius, ranges.max_radius, rng)};
        case SetFamily::simplex: return Simplex{dim};
        case SetFamily::polytope: {
            PolytopeV poly;
            const std::size_t count = uniform_count(1, ranges.polytope_max_vertices, rng);
            for (std::size_t i = 0; i < count; ++i) poly.vertices.push_back(uniform_vector(dim, range, rng));
            return poly;
        }
        case SetFamily::point: return Singleton{uniform_vector(dim, range, rng)};
    }
    return Singleton{Vector::Zero(static_cast<Eigen::Index>(dim))};
}

Vector random_gaussian(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Vector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = normal(rng);
    return v;
}

double log_uniform(double lo, double hi, std::mt19937_64& rng) {
    return std::exp(uniform(std::log(lo), std::log(hi), rng));
}

}  // namespace projlmo
