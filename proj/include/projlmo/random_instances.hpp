#pragma once

#include "projlmo/linalg.hpp"
#include "projlmo/sets.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string_view>

namespace projlmo {

enum class SetFamily { box, ball2, ball1, linf, simplex, polytope, point };

inline constexpr std::array<SetFamily, 7> kAllFamilies = {
    SetFamily::box,     SetFamily::ball2,    SetFamily::ball1, SetFamily::linf,
    SetFamily::simplex, SetFamily::polytope, SetFamily::point,
};

std::string_view family_name(SetFamily family);

/// Ranges for random instances. Centers and vertices are uniform in
/// [-coordinate_range, coordinate_range]; radii uniform in [min_radius, max_radius].
struct InstanceRanges {
    std::size_t max_dim = 16;
    std::size_t polytope_max_dim = 6;
    std::size_t polytope_max_vertices = 12;
    double coordinate_range = 1.0;
    double min_radius = 0.1;
    double max_radius = 2.0;
};

/// Independent stream for trial `index` of a run seeded with `seed`; the
/// same pair always yields the same stream regardless of thread layout.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

SetDescriptor random_set(SetFamily family, std::mt19937_64& rng, const InstanceRanges& ranges = {});

/// Random set of a fixed dimension.
SetDescriptor random_set(SetFamily family, std::size_t dim, std::mt19937_64& rng,
                         const InstanceRanges& ranges = {});

/// Entries i.i.d. standard normal.
Vector random_gaussian(std::size_t dim, std::mt19937_64& rng);

double log_uniform(double lo, double hi, std::mt19937_64& rng);

}  // namespace projlmo
