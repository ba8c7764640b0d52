#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace projlmo {

/// Dense element of the ambient space R^n.
using Vector = Eigen::VectorXd;

inline Vector make_vector(std::initializer_list<double> values) {
    Vector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double value : values) v[i++] = value;
    return v;
}

inline Vector make_vector(std::span<const double> values) {
    return Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

inline std::size_t dim_of(const Vector& v) { return static_cast<std::size_t>(v.size()); }

/// Throws NonFiniteError / DimensionError unless v has dim >= 1 and finite entries.
void validate_vector(const Vector& v, std::string_view what);

/// Also requires v.size() == expected_dim.
void validate_vector(const Vector& v, std::size_t expected_dim, std::string_view what);

}  // namespace projlmo
