#include "projlmo/linalg.hpp"

#include "projlmo/errors.hpp"

#include <string>

namespace projlmo {

void validate_vector(const Vector& v, std::string_view what) {
    if (v.size() == 0) throw DimensionError(std::string(what) + ": empty vector");
    if (!v.allFinite()) throw NonFiniteError(std::string(what) + ": non-finite entry");
}

void validate_vector(const Vector& v, std::size_t expected_dim, std::string_view what) {
    if (dim_of(v) != expected_dim)
        throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(expected_dim) +
                             ", got " + std::to_string(v.size()));
    validate_vector(v, what);
}

}  // namespace projlmo
