#pragma once

#include "projlmo/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace projlmo {

/// Diameter and norm bound of a compact set.
struct SetConstants {
    double diameter = 0.0;
    double norm_bound = 0.0;
};

// Set descriptors. Field invariants are enforced by ConvexSet's constructor.

struct Box {
    Vector lower;
    Vector upper;
};

struct Ball2 {
    Vector center;
    double radius = 1.0;
};

/// l1 ball of the given radius centered at the origin of R^dim.
struct Ball1 {
    std::size_t dim = 1;
    double radius = 1.0;
};

/// l-infinity ball of the given radius centered at the origin of R^dim.
struct BallInf {
    std::size_t dim = 1;
    double radius = 1.0;
};

/// Probability simplex {w >= 0, sum w = 1} in R^dim.
struct Simplex {
    std::size_t dim = 1;
};

/// Convex hull of an explicit vertex list.
struct PolytopeV {
    std::vector<Vector> vertices;
};

struct Singleton {
    Vector point;
};

using SetDescriptor = std::variant<Box, Ball2, Ball1, BallInf, Simplex, PolytopeV, Singleton>;

std::string_view kind_name(const SetDescriptor& set);

/// Closed-form oracles over one validated descriptor.
///
/// Every method is const and the object is immutable after construction, so
/// a ConvexSet may be shared freely across threads. LMO ties are broken
/// deterministically: coordinates with x_i == 0 go to the lower face of
/// boxes and balls, argmin ties go to the lowest index, and Ball2 at x == 0
/// returns center - r * e_1.
class ConvexSet {
public:
    /// Throws InputError if the descriptor violates its invariants.
    explicit ConvexSet(SetDescriptor descriptor);

    const SetDescriptor& descriptor() const noexcept { return descriptor_; }
    std::size_t dim() const noexcept { return dim_; }
    const SetConstants& constants() const noexcept { return constants_; }

    Vector project(const Vector& x) const;
    Vector lmo(const Vector& x) const;

    /// ||x - project(x)|| <= tol.
    bool contains(const Vector& x, double tol) const;

    /// Scale-aware absolute slack 1e-9 * (1 + ||x||) * (1 + norm_bound).
    double tolerance(const Vector& x) const;

private:
    SetDescriptor descriptor_;
    std::size_t dim_ = 0;
    SetConstants constants_;
};

SetConstants set_constants(const SetDescriptor& set);

/// min_c <c, x> from the closed-form support function of each set (vertex
/// enumeration for polytopes); independent of ConvexSet::lmo.
double min_linear_value(const SetDescriptor& set, const Vector& x);

/// Sort-based Euclidean projection onto {w >= 0, sum w = total}.
Vector project_simplex(const Vector& x, double total = 1.0);

/// The same set expressed as a vertex list, when that is finite and small
/// enough to be practical (boxes and l-inf balls: dim <= max_box_dim).
std::optional<PolytopeV> as_polytope(const SetDescriptor& set, std::size_t max_box_dim = 6);

}  // namespace projlmo
