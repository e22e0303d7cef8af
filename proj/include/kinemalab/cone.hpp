#pragma once

#include "kinemalab/common.hpp"

#include <cstdint>

namespace kinemalab {

/// Polyhedral cone spanned by finitely many generators (rows). The zero
/// cone is represented by an empty generator matrix.
struct Cone {
  Mat generators;

  int ambient_dim() const { return static_cast<int>(generators.cols()); }
  bool is_zero() const { return generators.rows() == 0; }
};

/// Drops zero/duplicate generators and normalizes the rest.
Cone normalized(const Cone& C);

/// Orthonormal basis of the linear span of the generators.
Mat cone_span(const Cone& C);

/// A cone is pointed iff it contains no line, iff 0 is not a nontrivial
/// nonnegative combination of (nonzero) generators.
bool is_pointed(const Cone& C);

/// Membership x in cone(C) by LP feasibility.
bool cone_contains(const Cone& C, const Vec& x, Scalar tol = 1e-8);

/// Minkowski sum = cone of the concatenated generators.
Cone cone_sum(const Cone& A, const Cone& B);

/// Generators that are extreme rays (not in the cone of the others).
Cone extreme_rays(const Cone& C);

struct SphericalMeasure {
  Scalar fraction = 0;   // measure(C cap S^{m-1}) / measure(S^{m-1}), m = span dim
  Scalar stderr_ = 0;    // 0 for exact evaluations
  bool exact = true;
};

/// Normalized spherical measure of a pointed cone relative to the unit
/// sphere of its own linear span. Closed form for span dimension <= 3,
/// standard-Gaussian membership sampling above that. The zero cone has
/// fraction 1 by the face-of-itself convention.
SphericalMeasure spherical_fraction(const Cone& C, int n_mc = 200000,
                                    std::uint64_t seed = 0x5eedULL);

/// Solid angle of a spherical triangle with unit vertices a, b, c.
Scalar spherical_triangle_angle(const Vec& a, const Vec& b, const Vec& c);

}  // namespace kinemalab
