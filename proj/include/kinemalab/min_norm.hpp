#pragma once

#include "kinemalab/common.hpp"

namespace kinemalab {

struct MinNormResult {
  Vec point;       // nearest point of the hull to the origin
  Scalar norm = 0;
  Vec coefficients;  // convex weights over the input points
};

/// Minimum-norm point of conv(rows of P) by Wolfe's algorithm. The result
/// satisfies min_p <x, p> >= |x|^2 - tol (hull-side optimality certificate).
MinNormResult min_norm_point(const Mat& points, Scalar tol = 1e-12);

}  // namespace kinemalab
