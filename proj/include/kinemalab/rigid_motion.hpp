#pragma once

#include "kinemalab/common.hpp"
#include "kinemalab/polytope.hpp"

#include <random>

namespace kinemalab {

/// Orientation-preserving rigid motion x -> R x + t.
struct RigidMotion {
  Mat rotation;
  Vec translation;

  static RigidMotion identity(int d) {
    return {Mat::Identity(d, d), Vec::Zero(d)};
  }

  Vec apply(const Vec& x) const { return rotation * x + translation; }
  Vec apply_inverse(const Vec& x) const { return rotation.transpose() * (x - translation); }

  RigidMotion inverse() const {
    return {rotation.transpose(), -(rotation.transpose() * translation)};
  }
  RigidMotion compose(const RigidMotion& other) const {  // this after other
    return {rotation * other.rotation, rotation * other.translation + translation};
  }

  bool valid(Scalar tol = 1e-7) const;
};

/// gamma K = {R x + t : x in K}.
HPolytope apply(const RigidMotion& g, const HPolytope& K);

/// Haar-uniform rotation on SO(d): QR of a Gaussian matrix with positive
/// diagonal sign convention, last column flipped when the determinant is -1.
Mat haar_rotation(int d, std::mt19937_64& rng);

}  // namespace kinemalab
