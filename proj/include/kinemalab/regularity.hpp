#pragma once

#include "kinemalab/cells.hpp"

#include <optional>

namespace kinemalab {

/// Witness of a weak-regularity failure: a band point whose Clarke hull
/// comes within tolerance of the origin.
struct FailureWitness {
  Vec point;
  Vec clarke_element;
  Scalar norm = 0;
};

/// Certificate that c is weakly regular for f on the window, quantified by
/// eps0: every Clarke covector at band points {c < f <= c+delta} in the
/// window has norm >= eps0. Valid only on the stated window.
struct RegularityCertificate {
  Scalar value = 0;  // c
  Vec window_lo, window_hi;
  Scalar delta = 0;
  Scalar eps0 = 0;
  bool vacuous = false;  // band does not meet the window
  bool regular = false;
  std::optional<FailureWitness> witness;
  Vec argmin_point;  // band cell witness attaining eps0
  std::size_t cells_checked = 0;
};

/// Exact weak-regularity check over the refinement complex of f inside the
/// box [lo,hi]: eps0 is the minimum of min-norm Clarke values over all
/// complex faces meeting the band.
RegularityCertificate weak_regularity(const DCFunction& f, Scalar c, const Vec& window_lo,
                                      const Vec& window_hi, Scalar delta);

/// Transversality margin of Proposition-4.1 type for h = f + g(gamma^{-1}.):
/// the minimum over complex faces of (window minus the intersection body) of
/// the min-norm of the Minkowski-sum hull dF(x) + gamma dG(gamma^{-1}x).
/// Returns 0 together with a witness when the sum hull reaches the origin.
struct Eps0Bound {
  Scalar eps0 = 0;
  std::optional<FailureWitness> witness;
};
Eps0Bound eps0_bound(const DCFunction& f, const DCFunction& g, const RigidMotion& gamma,
                     const HPolytope& window);

}  // namespace kinemalab
