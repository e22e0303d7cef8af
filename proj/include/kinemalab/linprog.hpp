#pragma once

#include "kinemalab/common.hpp"

namespace kinemalab {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Vec x;             // primal solution when Optimal
  Scalar value = 0;  // objective value when Optimal
};

/// Solves  max c.x  subject to  A x <= b  and  E x == f,  x free.
/// Dense two-phase simplex with Bland's rule; intended for the small
/// instances produced by polytope bookkeeping (a handful of variables,
/// tens of rows).
LpResult solve_lp(const Vec& c, const Mat& A, const Vec& b,
                  const Mat& E = Mat(0, 0), const Vec& f = Vec());

/// Feasibility of {A x <= b, E x == f}. Returns a point if feasible.
LpResult lp_feasible(const Mat& A, const Vec& b,
                     const Mat& E = Mat(0, 0), const Vec& f = Vec());

struct ChebyshevResult {
  bool feasible = false;
  Vec center;
  Scalar radius = -1;  // largest inscribed ball radius; ~0 for flat sets
};

/// Chebyshev center of {A x <= b} with unit-normal rows assumed; the radius
/// certifies full-dimensionality when > tolerance.
ChebyshevResult chebyshev_center(const Mat& A, const Vec& b,
                                 const Mat& E = Mat(0, 0), const Vec& f = Vec());

}  // namespace kinemalab
