#pragma once

#include "kinemalab/common.hpp"

#include <optional>
#include <utility>

namespace kinemalab {

struct VPolytope;

/// A convex body as an intersection of halfspaces {x : a.x <= b}, with unit
/// normals after canonicalization. Immutable after construction.
struct HPolytope {
  int dim = 0;
  Mat normals;  // one unit row per halfspace
  Vec offsets;

  HPolytope() = default;
  HPolytope(int d, Mat A, Vec b) : dim(d), normals(std::move(A)), offsets(std::move(b)) {}

  Index num_halfspaces() const { return normals.rows(); }
  bool contains(const Vec& x, Scalar tol = kTol) const;

  static HPolytope box(const Vec& lo, const Vec& hi);
  static HPolytope cube(int d, Scalar lo, Scalar hi);
};

/// A convex body as the hull of its vertices.
struct VPolytope {
  int dim = 0;
  Mat vertices;  // one row per vertex

  Index num_vertices() const { return vertices.rows(); }
  Vec vertex(Index i) const { return vertices.row(i).transpose(); }
};

/// Normalizes rows to unit length, drops near-duplicate halfspaces (angle
/// and offset within tolerance; parallel rows keep the tighter offset).
HPolytope canonicalize(const HPolytope& P);

/// Drops halfspaces that do not change the feasible set.
HPolytope remove_redundancy(const HPolytope& P);

bool is_empty(const HPolytope& P);
bool is_bounded(const HPolytope& P);

/// All vertices of a bounded H-polytope by basis enumeration. Requires a
/// full-dimensional input for a meaningful answer.
VPolytope enumerate_vertices(const HPolytope& P);

/// Facet description of the hull of a full-dimensional point set.
HPolytope hull_halfspaces(const VPolytope& V);

/// Prunes points that are convex combinations of the others.
VPolytope extreme_points(const VPolytope& V);

/// Support function h_P(u) = max {x.u : x in P}. Throws UnboundedDirection
/// when P is unbounded along u.
Scalar support(const HPolytope& P, const Vec& u);
Scalar support(const VPolytope& V, const Vec& u);

/// Cap of direction n and width t: {x in P : x.n >= h_P(n) - t}.
HPolytope cap(const HPolytope& P, const Vec& n, Scalar t);

/// Width of a bounded full-dimensional polytope: inf over unit n of
/// h(n) + h(-n). Exact in d=2 by edge-normal enumeration; in d>=3 computed
/// as the inradius-type minimum over facet offsets of the difference body,
/// reported as a (tight) upper/lower bracket.
struct WidthResult {
  Scalar lower = 0;
  Scalar upper = 0;
  Vec direction;  // witness direction for the upper bound
};
WidthResult width(const HPolytope& P);

HPolytope minkowski_sum(const HPolytope& K, const HPolytope& L);
HPolytope difference_body(const HPolytope& K);
HPolytope reflect(const HPolytope& K);  // -K

/// Halfspace concatenation + emptiness test + redundancy elimination.
/// Throws ToleranceAmbiguity on near-degenerate contact. Returns nullopt
/// when the intersection is empty.
std::optional<HPolytope> intersect(const HPolytope& K, const HPolytope& L);

/// Nonemptiness of the intersection of many polytopes, accepting touching
/// (lower-dimensional) contact. Used by Euler characteristic and
/// inclusion-exclusion, which must count such intersections.
bool intersection_nonempty(const std::vector<const HPolytope*>& pieces);

Vec interior_point(const HPolytope& P);  // Chebyshev center
Scalar chebyshev_radius(const HPolytope& P);

struct BoundingBox {
  Vec lo, hi;
};
BoundingBox bounding_box(const HPolytope& P);

/// Exact d-volume of a bounded polytope (0 when lower-dimensional).
Scalar volume(const HPolytope& P);

/// A convex polytope carried by an affine chart x = point + basis*y of its
/// affine hull: `local` is full-dimensional in chart coordinates. Used for
/// faces, slices and lower-dimensional intersections.
struct AffinePoly {
  Vec point;   // chart origin in R^d
  Mat basis;   // d x k orthonormal columns
  HPolytope local;  // full-dimensional polytope in R^k (k == basis.cols())
  bool empty = true;

  int ambient_dim() const { return static_cast<int>(point.size()); }
  int dim() const { return static_cast<int>(basis.cols()); }
  Vec to_ambient(const Vec& y) const { return point + basis * y; }
};

/// Computes the affine hull and chart-poly of {A x <= b, E x == f}. Returns
/// an AffinePoly with empty=true when infeasible.
AffinePoly affine_poly(const Mat& A, const Vec& b, const Mat& E = Mat(0, 0),
                       const Vec& f = Vec());

/// Chart-poly of the hull of a point set (any affine dimension).
AffinePoly affine_poly_from_points(const Mat& points);

/// k-volume of a chart-poly (volume of `local`).
Scalar volume(const AffinePoly& F);

/// Restriction of ambient halfspaces to the chart of F; the result shares
/// F's chart.
AffinePoly restrict_to_chart(const AffinePoly& F, const Mat& A, const Vec& b);

Mat vertices_ambient(const AffinePoly& F);

}  // namespace kinemalab
