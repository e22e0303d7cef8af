#pragma once

#include "kinemalab/polytope.hpp"

#include <vector>

namespace kinemalab {

/// A face of a polytope, carried by vertex/facet incidences plus an affine
/// chart of its hull.
struct Face {
  int dim = 0;
  std::vector<Index> vertex_ids;  // rows into the lattice vertex matrix
  std::vector<Index> facet_ids;   // halfspaces active on the whole face
  Vec point;                      // chart origin
  Mat basis;                      // d x dim orthonormal chart
  Mat cone_generators;            // outward facet normals containing the face (rows)
};

/// Full combinatorial face lattice of a bounded full-dimensional polytope,
/// built from vertex-facet incidences by closure search.
struct FaceLattice {
  HPolytope poly;          // canonical irredundant H-representation
  Mat vertices;            // one row per vertex
  std::vector<Face> faces; // all proper faces plus the polytope itself (last)
  std::vector<std::vector<Index>> by_dim;  // face indices per dimension

  int dim() const { return poly.dim; }
  const Face& top() const { return faces.back(); }
  std::vector<Index> f_vector() const;
};

/// Builds the lattice. Throws DegeneratePolytope for empty or
/// lower-dimensional input and ToleranceAmbiguity when a vertex-facet
/// incidence is too close to call.
FaceLattice build_face_lattice(const HPolytope& P);

/// Children of dimension dim(F)-1 (indices into lattice.faces).
std::vector<Index> subfaces(const FaceLattice& L, Index face_id);

/// Exact k-volume of face F.
Scalar face_volume(const FaceLattice& L, Index face_id);

/// Exact k-volume of F intersected with an ambient H-polytope E.
/// Throws ToleranceAmbiguity if the intersection is borderline flat.
Scalar face_volume_clipped(const FaceLattice& L, Index face_id, const HPolytope& E);

/// F as a chart-poly.
AffinePoly face_poly(const FaceLattice& L, Index face_id);

}  // namespace kinemalab
