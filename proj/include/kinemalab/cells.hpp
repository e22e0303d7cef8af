#pragma once

#include "kinemalab/dc.hpp"
#include "kinemalab/face_lattice.hpp"

namespace kinemalab {

/// One face of the refinement complex of a piecewise-linear DC function
/// restricted to a window. The active pair sets are constant on the
/// relative interior; the witness (vertex centroid) realizes them.
struct ComplexFace {
  int dim = 0;
  Mat vertices;  // ambient coordinates, one row each
  Vec witness;
  AffinePoly poly;
};

/// All faces (every dimension) of the common refinement of the linearity
/// regions of f.g and f.h inside the window polytope.
struct RefinementComplex {
  std::vector<ComplexFace> faces;
  std::vector<std::vector<std::size_t>> by_dim;
};

RefinementComplex build_complex(const DCFunction& f, const HPolytope& window);

/// Range of f over a complex face (f is affine there): (min, max) over the
/// face vertices.
std::pair<Scalar, Scalar> face_value_range(const DCFunction& f, const ComplexFace& face);

}  // namespace kinemalab
