#pragma once

#include "kinemalab/polytope.hpp"

#include <functional>
#include <vector>

namespace kinemalab {

/// Finite union of convex bodies (pieces may overlap).
struct Polyconvex {
  std::vector<HPolytope> pieces;

  int dim() const { return pieces.empty() ? 0 : pieces.front().dim; }

  static Polyconvex single(HPolytope P) {
    Polyconvex U;
    U.pieces.push_back(std::move(P));
    return U;
  }
};

/// Euler characteristic of the union by nerve inclusion-exclusion: each
/// nonempty convex intersection contributes chi = 1.
long euler_polyconvex(const Polyconvex& U);

/// Calls fn(subset_mask, sign) for each subset of pieces with nonempty
/// intersection; sign = (-1)^{|I|+1}. Supersets of empty intersections are
/// pruned.
void for_each_nerve_subset(const Polyconvex& U,
                           const std::function<void(std::uint32_t, int)>& fn);

/// H-polytope of the intersection of the pieces selected by mask (may be
/// lower-dimensional; no emptiness guarantee).
HPolytope stack_pieces(const Polyconvex& U, std::uint32_t mask);

}  // namespace kinemalab
