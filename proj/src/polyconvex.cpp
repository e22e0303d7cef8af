#include "kinemalab/polyconvex.hpp"

#include <bit>

namespace kinemalab {

HPolytope stack_pieces(const Polyconvex& U, std::uint32_t mask) {
  Index rows = 0;
  const int d = U.dim();
  for (std::size_t i = 0; i < U.pieces.size(); ++i) {
    if (mask & (1u << i)) rows += U.pieces[i].num_halfspaces();
  }
  Mat A(rows, d);
  Vec b(rows);
  Index r = 0;
  for (std::size_t i = 0; i < U.pieces.size(); ++i) {
    if (!(mask & (1u << i))) continue;
    A.middleRows(r, U.pieces[i].num_halfspaces()) = U.pieces[i].normals;
    b.segment(r, U.pieces[i].num_halfspaces()) = U.pieces[i].offsets;
    r += U.pieces[i].num_halfspaces();
  }
  return HPolytope(d, std::move(A), std::move(b));
}

void for_each_nerve_subset(const Polyconvex& U,
                           const std::function<void(std::uint32_t, int)>& fn) {
  const std::size_t n = U.pieces.size();
  if (n > 24) throw std::invalid_argument("polyconvex: too many pieces for nerve enumeration");
  std::vector<bool> empty(1u << n, false);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::uint32_t parent = mask & (mask - 1);  // drop lowest bit
    if (parent != 0 && empty[parent]) {
      empty[mask] = true;
      continue;
    }
    std::vector<const HPolytope*> sel;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) sel.push_back(&U.pieces[i]);
    }
    if (!intersection_nonempty(sel)) {
      empty[mask] = true;
      continue;
    }
    int bits = std::popcount(mask);
    fn(mask, (bits % 2 == 1) ? 1 : -1);
  }
}

long euler_polyconvex(const Polyconvex& U) {
  long chi = 0;
  for_each_nerve_subset(U, [&](std::uint32_t, int sign) { chi += sign; });
  return chi;
}

}  // namespace kinemalab
