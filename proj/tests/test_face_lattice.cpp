#include <doctest.h>

#include "kinemalab/face_lattice.hpp"

#include <random>

using namespace kinemalab;

TEST_CASE("f-vectors of boxes") {
  FaceLattice L2 = build_face_lattice(HPolytope::cube(2, 0.0, 1.0));
  auto f2 = L2.f_vector();
  REQUIRE(f2.size() == 2);
  CHECK(f2[0] == 4);
  CHECK(f2[1] == 4);

  FaceLattice L3 = build_face_lattice(HPolytope::cube(3, 0.0, 1.0));
  auto f3 = L3.f_vector();
  REQUIRE(f3.size() == 3);
  CHECK(f3[0] == 8);
  CHECK(f3[1] == 12);
  CHECK(f3[2] == 6);
}

TEST_CASE("euler relation for random 3d hulls") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 6; ++trial) {
    Mat pts(6, 3);
    for (Index i = 0; i < 6; ++i) {
      for (int j = 0; j < 3; ++j) pts(i, j) = gauss(rng);
    }
    VPolytope V;
    V.dim = 3;
    V.vertices = pts;
    HPolytope K;
    try {
      K = hull_halfspaces(V);
    } catch (const DegeneratePolytope&) {
      continue;
    }
    FaceLattice L = build_face_lattice(K);
    auto f = L.f_vector();
    CHECK(f[0] - f[1] + f[2] == 2);
  }
}

TEST_CASE("normal cones of the unit square") {
  FaceLattice L = build_face_lattice(HPolytope::cube(2, 0.0, 1.0));
  // Vertex (1,1): cone spanned by e1 and e2.
  bool found_corner = false;
  for (Index id : L.by_dim[0]) {
    const Face& F = L.faces[id];
    Vec v = L.vertices.row(F.vertex_ids[0]).transpose();
    if ((v - Vec::Ones(2)).norm() < 1e-9) {
      found_corner = true;
      REQUIRE(F.cone_generators.rows() == 2);
      Vec sum = F.cone_generators.colwise().sum().transpose();
      CHECK(sum(0) == doctest::Approx(1.0));
      CHECK(sum(1) == doctest::Approx(1.0));
    }
  }
  CHECK(found_corner);
  // Edges carry a single generator.
  for (Index id : L.by_dim[1]) {
    CHECK(L.faces[id].cone_generators.rows() == 1);
  }
}

TEST_CASE("face volumes of the cube") {
  FaceLattice L = build_face_lattice(HPolytope::cube(3, 0.0, 2.0));
  for (Index id : L.by_dim[1]) CHECK(face_volume(L, id) == doctest::Approx(2.0));
  for (Index id : L.by_dim[2]) CHECK(face_volume(L, id) == doctest::Approx(4.0));
  CHECK(face_volume(L, L.by_dim[3][0]) == doctest::Approx(8.0));
}

TEST_CASE("clipped face volumes") {
  FaceLattice L = build_face_lattice(HPolytope::cube(2, 0.0, 1.0));
  Vec lo(2), hi(2);
  lo << 0, 0;
  hi << 0.5, 1.0;
  HPolytope E = HPolytope::box(lo, hi);
  // Edge lengths inside E: bottom and top contribute 0.5 each, the left
  // edge a full 1, the right edge 0.
  Scalar total = 0;
  for (Index id : L.by_dim[1]) total += face_volume_clipped(L, id, E);
  CHECK(total == doctest::Approx(2.0));
}

TEST_CASE("volume of simplex and degenerate input rejection") {
  Mat A(4, 3);
  Scalar s = 1 / std::sqrt(3.0);
  A << -1, 0, 0, 0, -1, 0, 0, 0, -1, s, s, s;
  Vec b(4);
  b << 0, 0, 0, s;
  CHECK(volume(HPolytope(3, A, b)) == doctest::Approx(1.0 / 6.0));

  Mat A2(4, 2);
  A2 << 1, 0, -1, 0, 0, 1, 0, -1;
  Vec b2(4);
  b2 << 1, 1, 0, 0;  // segment
  CHECK_THROWS_AS(build_face_lattice(HPolytope(2, A2, b2)), DegeneratePolytope);
}

TEST_CASE("subface structure of the square") {
  FaceLattice L = build_face_lattice(HPolytope::cube(2, 0.0, 1.0));
  Index top = L.by_dim[2][0];
  CHECK(subfaces(L, top).size() == 4);
  for (Index e : L.by_dim[1]) CHECK(subfaces(L, e).size() == 2);
}
