#include <doctest.h>

#include <algorithm>

#include "nctorus/errors.hpp"
#include "nctorus/face_geometry.hpp"
#include "support.hpp"

using namespace nctorus;
using namespace nctorus::testing;

TEST_CASE("face ordering and formatting") {
  const std::vector<Face> faces = all_faces(3);
  REQUIRE(faces.size() == 8);
  std::vector<std::string> names;
  for (Face f : faces) names.push_back(f.to_string());
  CHECK(names == std::vector<std::string>{"{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"});
  CHECK(face_order(Face{0, 3}, Face{1, 2}));
  CHECK_FALSE(face_order(Face{1, 2}, Face{0, 3}));
  CHECK_THROWS_AS(all_faces(21), GuardExceeded);
  EnumerationOptions small;
  small.max_vertices = 2;
  CHECK_THROWS_AS(all_faces(3, small), GuardExceeded);
}

TEST_CASE("face invariants examples") {
  const SkewRationalMatrix s5 = s5_matrix();
  const FaceInvariants empty = face_invariants(s5, Face{});
  CHECK(empty.h == 1);
  CHECK(empty.multiplicity == 1);
  CHECK(empty.cover_degree == 1);

  const FaceInvariants v1 = face_invariants(s5, Face{0});
  CHECK(v1.h == 1);
  CHECK(v1.multiplicity == 2);
  CHECK(v1.cover_degree == 1);
  CHECK(v1.quotient_rank == 2);

  const FaceInvariants e12 = face_invariants(s5, Face{0, 1});
  CHECK(e12.h == 4);
  CHECK(e12.pi_degree == 2);
  CHECK(e12.multiplicity == 1);

  const FaceInvariants full = face_invariants(s5, Face{0, 1, 2});
  CHECK(full.cover_degree == 2);
  CHECK(full.multiplicity == 1);
  CHECK(full.quotient_rank == 0);
}

TEST_CASE("jump complex examples") {
  CHECK(jump_complex(SkewRationalMatrix::zero(3)).faces.empty());

  const JumpComplex half = jump_complex(two_by_two(Rational(1, 2)));
  CHECK(half.faces == std::vector<Face>{Face{}, Face{0}, Face{1}});

  const JumpComplex s5 = jump_complex(s5_matrix());
  CHECK(s5.faces == std::vector<Face>{Face{}, Face{0}, Face{1}, Face{2}});
  CHECK(s5.facets() == std::vector<Face>{Face{0}, Face{1}, Face{2}});
}

TEST_CASE("azumaya faces examples") {
  CHECK(azumaya_faces(SkewRationalMatrix::zero(3)).size() == 8);
  CHECK(azumaya_faces(two_by_two(Rational(1, 2))) == std::vector<Face>{Face{0, 1}});
  CHECK(azumaya_faces(s5_matrix()) == std::vector<Face>{Face{0, 1}, Face{0, 2}, Face{1, 2}, Face{0, 1, 2}});
}

TEST_CASE("is_azumaya examples") {
  CHECK(is_azumaya(SkewRationalMatrix::zero(2)));
  CHECK_FALSE(is_azumaya(s5_matrix()));
  CHECK_FALSE(is_azumaya(two_by_two(Rational(1, 2))));
  CHECK(is_azumaya(two_by_two(Rational(3))));
}

TEST_CASE("fiber structure examples") {
  CHECK(fiber_structure(SkewRationalMatrix::zero(3), Face{0, 2}, 1) == FiberStructure{1, 1, 1});
  CHECK(fiber_structure(s5_matrix(), Face{0}, 1) == FiberStructure{1, 2, 2});
  CHECK(fiber_structure(s5_matrix(), Face{0, 1, 2}, 1) == FiberStructure{2, 1, 4});
  CHECK(fiber_structure(s5_matrix(), Face{0, 1, 2}, 3) == FiberStructure{6, 1, 36});
  CHECK_THROWS_AS(fiber_structure(s5_matrix(), Face{0}, 0), InvalidInput);
}

TEST_CASE("center skeleton examples") {
  const CenterSkeleton half = center_skeleton(two_by_two(Rational(1, 2)));
  CHECK(half.dim_x == 3);
  CHECK(half.sphere_sufficient);
  for (const auto& f : half.faces) CHECK(f.cover_degree == 1);

  const CenterSkeleton s5 = center_skeleton(s5_matrix());
  CHECK(s5.dim_x == 5);
  CHECK_FALSE(s5.sphere_sufficient);
  CHECK(s5.faces.back().face == Face{0, 1, 2});
  CHECK(s5.faces.back().cover_degree == 2);
  CHECK(s5.faces.back().torus_rank == 3);

  const CenterSkeleton zero = center_skeleton(SkewRationalMatrix::zero(4));
  CHECK(zero.dim_x == 7);
  CHECK(zero.sphere_sufficient);
  for (const auto& f : zero.faces) {
    CHECK(f.cover_degree == 1);
    CHECK(f.torus_rank == f.face.size());
  }
  // the block form congruent to s5 has a spherical center
  CHECK(center_skeleton(s5_block_form()).sphere_sufficient);
}

TEST_CASE("face properties on the random family") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const SkewRationalMatrix theta = random_skew(rng, n, 6);
    const ThetaProfile p = profile(theta);
    const std::vector<FaceInvariants> inv = all_face_invariants(p);
    const JumpComplex jump = jump_complex(theta);
    const std::vector<Face> az = azumaya_faces(theta);

    REQUIRE(jump.faces.size() + az.size() == inv.size());
    for (Face f : az) REQUIRE_FALSE(jump.contains(f));

    for (const FaceInvariants& f : inv) {
      REQUIRE(f.pi_degree * f.pi_degree == f.h);
      REQUIRE(f.multiplicity >= 1);
      REQUIRE(f.cover_degree >= 1);
      if (f.face.size() == 1) REQUIRE(f.h == 1);
      for (const FaceInvariants& g : inv)
        if (g.face.is_subset_of(f.face)) REQUIRE(g.h <= f.h);
      const FiberStructure fs = fiber_structure(f, 1);
      REQUIRE(fs.total_dim == fs.block_count * f.h);
    }
    const FiberStructure top = fiber_structure(inv.back(), 1);
    REQUIRE(top.block_count == 1);
    REQUIRE(top.total_dim == p.h);

    const bool az_flag = is_azumaya(theta);
    REQUIRE(az_flag == theta.is_integral());
    REQUIRE(az_flag == jump.faces.empty());
    REQUIRE(az_flag == (p.h == 1));
  }
}

TEST_CASE("parallel evaluation is deterministic") {
  std::mt19937_64 rng(5);
  const SkewRationalMatrix theta = random_skew(rng, 5, 6);
  const ThetaProfile p = profile(theta);
  EnumerationOptions one;
  one.threads = 1;
  EnumerationOptions four;
  four.threads = 4;
  CHECK(all_face_invariants(p, one) == all_face_invariants(p, four));
  CHECK(jump_complex(theta, one).faces == jump_complex(theta, four).faces);
}
