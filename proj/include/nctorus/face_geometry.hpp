#pragma once

#include <cstddef>
#include <vector>

#include "nctorus/face.hpp"
#include "nctorus/theta.hpp"

namespace nctorus {

/// Invariants of theta attached to the face F of the simplex with vertex set [n].
struct FaceInvariants {
  Face face;
  Integer h;              // h_{theta,F} = h(theta|_F), with h(empty) = 1
  Integer pi_degree;      // sqrt(h)
  Integer multiplicity;   // [(theta|_F)^perp : Gamma_F]
  Integer cover_degree;   // [Gamma_F : prod_{i in F} q_i Z]
  std::size_t quotient_rank = 0;  // rank of Z^n / Gamma_F = n - |F|

  friend bool operator==(const FaceInvariants&, const FaceInvariants&) = default;
};

/// Faces F with h_{theta,F} < h_theta, sorted in report order. Downward closed.
struct JumpComplex {
  std::size_t n = 0;
  std::vector<Face> faces;

  bool contains(Face f) const;
  /// Inclusion-maximal members.
  std::vector<Face> facets() const;
};

struct SkeletonFace {
  Face face;
  std::size_t torus_rank = 0;
  Integer cover_degree;

  friend bool operator==(const SkeletonFace&, const SkeletonFace&) = default;
};

/// Combinatorial skeleton of the spectrum of the center as a branched cover
/// of the classical sphere S^{2n-1}.
struct CenterSkeleton {
  std::size_t n = 0;
  std::vector<SkeletonFace> faces;  // every F in report order
  std::size_t dim_x = 0;
  /// theta^perp == prod q_i Z, which makes the center the algebra of a sphere.
  bool sphere_sufficient = false;
};

struct FiberStructure {
  Integer block_size;
  Integer block_count;
  Integer total_dim;

  friend bool operator==(const FiberStructure&, const FiberStructure&) = default;
};

struct EnumerationOptions {
  std::size_t max_vertices = 20;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// Every subset of [n] in report order; throws GuardExceeded past the bound.
std::vector<Face> all_faces(std::size_t n, const EnumerationOptions& options = {});

FaceInvariants face_invariants(const ThetaProfile& profile, Face face);
FaceInvariants face_invariants(const SkewRationalMatrix& theta, Face face);

/// face_invariants over all faces, evaluated concurrently, in report order.
std::vector<FaceInvariants> all_face_invariants(const ThetaProfile& profile, const EnumerationOptions& options = {});

/// Throws std::logic_error if the computed family is not downward closed.
JumpComplex jump_complex(const SkewRationalMatrix& theta, const EnumerationOptions& options = {});

/// {F : h_{theta,F} = h_theta}; the complement of the jump complex.
std::vector<Face> azumaya_faces(const SkewRationalMatrix& theta, const EnumerationOptions& options = {});

/// Entry integrality and h_theta == 1, cross-checked.
bool is_azumaya(const SkewRationalMatrix& theta);

FiberStructure fiber_structure(const SkewRationalMatrix& theta, Face face, const Integer& n_tensor);
FiberStructure fiber_structure(const FaceInvariants& face, const Integer& n_tensor);

CenterSkeleton center_skeleton(const SkewRationalMatrix& theta, const EnumerationOptions& options = {});
CenterSkeleton center_skeleton(const ThetaProfile& profile, std::span<const FaceInvariants> faces);

}  // namespace nctorus
