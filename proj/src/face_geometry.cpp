#include "nctorus/face_geometry.hpp"

#include <algorithm>
#include <string>

#include "nctorus/errors.hpp"
#include "parallel.hpp"

namespace nctorus {

bool JumpComplex::contains(Face f) const {
  return std::binary_search(faces.begin(), faces.end(), f, face_order);
}

std::vector<Face> JumpComplex::facets() const {
  std::vector<Face> out;
  for (Face f : faces) {
    const bool maximal = std::none_of(faces.begin(), faces.end(),
                                      [f](Face g) { return g != f && f.is_subset_of(g); });
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<Face> all_faces(std::size_t n, const EnumerationOptions& options) {
  if (n > options.max_vertices || n > Face::kMaxVertices) {
    throw GuardExceeded("subset enumeration over " + std::to_string(n) + " vertices exceeds the bound of " +
                        std::to_string(std::min(options.max_vertices, Face::kMaxVertices)));
  }
  std::vector<Face> faces;
  faces.reserve(std::size_t{1} << n);
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) faces.emplace_back(bits);
  std::sort(faces.begin(), faces.end(), face_order);
  return faces;
}

FaceInvariants face_invariants(const ThetaProfile& profile, Face face) {
  const std::size_t n = profile.theta.size();
  if (!face.is_subset_of(Face::full(n))) throw std::invalid_argument("face " + face.to_string() + " is not a subset of [n]");
  const std::vector<std::size_t> vertices = face.vertices();
  const SkewRationalMatrix restricted = profile.theta.restrict_to(vertices);

  FaceInvariants out;
  out.face = face;
  out.h = face.empty() ? Integer(1) : azumaya_rank(restricted);
  out.pi_degree = exact_sqrt(out.h);

  const Lattice gamma_f = lattice_restrict(profile.kernel, vertices);
  out.multiplicity = lattice_index(gamma_f, integrality_kernel(restricted.matrix()));

  std::vector<Integer> q_f;
  for (std::size_t v : vertices) q_f.push_back(profile.q[v]);
  out.cover_degree = lattice_index(Lattice::diagonal(q_f), gamma_f);
  out.quotient_rank = n - gamma_f.rank();
  return out;
}

FaceInvariants face_invariants(const SkewRationalMatrix& theta, Face face) {
  return face_invariants(profile(theta), face);
}

std::vector<FaceInvariants> all_face_invariants(const ThetaProfile& profile, const EnumerationOptions& options) {
  const std::vector<Face> faces = all_faces(profile.theta.size(), options);
  std::vector<FaceInvariants> out(faces.size());
  detail::parallel_for(faces.size(), options.threads,
                       [&](std::size_t i) { out[i] = face_invariants(profile, faces[i]); });
  return out;
}

namespace {

void check_downward_closed(const JumpComplex& jump) {
  for (Face f : jump.faces)
    for (std::size_t v : f.vertices())
      if (!jump.contains(f.without(v))) {
        throw std::logic_error("jump family is not downward closed: " + f.to_string() + " present, " +
                               f.without(v).to_string() + " missing");
      }
}

std::vector<Integer> face_ranks(const SkewRationalMatrix& theta, const std::vector<Face>& faces,
                                const EnumerationOptions& options) {
  std::vector<Integer> ranks(faces.size());
  detail::parallel_for(faces.size(), options.threads, [&](std::size_t i) {
    ranks[i] = faces[i].empty() ? Integer(1) : azumaya_rank(theta.restrict_to(faces[i].vertices()));
  });
  return ranks;
}

}  // namespace

JumpComplex jump_complex(const SkewRationalMatrix& theta, const EnumerationOptions& options) {
  const std::vector<Face> faces = all_faces(theta.size(), options);
  const std::vector<Integer> ranks = face_ranks(theta, faces, options);
  const Integer h = azumaya_rank(theta);
  JumpComplex jump{theta.size(), {}};
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (ranks[i] < h) jump.faces.push_back(faces[i]);
  check_downward_closed(jump);
  return jump;
}

std::vector<Face> azumaya_faces(const SkewRationalMatrix& theta, const EnumerationOptions& options) {
  const std::vector<Face> faces = all_faces(theta.size(), options);
  const std::vector<Integer> ranks = face_ranks(theta, faces, options);
  const Integer h = azumaya_rank(theta);
  std::vector<Face> out;
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (ranks[i] == h) out.push_back(faces[i]);
  return out;
}

bool is_azumaya(const SkewRationalMatrix& theta) {
  const bool integral = theta.is_integral();
  const bool rank_one = azumaya_rank(theta) == 1;
  if (integral != rank_one) throw std::logic_error("integrality and h == 1 disagree");
  return integral;
}

FiberStructure fiber_structure(const FaceInvariants& face, const Integer& n_tensor) {
  if (n_tensor <= 0) throw InvalidInput("tensor size must be positive");
  FiberStructure f;
  f.block_size = n_tensor * face.pi_degree;
  f.block_count = face.multiplicity;
  f.total_dim = f.block_count * f.block_size * f.block_size;
  return f;
}

FiberStructure fiber_structure(const SkewRationalMatrix& theta, Face face, const Integer& n_tensor) {
  return fiber_structure(face_invariants(theta, face), n_tensor);
}

CenterSkeleton center_skeleton(const ThetaProfile& profile, std::span<const FaceInvariants> faces) {
  const std::size_t n = profile.theta.size();
  CenterSkeleton s;
  s.n = n;
  std::size_t full_rank = 0;
  for (const FaceInvariants& f : faces) {
    const std::size_t torus_rank = n - f.quotient_rank;
    s.faces.push_back({f.face, torus_rank, f.cover_degree});
    if (f.face == Face::full(n)) full_rank = torus_rank;
  }
  s.dim_x = n == 0 ? 0 : (n - 1) + full_rank;
  s.sphere_sufficient = profile.kernel == Lattice::diagonal(profile.q);
  return s;
}

CenterSkeleton center_skeleton(const SkewRationalMatrix& theta, const EnumerationOptions& options) {
  const ThetaProfile p = profile(theta);
  const std::vector<FaceInvariants> faces = all_face_invariants(p, options);
  return center_skeleton(p, faces);
}

}  // namespace nctorus
