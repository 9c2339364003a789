#include "nctorus/lattice.hpp"

#include <algorithm>

#include "nctorus/errors.hpp"
#include "nctorus/normal_form.hpp"

namespace nctorus {

Lattice Lattice::from_generators(const IntMatrix& generators) {
  const std::size_t n = generators.cols();
  if (generators.rows() == 0) return zero(n);
  HermiteForm hnf = hermite_normal_form(generators);
  IntMatrix basis(hnf.rank, n);
  for (std::size_t i = 0; i < hnf.rank; ++i)
    for (std::size_t j = 0; j < n; ++j) basis(i, j) = hnf.form(i, j);
  return Lattice(n, std::move(basis), std::move(hnf.pivot_cols));
}

Lattice Lattice::from_generators(std::size_t ambient_rank, std::span<const IntVector> generators) {
  IntMatrix m(generators.size(), ambient_rank);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != ambient_rank) throw std::invalid_argument("generator has wrong length");
    for (std::size_t j = 0; j < ambient_rank; ++j) m(i, j) = generators[i][j];
  }
  if (generators.empty()) return zero(ambient_rank);
  return from_generators(m);
}

Lattice Lattice::standard(std::size_t ambient_rank) {
  std::vector<std::size_t> pivots(ambient_rank);
  for (std::size_t i = 0; i < ambient_rank; ++i) pivots[i] = i;
  return Lattice(ambient_rank, IntMatrix::identity(ambient_rank), std::move(pivots));
}

Lattice Lattice::diagonal(std::span<const Integer> scales) {
  IntMatrix m(scales.size(), scales.size());
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (scales[i] <= 0) throw std::invalid_argument("diagonal lattice needs positive scales");
    m(i, i) = scales[i];
  }
  return from_generators(m);
}

Lattice Lattice::zero(std::size_t ambient_rank) { return Lattice(ambient_rank, IntMatrix(0, ambient_rank), {}); }

bool Lattice::contains(std::span<const Integer> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector has wrong length for lattice");
  IntVector rest(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const std::size_t p = pivots_[i];
    if (!mpz_divisible_p(rest[p].get_mpz_t(), basis_(i, p).get_mpz_t())) return false;
    const Integer c = rest[p] / basis_(i, p);
    if (c == 0) continue;
    for (std::size_t j = p; j < ambient_; ++j) rest[j] -= c * basis_(i, j);
  }
  return std::all_of(rest.begin(), rest.end(), [](const Integer& x) { return x == 0; });
}

bool Lattice::contains(const Lattice& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Integer Lattice::covolume() const {
  if (!is_full_rank()) throw LatticeError("covolume of a lattice that is not full rank");
  Integer d = 1;
  for (std::size_t i = 0; i < ambient_; ++i) d *= basis_(i, i);
  return d;
}

Lattice integrality_kernel(const RationalMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("integrality kernel needs a square matrix");
  const std::size_t n = a.rows();
  Integer ell = 1;
  for (const Rational& x : a.entries()) ell = lcm(ell, x.get_den());
  const IntMatrix h = scale_to_integer(a, ell);

  // (m, k) with H m - ell k = 0 is the left kernel of [H^t ; -ell I]; the
  // kernel lattice is the projection onto the m-coordinates.
  IntMatrix stacked(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(i, j) = h(j, i);
  for (std::size_t i = 0; i < n; ++i) stacked(n + i, i) = -ell;

  const HermiteForm hnf = hermite_normal_form(stacked);
  IntMatrix generators(2 * n - hnf.rank, n);
  for (std::size_t r = hnf.rank; r < 2 * n; ++r)
    for (std::size_t j = 0; j < n; ++j) generators(r - hnf.rank, j) = hnf.transform(r, j);
  return Lattice::from_generators(generators);
}

Integer lattice_index(const Lattice& sub, const Lattice& super) {
  if (sub.ambient_rank() != super.ambient_rank()) throw LatticeError("lattice index: ambient ranks differ");
  if (!sub.is_full_rank() || !super.is_full_rank()) throw LatticeError("lattice index: rank mismatch (infinite index)");
  if (!super.contains(sub)) throw LatticeError("lattice index: sublattice is not contained in superlattice");
  return sub.covolume() / super.covolume();
}

Lattice lattice_restrict(const Lattice& lattice, std::span<const std::size_t> face) {
  const std::size_t n = lattice.ambient_rank();
  std::vector<bool> in_face(n, false);
  for (std::size_t f : face) {
    if (f >= n) throw std::invalid_argument("face coordinate out of range");
    in_face[f] = true;
  }
  // Columns outside F first: rows of the echelon form whose pivot lies in the
  // F block vanish outside F and generate the intersection.
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < n; ++j)
    if (!in_face[j]) order.push_back(j);
  const std::size_t outside = order.size();
  order.insert(order.end(), face.begin(), face.end());

  const IntMatrix& b = lattice.basis();
  IntMatrix permuted(b.rows(), n);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) permuted(i, j) = b(i, order[j]);
  const HermiteForm hnf = hermite_normal_form(permuted);

  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < hnf.rank; ++i) {
    if (hnf.pivot_cols[i] < outside) continue;
    IntVector v(face.size());
    for (std::size_t j = 0; j < face.size(); ++j) v[j] = hnf.form(i, outside + j);
    rows.push_back(std::move(v));
  }
  return Lattice::from_generators(face.size(), rows);
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw std::invalid_argument("lattice sum: ambient ranks differ");
  IntMatrix stacked(a.rank() + b.rank(), a.ambient_rank());
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.ambient_rank(); ++j) stacked(i, j) = a.basis()(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.ambient_rank(); ++j) stacked(a.rank() + i, j) = b.basis()(i, j);
  if (stacked.rows() == 0) return Lattice::zero(a.ambient_rank());
  return Lattice::from_generators(stacked);
}

}  // namespace nctorus
