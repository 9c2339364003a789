#include "nctorus/theta.hpp"

#include <string>

#include "nctorus/errors.hpp"

namespace nctorus {

SkewRationalMatrix::SkewRationalMatrix(RationalMatrix entries) : m_(std::move(entries)) {
  if (!m_.is_square()) throw InvalidInput("matrix is not square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j) m_(i, j).canonicalize();
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    if (m_(i, i) != 0) {
      throw InvalidInput("nonzero diagonal entry at (" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ")");
    }
  }
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != -m_(j, i)) {
        throw InvalidInput("matrix is not skew-symmetric: entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           ") is " + m_(i, j).get_str() + " but (" + std::to_string(j + 1) + "," +
                           std::to_string(i + 1) + ") is " + m_(j, i).get_str());
      }
}

SkewRationalMatrix SkewRationalMatrix::zero(std::size_t n) { return SkewRationalMatrix(RationalMatrix(n, n)); }

SkewRationalMatrix SkewRationalMatrix::from_blocks(std::span<const Rational> blocks, std::size_t n) {
  if (2 * blocks.size() > n) throw std::invalid_argument("too many blocks for the requested size");
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    m(2 * i, 2 * i + 1) = blocks[i];
    m(2 * i + 1, 2 * i) = -blocks[i];
  }
  return SkewRationalMatrix(std::move(m));
}

Integer SkewRationalMatrix::common_denominator() const {
  Integer ell = 1;
  for (const Rational& x : m_.entries()) ell = lcm(ell, x.get_den());
  return ell;
}

bool SkewRationalMatrix::is_integral() const {
  for (const Rational& x : m_.entries())
    if (x.get_den() != 1) return false;
  return true;
}

SkewRationalMatrix SkewRationalMatrix::restrict_to(std::span<const std::size_t> face) const {
  return SkewRationalMatrix(m_.principal(face));
}

SkewRationalMatrix SkewRationalMatrix::congruent(const IntMatrix& t) const {
  if (t.rows() != size() || t.cols() != size()) throw std::invalid_argument("congruence transform has wrong size");
  RationalMatrix tr(size(), size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) tr(i, j) = Rational(t(i, j));
  return SkewRationalMatrix(tr * m_ * tr.transpose());
}

RationalMatrix TorusDecomposition::block_matrix() const {
  const std::size_t n = k + 2 * factors.size();
  RationalMatrix b(n, n);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    b(k + 2 * i, k + 2 * i + 1) = factors[i];
    b(k + 2 * i + 1, k + 2 * i) = -factors[i];
  }
  return b;
}

namespace {

// Z^n + theta Z^n, scaled by ell: ell Z^n + H Z^n (images of basis vectors are the columns of H).
Integer scaled_sum_index(const IntMatrix& scaled, const Integer& ell) {
  const std::vector<Integer> ells(scaled.rows(), ell);
  const Lattice scaled_integers = Lattice::diagonal(ells);
  const Lattice scaled_sum = lattice_sum(scaled_integers, Lattice::from_generators(scaled.transpose()));
  return lattice_index(scaled_integers, scaled_sum);
}

}  // namespace

Integer azumaya_rank(const SkewRationalMatrix& theta) {
  const Integer ell = theta.common_denominator();
  return scaled_sum_index(scale_to_integer(theta.matrix(), ell), ell);
}

ThetaProfile profile(const SkewRationalMatrix& theta) {
  const std::size_t n = theta.size();
  ThetaProfile p;
  p.theta = theta;
  p.ell = theta.common_denominator();
  p.scaled = scale_to_integer(theta.matrix(), p.ell);
  p.kernel = integrality_kernel(theta.matrix());
  p.h = scaled_sum_index(p.scaled, p.ell);
  if (!is_perfect_square(p.h)) {
    throw std::logic_error("Azumaya rank " + p.h.get_str() + " is not a perfect square");
  }
  p.pi_degree = exact_sqrt(p.h);

  p.q.assign(n, Integer(1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.q[i] = lcm(p.q[i], theta(i, j).get_den());

  p.normal_form = skew_normal_form(p.scaled);
  return p;
}

Integer h_by_image_count(const SkewRationalMatrix& theta, const Integer& ell) {
  if (ell <= 0 || !mpz_divisible_p(ell.get_mpz_t(), theta.common_denominator().get_mpz_t())) {
    throw InvalidInput("modulus " + ell.get_str() + " is not a positive multiple of the common denominator");
  }
  const SmithForm smith = smith_normal_form(scale_to_integer(theta.matrix(), ell));
  Integer count = 1;
  for (const Integer& s : smith.invariant_factors()) count *= ell / gcd(s, ell);
  return count;
}

Integer h_by_image_count(const SkewRationalMatrix& theta) {
  return h_by_image_count(theta, theta.common_denominator());
}

Integer h_by_kernel_index(const SkewRationalMatrix& theta) {
  return lattice_index(integrality_kernel(theta.matrix()), Lattice::standard(theta.size()));
}

TorusDecomposition decompose(const SkewRationalMatrix& theta) {
  const Integer ell = theta.common_denominator();
  const SkewNormalForm snf = skew_normal_form(scale_to_integer(theta.matrix(), ell));
  const std::size_t n = theta.size();
  const std::size_t blocks = snf.divisors.size();

  TorusDecomposition d;
  d.k = snf.zero_rank;
  for (const Integer& div : snf.divisors) {
    Rational f(div, ell);
    f.canonicalize();
    d.factors.push_back(f);
  }
  // normal form puts the zero block last; move it to the front
  d.witness = IntMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t src = r < d.k ? 2 * blocks + r : r - d.k;
    for (std::size_t j = 0; j < n; ++j) d.witness(r, j) = snf.transform(src, j);
  }
  return d;
}

SkewNormalForm scaled_normal_form(const SkewRationalMatrix& theta, const Integer& ell) {
  return skew_normal_form(scale_to_integer(theta.matrix(), ell));
}

bool congruent_over_z(const SkewRationalMatrix& theta, const SkewRationalMatrix& theta_prime) {
  if (theta.size() != theta_prime.size()) return false;
  const Integer ell = lcm(theta.common_denominator(), theta_prime.common_denominator());
  const SkewNormalForm a = scaled_normal_form(theta, ell);
  const SkewNormalForm b = scaled_normal_form(theta_prime, ell);
  return a.zero_rank == b.zero_rank && a.divisors == b.divisors;
}

}  // namespace nctorus
