#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nctorus/int_matrix.hpp"
#include "nctorus/lattice.hpp"
#include "nctorus/normal_form.hpp"

namespace nctorus {

/// Rational skew-symmetric deformation matrix. Construction validates the
/// invariants (square, zero diagonal, theta^t = -theta) and throws InvalidInput
/// naming the first violation.
class SkewRationalMatrix {
 public:
  SkewRationalMatrix() = default;
  explicit SkewRationalMatrix(RationalMatrix entries);

  static SkewRationalMatrix zero(std::size_t n);
  /// Block-diagonal [[0,a],[-a,0]] (+) ... padded with zeros to size n.
  static SkewRationalMatrix from_blocks(std::span<const Rational> blocks, std::size_t n);

  std::size_t size() const noexcept { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const RationalMatrix& matrix() const noexcept { return m_; }

  /// lcm of all entry denominators.
  Integer common_denominator() const;
  bool is_integral() const;
  /// theta|_F for increasing 0-based coordinates F.
  SkewRationalMatrix restrict_to(std::span<const std::size_t> face) const;
  /// T theta T^t.
  SkewRationalMatrix congruent(const IntMatrix& t) const;

  friend bool operator==(const SkewRationalMatrix& a, const SkewRationalMatrix& b) { return a.m_ == b.m_; }

 private:
  RationalMatrix m_;
};

struct ThetaProfile {
  SkewRationalMatrix theta;
  Integer ell;        // common denominator
  IntMatrix scaled;   // ell * theta
  Lattice kernel;     // integral kernel {m : theta m in Z^n}
  Integer h;          // Azumaya rank
  Integer pi_degree;  // sqrt(h)
  std::vector<Integer> q;  // per-row lcm of denominators
  SkewNormalForm normal_form;
};

struct TorusDecomposition {
  std::size_t k = 0;  // free torus rank
  std::vector<Rational> factors;
  /// witness * theta * witness^t == 0_k (+) blocks(factors)
  IntMatrix witness;

  RationalMatrix block_matrix() const;
};

/// [(Z^n + theta Z^n) : Z^n] alone, without the rest of the profile.
Integer azumaya_rank(const SkewRationalMatrix& theta);

/// h computed as [(Z^n + theta Z^n) : Z^n] inside the scaled ambient
/// (1/ell)(ell Z^n + H Z^n). Throws std::logic_error if h is not a square.
ThetaProfile profile(const SkewRationalMatrix& theta);

/// |range(Z^n -> (Z/ell)^n, m -> H m)| via the Smith form of H = ell*theta.
Integer h_by_image_count(const SkewRationalMatrix& theta);
/// Same with an explicit multiple of the common denominator.
Integer h_by_image_count(const SkewRationalMatrix& theta, const Integer& ell);

/// [Z^n : theta^perp].
Integer h_by_kernel_index(const SkewRationalMatrix& theta);

TorusDecomposition decompose(const SkewRationalMatrix& theta);

/// Exists T in GL_n(Z) with theta' = T theta T^t.
bool congruent_over_z(const SkewRationalMatrix& theta, const SkewRationalMatrix& theta_prime);

/// Skew elementary divisors of (ell * theta) for a caller-chosen ell.
SkewNormalForm scaled_normal_form(const SkewRationalMatrix& theta, const Integer& ell);

}  // namespace nctorus
