#pragma once

#include <cstddef>
#include <string_view>

#include "nctorus/face.hpp"
#include "nctorus/theta.hpp"

namespace nctorus {

enum class AlgebraKind { torus, sphere };

std::string_view to_string(AlgebraKind kind);
AlgebraKind parse_algebra_kind(std::string_view text);

/// C(T^m_theta) (x) M_n or C(S^{2m-1}_theta) (x) M_n.
struct AlgebraDescriptor {
  AlgebraKind kind = AlgebraKind::torus;
  SkewRationalMatrix theta;
  Integer n_tensor = 1;

  std::size_t m() const { return theta.size(); }
};

/// Class in Z/modulus of a matrix-algebra bundle over the 2-torus.
struct CharClass {
  Integer modulus;
  Integer residue;

  friend bool operator==(const CharClass&, const CharClass&) = default;
};

struct RecoveryInvariants {
  Integer min_irrep_dim;
  Integer k0_rank;
  Integer identity_divisibility;
  std::size_t dim_center_spectrum = 0;

  friend bool operator==(const RecoveryInvariants&, const RecoveryInvariants&) = default;
};

struct CenterFiniteness {
  bool algebraically_finite = false;
  bool topologically_finite = true;

  friend bool operator==(const CenterFiniteness&, const CenterFiniteness&) = default;
};

/// n * (p^{-1} mod q, lifted to [0, q)) reduced mod qn. Requires gcd(p, q) = 1.
CharClass characteristic_two_class(const Integer& p, const Integer& q, const Integer& n);

/// Which relation, if any, makes two rational 3-sphere (or 2-torus) parameters equivalent.
enum class IsoRelation {
  shift,            // theta - theta' in Z
  reflection,       // theta + theta' in Z
  tensor_mismatch,  // n != n'
  none,
};

std::string_view describe(IsoRelation relation);

IsoRelation iso_relation(const Rational& theta, const Integer& n, const Rational& theta_prime, const Integer& n_prime);
bool iso_sphere3(const Rational& theta, const Integer& n, const Rational& theta_prime, const Integer& n_prime);
bool iso_torus2(const Rational& theta, const Integer& n, const Rational& theta_prime, const Integer& n_prime);

/// Agreement of the two characteristic classes up to sign mod qn. Verifies
/// internally that this matches q | p - p' or q | p + p', and the iso_sphere3
/// verdict; a mismatch throws std::logic_error. Throws InvalidInput if q != q'.
bool class_chain_check(const Integer& p, const Integer& q, const Integer& p_prime, const Integer& q_prime,
                       const Integer& n);

RecoveryInvariants recovery_invariants(const AlgebraDescriptor& descriptor);

/// 2^{r-1} with r = m - rank Gamma_F, for a proper face F.
Integer fiber_k0_rank(const SkewRationalMatrix& theta, Face face);

CenterFiniteness center_finiteness(const SkewRationalMatrix& theta);

}  // namespace nctorus
