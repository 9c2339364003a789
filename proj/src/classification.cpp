#include "nctorus/classification.hpp"

#include <string>

#include "nctorus/errors.hpp"
#include "nctorus/face_geometry.hpp"

namespace nctorus {

std::string_view to_string(AlgebraKind kind) { return kind == AlgebraKind::torus ? "torus" : "sphere"; }

AlgebraKind parse_algebra_kind(std::string_view text) {
  if (text == "torus") return AlgebraKind::torus;
  if (text == "sphere") return AlgebraKind::sphere;
  throw InvalidInput("unknown algebra kind '" + std::string(text) + "' (expected torus or sphere)");
}

CharClass characteristic_two_class(const Integer& p, const Integer& q, const Integer& n) {
  if (q <= 0) throw InvalidInput("q must be positive");
  if (n <= 0) throw InvalidInput("n must be positive");
  if (gcd(p, q) != 1) throw InvalidInput("p = " + p.get_str() + " and q = " + q.get_str() + " are not coprime");
  Integer inverse = 0;
  if (q > 1) mpz_invert(inverse.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  CharClass c;
  c.modulus = q * n;
  c.residue = (n * inverse) % c.modulus;
  return c;
}

std::string_view describe(IsoRelation relation) {
  switch (relation) {
    case IsoRelation::shift: return "theta - theta' in Z";
    case IsoRelation::reflection: return "theta + theta' in Z";
    case IsoRelation::tensor_mismatch: return "n != n'";
    case IsoRelation::none: return "theta -/+ theta' not in Z";
  }
  return "";
}

IsoRelation iso_relation(const Rational& theta, const Integer& n, const Rational& theta_prime,
                         const Integer& n_prime) {
  if (n <= 0 || n_prime <= 0) throw InvalidInput("tensor sizes must be positive");
  if (n != n_prime) return IsoRelation::tensor_mismatch;
  if (is_integral(Rational(theta - theta_prime))) return IsoRelation::shift;
  if (is_integral(Rational(theta + theta_prime))) return IsoRelation::reflection;
  return IsoRelation::none;
}

bool iso_sphere3(const Rational& theta, const Integer& n, const Rational& theta_prime, const Integer& n_prime) {
  const IsoRelation r = iso_relation(theta, n, theta_prime, n_prime);
  return r == IsoRelation::shift || r == IsoRelation::reflection;
}

bool iso_torus2(const Rational& theta, const Integer& n, const Rational& theta_prime, const Integer& n_prime) {
  return iso_sphere3(theta, n, theta_prime, n_prime);
}

bool class_chain_check(const Integer& p, const Integer& q, const Integer& p_prime, const Integer& q_prime,
                       const Integer& n) {
  if (q != q_prime) throw InvalidInput("class comparison needs q == q'");
  const CharClass a = characteristic_two_class(p, q, n);
  const CharClass b = characteristic_two_class(p_prime, q, n);
  Integer negated = (a.modulus - b.residue) % a.modulus;
  const bool classes_agree = a.residue == b.residue || a.residue == negated;

  const bool divides = mpz_divisible_p(Integer(p - p_prime).get_mpz_t(), q.get_mpz_t()) ||
                       mpz_divisible_p(Integer(p + p_prime).get_mpz_t(), q.get_mpz_t());
  const bool iso = iso_sphere3(Rational(p, q), n, Rational(p_prime, q), n);
  if (classes_agree != divides || divides != iso) {
    throw std::logic_error("class chain broken for p=" + p.get_str() + ", p'=" + p_prime.get_str() +
                           ", q=" + q.get_str() + ", n=" + n.get_str());
  }
  return classes_agree;
}

Integer fiber_k0_rank(const SkewRationalMatrix& theta, Face face) {
  const std::size_t m = theta.size();
  if (!face.is_subset_of(Face::full(m))) throw std::invalid_argument("face is not a subset of [m]");
  if (face == Face::full(m)) throw InvalidInput("fiber K0 rank is only defined for proper faces");
  const Lattice gamma_f = lattice_restrict(integrality_kernel(theta.matrix()), face.vertices());
  const std::size_t r = m - gamma_f.rank();
  Integer rank = 1;
  mpz_mul_2exp(rank.get_mpz_t(), rank.get_mpz_t(), r - 1);
  return rank;
}

RecoveryInvariants recovery_invariants(const AlgebraDescriptor& d) {
  if (d.n_tensor <= 0) throw InvalidInput("tensor size must be positive");
  const std::size_t m = d.m();
  RecoveryInvariants r;
  r.identity_divisibility = d.n_tensor;
  if (d.kind == AlgebraKind::sphere) {
    if (m < 2) throw InvalidInput("sphere descriptors need m >= 2");
    Integer min_pi = -1;
    const ThetaProfile p = profile(d.theta);
    for (std::size_t v = 0; v < m; ++v) {
      const Integer pi = face_invariants(p, Face{v}).pi_degree;
      if (min_pi < 0 || pi < min_pi) min_pi = pi;
    }
    r.min_irrep_dim = d.n_tensor * min_pi;
    r.dim_center_spectrum = 2 * m - 1;
    r.k0_rank = fiber_k0_rank(d.theta, Face{});
  } else {
    if (m < 1) throw InvalidInput("torus descriptors need m >= 1");
    r.min_irrep_dim = d.n_tensor * profile(d.theta).pi_degree;
    r.dim_center_spectrum = m;
    r.k0_rank = 1;
    mpz_mul_2exp(r.k0_rank.get_mpz_t(), r.k0_rank.get_mpz_t(), m - 1);
  }
  return r;
}

CenterFiniteness center_finiteness(const SkewRationalMatrix& theta) {
  return CenterFiniteness{theta.is_integral(), true};
}

}  // namespace nctorus
