#include <doctest.h>

#include "nctorus/errors.hpp"
#include "nctorus/theta.hpp"
#include "support.hpp"

using namespace nctorus;
using namespace nctorus::testing;

TEST_CASE("skew rational matrix validation") {
  CHECK_THROWS_AS(SkewRationalMatrix(RationalMatrix{{0, 1}, {1, 0}}), InvalidInput);
  CHECK_THROWS_AS(SkewRationalMatrix(RationalMatrix{{Rational(1, 2), 0}, {0, 0}}), InvalidInput);
  CHECK_THROWS_AS(SkewRationalMatrix(RationalMatrix(2, 3)), InvalidInput);
  CHECK_NOTHROW(SkewRationalMatrix(RationalMatrix(1, 1)));
}

TEST_CASE("profile of the zero matrix") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const ThetaProfile p = profile(SkewRationalMatrix::zero(n));
    CHECK(p.h == 1);
    CHECK(p.pi_degree == 1);
    CHECK(p.kernel == Lattice::standard(n));
    CHECK(p.q == std::vector<Integer>(n, Integer(1)));
  }
}

TEST_CASE("profile of a 2x2 block is q squared") {
  const ThetaProfile p = profile(two_by_two(Rational(3, 7)));
  CHECK(p.h == 49);
  CHECK(p.pi_degree == 7);
}

TEST_CASE("profile of the s5 matrix") {
  const ThetaProfile p = profile(s5_matrix());
  CHECK(rational_image_count(s5_matrix(), 2) == 4);
  CHECK(p.ell == 2);
  CHECK(p.h == 4);
  CHECK(p.pi_degree == 2);
  CHECK(p.q == std::vector<Integer>{2, 2, 2});
  CHECK(p.kernel.basis() == IntMatrix{{1, 1, 1}, {0, 2, 0}, {0, 0, 2}});
}

TEST_CASE("three routes to h") {
  CHECK(h_by_image_count(SkewRationalMatrix::zero(3)) == 1);
  CHECK(h_by_image_count(two_by_two(Rational(1, 2))) == 4);
  CHECK(h_by_image_count(s5_matrix()) == 4);
  CHECK(h_by_kernel_index(SkewRationalMatrix::zero(2)) == 1);
  CHECK(h_by_kernel_index(two_by_two(Rational(1, 2))) == 4);
  CHECK(h_by_kernel_index(s5_matrix()) == 4);

  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const SkewRationalMatrix theta = random_skew(rng, n, 8);
    const ThetaProfile p = profile(theta);
    REQUIRE(h_by_image_count(theta) == p.h);
    REQUIRE(h_by_kernel_index(theta) == p.h);
    REQUIRE(is_perfect_square(p.h));
    for (std::size_t i = 0; i < n; ++i) REQUIRE(mpz_divisible_p(p.ell.get_mpz_t(), p.q[i].get_mpz_t()));
    // independent rational-arithmetic count for small cases
    if (n <= 3 && p.ell <= 6) REQUIRE(Integer(static_cast<unsigned long>(rational_image_count(theta, p.ell.get_si()))) == p.h);
  }
}

TEST_CASE("image count is independent of the chosen multiple of ell") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const SkewRationalMatrix theta = random_skew(rng, 2 + trial % 4, 8);
    const Integer ell = theta.common_denominator();
    const Integer h = h_by_image_count(theta);
    REQUIRE(h_by_image_count(theta, 2 * ell) == h);
    REQUIRE(h_by_image_count(theta, 3 * ell) == h);
  }
  CHECK_THROWS_AS(h_by_image_count(s5_matrix(), Integer(3)), InvalidInput);
}

TEST_CASE("2x2 law for every reduced p/q with q <= 50") {
  for (long q = 1; q <= 50; ++q)
    for (long p = -q; p <= 2 * q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const ThetaProfile prof = profile(two_by_two(Rational(p, q)));
      REQUIRE(prof.h == q * q);
      REQUIRE(prof.pi_degree == q);
    }
}

TEST_CASE("decompose examples") {
  const TorusDecomposition z = decompose(SkewRationalMatrix::zero(3));
  CHECK(z.k == 3);
  CHECK(z.factors.empty());

  const TorusDecomposition half = decompose(two_by_two(Rational(1, 2)));
  CHECK(half.k == 0);
  CHECK(half.factors == std::vector<Rational>{Rational(1, 2)});

  const TorusDecomposition s5 = decompose(s5_matrix());
  CHECK(s5.k == 1);
  CHECK(s5.factors == std::vector<Rational>{Rational(1, 2)});
  CHECK(s5_matrix().congruent(s5.witness).matrix() == s5.block_matrix());
}

TEST_CASE("decomposition witness and round trip") {
  std::mt19937_64 rng(4321);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const SkewRationalMatrix theta = random_skew(rng, n, 8);
    const TorusDecomposition d = decompose(theta);
    REQUIRE(d.k + 2 * d.factors.size() == n);
    REQUIRE(is_unimodular(d.witness));
    REQUIRE(theta.congruent(d.witness).matrix() == d.block_matrix());
    REQUIRE(congruent_over_z(theta, SkewRationalMatrix(d.block_matrix())));
    Integer product = 1;
    for (const auto& f : d.factors) {
      REQUIRE(f != 0);
      product *= Integer(f.get_den());
    }
    REQUIRE(product * product == profile(theta).h);
  }
}

TEST_CASE("congruence decisions") {
  const SkewRationalMatrix s5 = s5_matrix();
  CHECK(congruent_over_z(s5, s5));
  const IntMatrix t{{1, 0, 0}, {0, 1, 0}, {1, -1, 1}};
  CHECK(s5.congruent(t) == s5_block_form());
  CHECK(congruent_over_z(s5, s5_block_form()));
  CHECK_FALSE(congruent_over_z(two_by_two(Rational(1, 2)), two_by_two(Rational(1, 3))));
  CHECK_FALSE(congruent_over_z(SkewRationalMatrix::zero(2), SkewRationalMatrix::zero(3)));
  // same denominators, different numerators can still be incongruent
  CHECK_FALSE(congruent_over_z(two_by_two(Rational(1, 5)), two_by_two(Rational(2, 5))));
  CHECK(congruent_over_z(two_by_two(Rational(1, 5)), two_by_two(Rational(-1, 5))));
}

TEST_CASE("profile invariants are congruence invariant") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const SkewRationalMatrix theta = random_skew(rng, n, 8);
    const SkewRationalMatrix moved = theta.congruent(random_unimodular(rng, n));
    const ThetaProfile a = profile(theta);
    const ThetaProfile b = profile(moved);
    REQUIRE(a.h == b.h);
    REQUIRE(a.pi_degree == b.pi_degree);
    REQUIRE(decompose(theta).factors == decompose(moved).factors);
    REQUIRE(congruent_over_z(theta, moved));
  }
}
