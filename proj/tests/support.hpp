#pragma once

// Test-only generators and brute-force references. Nothing here calls the
// library's normal-form routines.

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "nctorus/int_matrix.hpp"
#include "nctorus/lattice.hpp"
#include "nctorus/theta.hpp"

namespace nctorus::testing {

inline SkewRationalMatrix s5_matrix() {
  const Rational h(1, 2);
  return SkewRationalMatrix(RationalMatrix{{0, h, h}, {-h, 0, h}, {-h, -h, 0}});
}

inline SkewRationalMatrix s5_block_form() {
  const Rational h(1, 2);
  return SkewRationalMatrix(RationalMatrix{{0, h, 0}, {-h, 0, 0}, {0, 0, 0}});
}

inline SkewRationalMatrix two_by_two(const Rational& a) {
  return SkewRationalMatrix(RationalMatrix{{0, a}, {-a, 0}});
}

inline SkewRationalMatrix random_skew(std::mt19937_64& rng, std::size_t n, long max_den, long max_num = 0) {
  if (max_num == 0) max_num = 2 * max_den;
  std::uniform_int_distribution<long> den(1, max_den);
  std::uniform_int_distribution<long> num(-max_num, max_num);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational x(num(rng), den(rng));
      x.canonicalize();
      m(i, j) = x;
      m(j, i) = -x;
    }
  return SkewRationalMatrix(std::move(m));
}

inline IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

/// Product of random elementary matrices; determinant +-1 by construction.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> coef(-2, 2);
  std::uniform_int_distribution<int> kind(0, 3);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = idx(rng);
    std::size_t b = idx(rng);
    if (a == b) b = (a + 1) % n;
    switch (kind(rng)) {
      case 0: u.swap_rows(a, b); break;
      case 1: u.negate_row(a); break;
      default: u.add_row_multiple(a, b, Integer(coef(rng))); break;
    }
  }
  return u;
}

/// Laplace-expansion determinant, independent of the Bareiss routine.
inline Integer laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    total += ((c % 2) ? -1 : 1) * m(0, c) * laplace_det(minor);
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == k) {
      fn(pick);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

/// Elementary divisors from gcds of k x k minors: s_k = D_k / D_{k-1}.
inline std::vector<Integer> elementary_divisors_by_minors(const IntMatrix& m) {
  const std::size_t r = std::min(m.rows(), m.cols());
  std::vector<Integer> d(r + 1, Integer(0));
  d[0] = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    Integer g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        g = nctorus::gcd(g, laplace_det(sub));
      });
    });
    d[k] = g;
  }
  std::vector<Integer> s;
  for (std::size_t k = 1; k <= r; ++k) s.push_back(d[k - 1] == 0 ? Integer(0) : Integer(d[k] / d[k - 1]));
  return s;
}

/// Calls fn on every vector of {-bound..bound}^n.
inline void for_each_box_point(std::size_t n, long bound, const std::function<void(const IntVector&)>& fn) {
  IntVector v(n, Integer(-bound));
  for (;;) {
    fn(v);
    std::size_t j = 0;
    for (; j < n; ++j) {
      if (v[j] < bound) {
        ++v[j];
        break;
      }
      v[j] = -bound;
    }
    if (j == n) return;
  }
}

/// True when lattice membership agrees with `member` on every box point.
inline bool matches_on_box(const Lattice& l, long bound, const std::function<bool(const IntVector&)>& member) {
  bool ok = true;
  for_each_box_point(l.ambient_rank(), bound, [&](const IntVector& v) {
    if (l.contains(v) != member(v)) ok = false;
  });
  return ok;
}

/// theta m in Z^n, by direct rational arithmetic.
inline bool integral_image(const SkewRationalMatrix& theta, const IntVector& m) {
  for (std::size_t i = 0; i < theta.size(); ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < theta.size(); ++j) acc += theta(i, j) * Rational(m[j]);
    acc.canonicalize();
    if (acc.get_den() != 1) return false;
  }
  return true;
}

/// |{theta m mod Z^n}| over m in {0..ell-1}^n, counted with rational arithmetic.
inline std::size_t rational_image_count(const SkewRationalMatrix& theta, long ell) {
  const std::size_t n = theta.size();
  std::vector<std::vector<Rational>> seen;
  IntVector m(n, Integer(0));
  for (;;) {
    std::vector<Rational> img(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += theta(i, j) * Rational(m[j]);
      acc.canonicalize();
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), acc.get_num_mpz_t(), acc.get_den_mpz_t());
      img[i] = acc - Rational(fl);
      img[i].canonicalize();
    }
    bool found = false;
    for (const auto& s : seen)
      if (s == img) found = true;
    if (!found) seen.push_back(img);
    std::size_t j = 0;
    for (; j < n; ++j) {
      if (++m[j] < ell) break;
      m[j] = 0;
    }
    if (j == n) break;
  }
  return seen.size();
}

}  // namespace nctorus::testing
