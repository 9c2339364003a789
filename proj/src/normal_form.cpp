#include "nctorus/normal_form.hpp"

#include <optional>
#include <utility>

#include "nctorus/errors.hpp"

namespace nctorus {

HermiteForm hermite_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  std::vector<std::size_t> pivots;

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      if (a(r, c) == 0) {
        a.swap_rows(r, i);
        u.swap_rows(r, i);
        continue;
      }
      // [[x, y], [-b/g, a/g]] has determinant 1.
      const Integer pa = a(r, c);
      const Integer pb = a(i, c);
      const ExtendedGcd eg = extended_gcd(pa, pb);
      const Integer ag = pa / eg.g;
      const Integer bg = pb / eg.g;
      for (IntMatrix* mat : {&a, &u}) {
        for (std::size_t j = 0; j < mat->cols(); ++j) {
          const Integer top = (*mat)(r, j);
          const Integer bot = (*mat)(i, j);
          (*mat)(r, j) = eg.x * top + eg.y * bot;
          (*mat)(i, j) = ag * bot - bg * top;
        }
      }
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      a.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t k = 0; k < r; ++k) {
      const Integer q = floor_div(a(k, c), a(r, c));
      if (q == 0) continue;
      a.add_row_multiple(k, r, -q);
      u.add_row_multiple(k, r, -q);
    }
    pivots.push_back(c);
    ++r;
  }
  return HermiteForm{std::move(a), std::move(u), r, std::move(pivots)};
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  const std::size_t k = std::min(diagonal.rows(), diagonal.cols());
  for (std::size_t i = 0; i < k; ++i) out.push_back(diagonal(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  auto swap_r = [&](std::size_t x, std::size_t y) { a.swap_rows(x, y); u.swap_rows(x, y); };
  auto swap_c = [&](std::size_t x, std::size_t y) { a.swap_cols(x, y); v.swap_cols(x, y); };
  auto add_r = [&](std::size_t d, std::size_t s, const Integer& f) { a.add_row_multiple(d, s, f); u.add_row_multiple(d, s, f); };
  auto add_c = [&](std::size_t d, std::size_t s, const Integer& f) { a.add_col_multiple(d, s, f); v.add_col_multiple(d, s, f); };

  const std::size_t diag = std::min(rows, cols);
  for (std::size_t t = 0; t < diag; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (!best || abs(a(i, j)) < abs(a(best->first, best->second)))) best = {i, j};
    if (!best) break;
    swap_r(t, best->first);
    swap_c(t, best->second);

    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        while (a(i, t) != 0) {
          const Integer q = a(i, t) / a(t, t);
          add_r(i, t, -q);
          if (a(i, t) != 0) swap_r(i, t);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        while (a(t, j) != 0) {
          const Integer q = a(t, j) / a(t, t);
          add_c(j, t, -q);
          if (a(t, j) != 0) swap_c(j, t);
        }
      }
      bool column_clear = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (a(i, t) != 0) column_clear = false;
      if (!column_clear) continue;

      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            offender = i;
            break;
          }
      if (!offender) break;
      add_r(t, *offender, Integer(1));
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  return SmithForm{std::move(a), std::move(u), std::move(v)};
}

bool is_skew_symmetric(const IntMatrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  }
  return true;
}

IntMatrix SkewNormalForm::block_matrix() const {
  const std::size_t n = 2 * divisors.size() + zero_rank;
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    b(2 * i, 2 * i + 1) = divisors[i];
    b(2 * i + 1, 2 * i) = -divisors[i];
  }
  return b;
}

namespace {

// Congruence by an elementary matrix: A <- E A E^t, T <- E T.
struct CongruenceState {
  IntMatrix a;
  IntMatrix t;

  void swap(std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    a.swap_cols(x, y);
    t.swap_rows(x, y);
  }
  // basis vector e_dst <- e_dst + factor * e_src
  void add(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    a.add_row_multiple(dst, src, factor);
    a.add_col_multiple(dst, src, factor);
    t.add_row_multiple(dst, src, factor);
  }
};

}  // namespace

SkewNormalForm skew_normal_form(const IntMatrix& h) {
  if (!h.is_square()) throw InvalidInput("skew normal form needs a square matrix");
  for (std::size_t i = 0; i < h.rows(); ++i)
    if (h(i, i) != 0) throw InvalidInput("skew normal form: nonzero diagonal entry at " + std::to_string(i + 1));
  if (!is_skew_symmetric(h)) throw InvalidInput("skew normal form: matrix is not skew-symmetric");

  const std::size_t n = h.rows();
  CongruenceState s{h, IntMatrix::identity(n)};
  std::vector<Integer> divisors;

  std::size_t k = 0;
  while (k + 1 < n) {
    // Pivot: smallest nonzero |a(i,j)|, i < j, in the trailing block, moved to (k, k+1).
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (s.a(i, j) != 0 && (!best || abs(s.a(i, j)) < abs(s.a(best->first, best->second)))) best = {i, j};
    if (!best) break;
    auto [pi, pj] = *best;
    s.swap(k, pi);
    if (pj == k) pj = pi;
    s.swap(k + 1, pj);
    if (s.a(k, k + 1) < 0) s.swap(k, k + 1);
    const Integer d = s.a(k, k + 1);

    bool remainder = false;
    for (std::size_t j = k + 2; j < n; ++j) {
      s.add(j, k + 1, -floor_div(s.a(k, j), d));
      s.add(j, k, floor_div(s.a(k + 1, j), d));
      if (s.a(k, j) != 0 || s.a(k + 1, j) != 0) remainder = true;
    }
    if (remainder) continue;

    std::optional<std::size_t> offender;
    for (std::size_t i = k + 2; i < n && !offender; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!mpz_divisible_p(s.a(i, j).get_mpz_t(), d.get_mpz_t())) {
          offender = i;
          break;
        }
    if (offender) {
      // pulls a non-multiple of d into row k; the next pass reduces it below d
      s.add(k, *offender, Integer(1));
      continue;
    }
    divisors.push_back(d);
    k += 2;
  }
  const std::size_t zero_rank = n - 2 * divisors.size();
  return SkewNormalForm{std::move(s.t), std::move(divisors), zero_rank};
}

}  // namespace nctorus
