#pragma once

#include <cstddef>
#include <vector>

#include "nctorus/int_matrix.hpp"

namespace nctorus {

/// Row-style Hermite form: unimodular `transform` with transform * input == form.
///
/// `form` is in row echelon shape; every pivot is positive and entries above a
/// pivot lie in [0, pivot). Zero rows are at the bottom, `rank` counts the
/// nonzero ones and `pivot_cols[i]` is the pivot column of row i.
struct HermiteForm {
  IntMatrix form;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

/// left * input * right == diagonal, with diagonal entries s_1 | s_2 | ... >= 0.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;

  std::vector<Integer> invariant_factors() const;
};

/// Unimodular congruence form of an integer skew-symmetric matrix:
/// transform * H * transform^t = [[0,d1],[-d1,0]] (+) ... (+) [[0,dr],[-dr,0]] (+) 0_k.
struct SkewNormalForm {
  IntMatrix transform;
  std::vector<Integer> divisors;
  std::size_t zero_rank = 0;

  /// The block matrix the transform is claimed to produce.
  IntMatrix block_matrix() const;
};

HermiteForm hermite_normal_form(const IntMatrix& m);
SmithForm smith_normal_form(const IntMatrix& m);

bool is_skew_symmetric(const IntMatrix& m);

/// Throws InvalidInput if h is not square skew-symmetric with zero diagonal.
SkewNormalForm skew_normal_form(const IntMatrix& h);

}  // namespace nctorus
