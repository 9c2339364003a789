#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "nctorus/int_matrix.hpp"

namespace nctorus {

/// A subgroup of Z^n, stored by the nonzero rows of its row-style Hermite form.
///
/// The stored form is canonical, so two lattices are equal as sets exactly when
/// they compare equal.
class Lattice {
 public:
  Lattice() = default;

  /// Lattice generated by the rows of `generators` (any count, any rank).
  static Lattice from_generators(const IntMatrix& generators);
  static Lattice from_generators(std::size_t ambient_rank, std::span<const IntVector> generators);
  static Lattice standard(std::size_t ambient_rank);
  /// Diagonal lattice d_1 Z x ... x d_n Z (all d_i > 0).
  static Lattice diagonal(std::span<const Integer> scales);
  static Lattice zero(std::size_t ambient_rank);

  std::size_t ambient_rank() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  bool is_full_rank() const noexcept { return rank() == ambient_; }
  const IntMatrix& basis() const noexcept { return basis_; }
  std::span<const std::size_t> pivot_cols() const noexcept { return pivots_; }

  bool contains(std::span<const Integer> v) const;
  bool contains(const Lattice& other) const;

  /// |det| of the basis; the index in Z^n for full-rank lattices.
  Integer covolume() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Lattice(std::size_t ambient, IntMatrix basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {m in Z^n : a*m in Z^n}; always full rank.
Lattice integrality_kernel(const RationalMatrix& a);

/// [super : sub]. Throws LatticeError unless both are full rank in the same
/// ambient and sub is contained in super.
Integer lattice_index(const Lattice& sub, const Lattice& super);

/// L intersected with Z^F, with coordinates re-indexed by F in increasing order.
/// `face` lists 0-based coordinates, increasing.
Lattice lattice_restrict(const Lattice& lattice, std::span<const std::size_t> face);

Lattice lattice_sum(const Lattice& a, const Lattice& b);

}  // namespace nctorus
