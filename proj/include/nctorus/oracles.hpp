#pragma once

#include <cstdint>
#include <string>

#include "nctorus/face.hpp"
#include "nctorus/lattice.hpp"
#include "nctorus/theta.hpp"

namespace nctorus {

/// Enumeration-based cross-checks. None of these touch the Hermite/Smith/skew
/// normal-form routines; guards throw GuardExceeded rather than truncating.
namespace oracle {

inline constexpr std::uint64_t kImageCountLimit = 10'000'000;  // ell^n
inline constexpr std::uint64_t kCosetBoxLimit = 10'000'000;    // [Z^n : sub]
inline constexpr std::uint64_t kTwistedGroupLimit = 1'000'000; // ell^|F|

struct OracleReport {
  std::string checked_quantity;
  Integer main_value;
  Integer oracle_value;
  bool agrees = false;

  friend bool operator==(const OracleReport&, const OracleReport&) = default;
};

OracleReport compare(std::string label, const Integer& main_value, const Integer& oracle_value);

/// |{H v mod ell : v in (Z/ell)^n}| by enumerating every v.
Integer brute_image_count(const IntMatrix& h, const Integer& ell);

/// [super : sub] by counting super-lattice points in the box prod [0, s_i)
/// spanned by the diagonal of sub's stored basis, a fundamental domain for sub.
Integer brute_coset_index(const Lattice& sub, const Lattice& super);

struct BlockStructure {
  Integer block_count;
  Integer block_size;

  friend bool operator==(const BlockStructure&, const BlockStructure&) = default;
};

/// Twisted group algebra of G = (Z/ell)^F with the bicharacter e(g'^t theta|_F g):
/// block_count = |radical|, block_size = sqrt(|G| / |radical|).
BlockStructure twisted_block_structure(const SkewRationalMatrix& theta, Face face, const Integer& ell);

}  // namespace oracle
}  // namespace nctorus
