#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace nctorus {

/// A subset F of the vertex set {0, ..., n-1}, stored as a bitmask.
/// Displayed 1-based, e.g. "{1,3}".
class Face {
 public:
  static constexpr std::size_t kMaxVertices = 31;

  constexpr Face() = default;
  constexpr explicit Face(std::uint32_t bits) : bits_(bits) {}
  Face(std::initializer_list<std::size_t> zero_based) {
    for (std::size_t v : zero_based) insert(v);
  }
  static Face full(std::size_t n) {
    if (n > kMaxVertices) throw std::invalid_argument("face universe too large");
    return Face(n == 0 ? 0u : (0xFFFFFFFFu >> (32 - n)));
  }
  static Face from_one_based(const std::vector<std::size_t>& vertices) {
    Face f;
    for (std::size_t v : vertices) {
      if (v == 0 || v > kMaxVertices) throw std::invalid_argument("face vertex out of range");
      f.insert(v - 1);
    }
    return f;
  }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool contains(std::size_t v) const noexcept { return (bits_ >> v) & 1u; }
  constexpr bool is_subset_of(Face other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  void insert(std::size_t v) {
    if (v >= kMaxVertices) throw std::invalid_argument("face vertex out of range");
    bits_ |= 1u << v;
  }
  constexpr Face without(std::size_t v) const noexcept { return Face(bits_ & ~(1u << v)); }

  /// 0-based vertices, increasing.
  std::vector<std::size_t> vertices() const {
    std::vector<std::size_t> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }
  std::vector<std::size_t> one_based() const {
    auto out = vertices();
    for (auto& v : out) ++v;
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (std::size_t v : vertices()) {
      if (!first) s += ',';
      s += std::to_string(v + 1);
      first = false;
    }
    return s + "}";
  }

  friend constexpr bool operator==(Face a, Face b) noexcept { return a.bits_ == b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

/// Report order: by size, then lexicographically on the sorted vertex lists.
inline bool face_order(Face a, Face b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  // equal sizes: the face holding the smallest differing vertex sorts first
  const std::uint32_t lowest = (a.bits() ^ b.bits()) & (~(a.bits() ^ b.bits()) + 1u);
  return (a.bits() & lowest) != 0;
}

}  // namespace nctorus
