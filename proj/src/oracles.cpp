#include "nctorus/oracles.hpp"

#include <vector>

#include "nctorus/errors.hpp"
#include "nctorus/kernels.hpp"

namespace nctorus::oracle {
namespace {

constexpr std::size_t kBatch = 4096;

std::uint64_t checked_power(const Integer& base, std::size_t exponent, std::uint64_t limit, const char* what) {
  Integer total = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    total *= base;
    if (total > limit) {
      throw GuardExceeded(std::string(what) + " enumeration exceeds the limit of " + std::to_string(limit));
    }
  }
  return total.get_ui();
}

// Calls sink(codes) with the base-ell codes of M v over every v in (Z/ell)^cols.
template <class Sink>
void enumerate_images(const std::vector<std::uint32_t>& entries, std::size_t rows, std::size_t cols,
                      std::uint32_t ell, std::uint64_t total, Sink&& sink) {
  const kernels::ModMatrixView view{entries, rows, cols, ell};
  std::vector<std::uint32_t> vectors(cols * kBatch);
  std::vector<std::uint32_t> codes(kBatch);
  std::vector<std::uint32_t> digits(cols, 0);
  for (std::uint64_t start = 0; start < total; start += kBatch) {
    const std::size_t batch = static_cast<std::size_t>(std::min<std::uint64_t>(kBatch, total - start));
    for (std::size_t b = 0; b < batch; ++b) {
      for (std::size_t j = 0; j < cols; ++j) vectors[j * batch + b] = digits[j];
      for (std::size_t j = 0; j < cols; ++j) {
        if (++digits[j] < ell) break;
        digits[j] = 0;
      }
    }
    kernels::encode_images(view, std::span<const std::uint32_t>(vectors.data(), cols * batch), batch,
                           std::span<std::uint32_t>(codes.data(), batch));
    sink(std::span<const std::uint32_t>(codes.data(), batch));
  }
}

std::vector<std::uint32_t> reduce_mod(const IntMatrix& h, const Integer& ell) {
  std::vector<std::uint32_t> out;
  out.reserve(h.rows() * h.cols());
  for (const Integer& x : h.entries()) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), ell.get_mpz_t());
    out.push_back(static_cast<std::uint32_t>(r.get_ui()));
  }
  return out;
}

}  // namespace

OracleReport compare(std::string label, const Integer& main_value, const Integer& oracle_value) {
  return OracleReport{std::move(label), main_value, oracle_value, main_value == oracle_value};
}

Integer brute_image_count(const IntMatrix& h, const Integer& ell) {
  if (ell <= 0) throw InvalidInput("modulus must be positive");
  const std::size_t n = h.cols();
  const std::uint64_t inputs = checked_power(ell, n, kImageCountLimit, "image-count");
  const std::uint64_t outputs = checked_power(ell, h.rows(), kImageCountLimit, "image-count");
  const auto entries = reduce_mod(h, ell);
  std::vector<std::uint8_t> seen(outputs, 0);
  std::uint64_t distinct = 0;
  enumerate_images(entries, h.rows(), n, static_cast<std::uint32_t>(ell.get_ui()), inputs,
                   [&](std::span<const std::uint32_t> codes) {
                     for (std::uint32_t c : codes)
                       if (!seen[c]) {
                         seen[c] = 1;
                         ++distinct;
                       }
                   });
  return Integer(static_cast<unsigned long>(distinct));
}

Integer brute_coset_index(const Lattice& sub, const Lattice& super) {
  if (sub.ambient_rank() != super.ambient_rank()) throw LatticeError("coset count: ambient ranks differ");
  if (!sub.is_full_rank() || !super.is_full_rank()) throw LatticeError("coset count: infinite index");
  if (!super.contains(sub)) throw LatticeError("coset count: sublattice is not contained in superlattice");
  const std::size_t n = sub.ambient_rank();
  std::vector<Integer> extent(n);
  Integer box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    extent[i] = sub.basis()(i, i);
    box *= extent[i];
    if (box > kCosetBoxLimit) throw GuardExceeded("coset box exceeds the limit of " + std::to_string(kCosetBoxLimit));
  }
  IntVector point(n, Integer(0));
  std::uint64_t count = 0;
  for (std::uint64_t step = 0, total = box.get_ui(); step < total; ++step) {
    if (super.contains(point)) ++count;
    for (std::size_t j = 0; j < n; ++j) {
      if (++point[j] < extent[j]) break;
      point[j] = 0;
    }
  }
  return Integer(static_cast<unsigned long>(count));
}

BlockStructure twisted_block_structure(const SkewRationalMatrix& theta, Face face, const Integer& ell) {
  if (ell <= 0) throw InvalidInput("modulus must be positive");
  if (!face.is_subset_of(Face::full(theta.size()))) throw std::invalid_argument("face is not a subset of [n]");
  const SkewRationalMatrix restricted = theta.restrict_to(face.vertices());
  if (!mpz_divisible_p(ell.get_mpz_t(), restricted.common_denominator().get_mpz_t())) {
    throw InvalidInput("ell * theta|_F is not integral for ell = " + ell.get_str());
  }
  const std::size_t k = face.size();
  const std::uint64_t group_order = checked_power(ell, k, kTwistedGroupLimit, "twisted group");

  // g is in the radical iff e(g'^t theta g) = 1 for all g', i.e. (ell theta) g = 0 mod ell.
  const auto entries = reduce_mod(scale_to_integer(restricted.matrix(), ell), ell);
  std::uint64_t radical = 0;
  enumerate_images(entries, k, k, static_cast<std::uint32_t>(ell.get_ui()), group_order,
                   [&](std::span<const std::uint32_t> codes) {
                     for (std::uint32_t c : codes) radical += (c == 0);
                   });
  const Integer quotient = Integer(static_cast<unsigned long>(group_order)) / Integer(static_cast<unsigned long>(radical));
  return BlockStructure{Integer(static_cast<unsigned long>(radical)), exact_sqrt(quotient)};
}

}  // namespace nctorus::oracle
