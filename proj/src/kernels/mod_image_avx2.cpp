#include <immintrin.h>

#include "nctorus/kernels.hpp"

namespace nctorus::kernels {
namespace {

// High 32 bits of the 32x32 products, lane-wise.
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  const __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), b);
  return _mm256_blend_epi32(even, odd, 0b10101010);
}

}  // namespace

void encode_images_avx2(const ModMatrixView& m, std::span<const std::uint32_t> vectors, std::size_t batch,
                        std::span<std::uint32_t> out) {
  // floor(x / ell) == mulhi(x, magic) for x < 2^32 / ell
  const std::uint32_t magic = static_cast<std::uint32_t>((std::uint64_t{1} << 32) / m.ell + 1);
  const __m256i magic_v = _mm256_set1_epi32(static_cast<int>(magic));
  const __m256i ell_v = _mm256_set1_epi32(static_cast<int>(m.ell));
  const __m256i ell_minus_one = _mm256_set1_epi32(static_cast<int>(m.ell) - 1);

  std::size_t b = 0;
  for (; b + 8 <= batch; b += 8) {
    __m256i code = _mm256_setzero_si256();
    std::uint32_t weight = 1;
    for (std::size_t i = 0; i < m.rows; ++i) {
      __m256i acc = _mm256_setzero_si256();
      for (std::size_t j = 0; j < m.cols; ++j) {
        const __m256i coeff = _mm256_set1_epi32(static_cast<int>(m.entries[i * m.cols + j]));
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(vectors.data() + j * batch + b));
        acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(coeff, v));
      }
      const __m256i quotient = mulhi_epu32(acc, magic_v);
      __m256i residue = _mm256_sub_epi32(acc, _mm256_mullo_epi32(quotient, ell_v));
      const __m256i over = _mm256_cmpgt_epi32(residue, ell_minus_one);
      residue = _mm256_sub_epi32(residue, _mm256_and_si256(over, ell_v));
      code = _mm256_add_epi32(code, _mm256_mullo_epi32(residue, _mm256_set1_epi32(static_cast<int>(weight))));
      weight *= m.ell;
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + b), code);
  }
  if (b < batch) {
    // tail: repack the remaining vectors for the scalar kernel
    const std::size_t rest = batch - b;
    std::uint32_t tail_vectors[8 * 32];
    std::uint32_t tail_out[8];
    for (std::size_t j = 0; j < m.cols; ++j)
      for (std::size_t t = 0; t < rest; ++t) tail_vectors[j * rest + t] = vectors[j * batch + b + t];
    encode_images_scalar(m, std::span<const std::uint32_t>(tail_vectors, m.cols * rest), rest,
                         std::span<std::uint32_t>(tail_out, rest));
    for (std::size_t t = 0; t < rest; ++t) out[b + t] = tail_out[t];
  }
}

}  // namespace nctorus::kernels
