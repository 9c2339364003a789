#include "nctorus/kernels.hpp"

namespace nctorus::kernels {

void encode_images_scalar(const ModMatrixView& m, std::span<const std::uint32_t> vectors, std::size_t batch,
                          std::span<std::uint32_t> out) {
  const std::uint64_t ell = m.ell;
  for (std::size_t b = 0; b < batch; ++b) {
    std::uint64_t code = 0;
    std::uint64_t weight = 1;
    for (std::size_t i = 0; i < m.rows; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < m.cols; ++j) {
        acc += static_cast<std::uint64_t>(m.entries[i * m.cols + j]) * vectors[j * batch + b];
        acc %= ell;
      }
      code += acc * weight;
      weight *= ell;
    }
    out[b] = static_cast<std::uint32_t>(code);
  }
}

}  // namespace nctorus::kernels
