#include <atomic>

#include "nctorus/kernels.hpp"

namespace nctorus::kernels {
namespace {

// -1: detect, otherwise an Isa value
std::atomic<int> isa_override{-1};

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(NCTORUS_HAVE_AVX2_KERNEL) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported;
#else
  return false;
#endif
}

bool avx2_applicable(const ModMatrixView& m) {
  if (m.ell < 2 || m.cols > 32) return false;
  const unsigned __int128 bound = static_cast<unsigned __int128>(m.cols) * (m.ell - 1) * (m.ell - 1) * m.ell;
  return bound < (static_cast<unsigned __int128>(1) << 32);
}

Isa active_isa() {
  const int forced = isa_override.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Isa>(forced);
  return avx2_available() ? Isa::avx2 : Isa::scalar;
}

void set_isa_override(std::optional<Isa> isa) {
  isa_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

void encode_images(const ModMatrixView& m, std::span<const std::uint32_t> vectors, std::size_t batch,
                   std::span<std::uint32_t> out) {
#if defined(NCTORUS_HAVE_AVX2_KERNEL)
  if (active_isa() == Isa::avx2 && avx2_available() && avx2_applicable(m)) {
    encode_images_avx2(m, vectors, batch, out);
    return;
  }
#endif
  encode_images_scalar(m, vectors, batch, out);
}

}  // namespace nctorus::kernels
