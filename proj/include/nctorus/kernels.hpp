#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace nctorus::kernels {

/// Small integer matrix with entries reduced into [0, ell).
struct ModMatrixView {
  std::span<const std::uint32_t> entries;  // row-major, rows * cols
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint32_t ell = 1;
};

/// For each vector v_b of the batch, out[b] = sum_i ((M v_b)_i mod ell) * ell^i.
///
/// `vectors` is coordinate-major: coordinate j of vector b sits at
/// vectors[j * batch + b], each in [0, ell). The caller guarantees
/// ell^rows fits in 32 bits.
void encode_images_scalar(const ModMatrixView& m, std::span<const std::uint32_t> vectors, std::size_t batch,
                          std::span<std::uint32_t> out);

#if defined(NCTORUS_HAVE_AVX2_KERNEL) || defined(NCTORUS_DECLARE_AVX2_KERNEL)
/// AVX2 variant; only valid when avx2_applicable(m) holds and the CPU has AVX2.
void encode_images_avx2(const ModMatrixView& m, std::span<const std::uint32_t> vectors, std::size_t batch,
                        std::span<std::uint32_t> out);
#endif

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// Compiled in and supported by the running CPU.
bool avx2_available();

/// The AVX2 kernel's 32-bit lane arithmetic is exact for this problem size:
/// ell >= 2 and cols * (ell-1)^2 * ell < 2^32.
bool avx2_applicable(const ModMatrixView& m);

/// Best available instruction set, unless overridden.
Isa active_isa();
/// Pins the dispatcher to one variant (tests, benchmarks); nullopt restores detection.
void set_isa_override(std::optional<Isa> isa);

/// Dispatches to the AVX2 kernel when available and applicable, else scalar.
void encode_images(const ModMatrixView& m, std::span<const std::uint32_t> vectors, std::size_t batch,
                   std::span<std::uint32_t> out);

}  // namespace nctorus::kernels
