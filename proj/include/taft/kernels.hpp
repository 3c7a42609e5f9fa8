#pragma once

#include <cstdint>
#include <span>

// Hot loops of the prime-field linear algebra. Every routine has a portable
// scalar reference; an AVX2 variant is selected at runtime when the CPU
// supports it (set TAFT_FORCE_SCALAR=1 to disable).
//
// All operands are residues in [0, p) with p < 2^31.
namespace taft::kernels {

enum class Backend { Scalar, Avx2 };

Backend active_backend();
const char* backend_name(Backend b);
bool avx2_available();
/// Override the dispatch decision; returns false if the backend is unavailable.
bool set_backend(Backend b);

/// y <- y + a*x (mod p); x and y have equal length.
void axpy_mod(std::span<uint32_t> y, std::span<const uint32_t> x, uint32_t a, uint32_t p);
/// y <- a*y (mod p)
void scale_mod(std::span<uint32_t> y, uint32_t a, uint32_t p);

namespace scalar {
void axpy_mod(std::span<uint32_t> y, std::span<const uint32_t> x, uint32_t a, uint32_t p);
void scale_mod(std::span<uint32_t> y, uint32_t a, uint32_t p);
}  // namespace scalar

namespace avx2 {
// Only callable when avx2_available().
void axpy_mod(std::span<uint32_t> y, std::span<const uint32_t> x, uint32_t a, uint32_t p);
void scale_mod(std::span<uint32_t> y, uint32_t a, uint32_t p);
}  // namespace avx2

}  // namespace taft::kernels
