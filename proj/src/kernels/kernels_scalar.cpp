#include "taft/kernels.hpp"

namespace taft::kernels::scalar {

void axpy_mod(std::span<uint32_t> y, std::span<const uint32_t> x, uint32_t a, uint32_t p) {
  const std::size_t n = y.size();
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = static_cast<uint32_t>((y[i] + static_cast<uint64_t>(a) * x[i]) % p);
  }
}

void scale_mod(std::span<uint32_t> y, uint32_t a, uint32_t p) {
  for (auto& v : y) v = static_cast<uint32_t>(static_cast<uint64_t>(a) * v % p);
}

}  // namespace taft::kernels::scalar
