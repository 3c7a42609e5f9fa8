#include <atomic>
#include <cstdlib>
#include <cstring>

#include "taft/kernels.hpp"

namespace taft::kernels {

#ifndef TAFT_HAVE_AVX2
namespace avx2 {
// Stubs so the symbols exist; dispatch never selects them.
void axpy_mod(std::span<uint32_t> y, std::span<const uint32_t> x, uint32_t a, uint32_t p) {
  scalar::axpy_mod(y, x, a, p);
}
void scale_mod(std::span<uint32_t> y, uint32_t a, uint32_t p) { scalar::scale_mod(y, a, p); }
}  // namespace avx2
#endif

namespace {

bool cpu_has_avx2() {
#if defined(TAFT_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend initial_backend() {
  const char* force = std::getenv("TAFT_FORCE_SCALAR");
  if (force && *force && std::strcmp(force, "0") != 0) return Backend::Scalar;
  return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{initial_backend()};
  return b;
}

}  // namespace

bool avx2_available() { return cpu_has_avx2(); }

Backend active_backend() { return current().load(std::memory_order_relaxed); }

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool set_backend(Backend b) {
  if (b == Backend::Avx2 && !cpu_has_avx2()) return false;
  current().store(b, std::memory_order_relaxed);
  return true;
}

void axpy_mod(std::span<uint32_t> y, std::span<const uint32_t> x, uint32_t a, uint32_t p) {
  if (active_backend() == Backend::Avx2) avx2::axpy_mod(y, x, a, p);
  else scalar::axpy_mod(y, x, a, p);
}

void scale_mod(std::span<uint32_t> y, uint32_t a, uint32_t p) {
  if (active_backend() == Backend::Avx2) avx2::scale_mod(y, a, p);
  else scalar::scale_mod(y, a, p);
}

}  // namespace taft::kernels
