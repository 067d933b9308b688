#include <cstdlib>
#include <stdexcept>
#include <string>

#include "narrowpass/kernels.hpp"

namespace narrowpass::kernels {

const Ops& scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
const Ops& avx2_ops();
#endif

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect_backend() { return avx2_available() ? Backend::kAvx2 : Backend::kScalar; }

namespace {

Backend g_backend = Backend::kScalar;
bool g_initialized = false;

void init_once() {
  if (g_initialized) return;
  g_backend = detect_backend();
  if (const char* env = std::getenv("NARROWPASS_KERNELS")) {
    const std::string want(env);
    if (want == "scalar") g_backend = Backend::kScalar;
    if (want == "avx2" && avx2_available()) g_backend = Backend::kAvx2;
  }
  g_initialized = true;
}

}  // namespace

Backend active_backend() {
  init_once();
  return g_backend;
}

bool set_backend(Backend b) {
  init_once();
  if (b == Backend::kAvx2 && !avx2_available()) return false;
  g_backend = b;
  return true;
}

const Ops& ops_for(Backend b) {
#if defined(__x86_64__) || defined(_M_X64)
  if (b == Backend::kAvx2) {
    if (!avx2_available()) throw std::runtime_error("AVX2 kernels not supported on this CPU");
    return avx2_ops();
  }
#else
  if (b == Backend::kAvx2) throw std::runtime_error("AVX2 kernels not built for this target");
#endif
  return scalar_ops();
}

const Ops& ops() { return ops_for(active_backend()); }

std::string backend_name(Backend b) {
  return b == Backend::kAvx2 ? "avx2" : "scalar";
}

}  // namespace narrowpass::kernels
