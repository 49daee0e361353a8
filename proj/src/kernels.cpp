#include "scv/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_detail.hpp"

namespace scv::kernels {
namespace {

bool cpu_has_avx2() {
#if (defined(__x86_64__) || defined(__i386__)) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const Ops* lookup(Backend b) {
  switch (b) {
    case Backend::scalar:
      return &scalar_ops();
    case Backend::avx2:
      return cpu_has_avx2() ? avx2_ops_or_null() : nullptr;
    case Backend::neon:
      return neon_ops_or_null();
  }
  return nullptr;
}

Backend detect() {
  if (const char* env = std::getenv("SCV_KERNELS")) {
    const std::string want(env);
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
      if (want == backend_name(b) && lookup(b) != nullptr) return b;
    }
    // Unknown or unavailable request falls through to autodetection.
  }
  if (lookup(Backend::avx2) != nullptr) return Backend::avx2;
  if (lookup(Backend::neon) != nullptr) return Backend::neon;
  return Backend::scalar;
}

const Ops*& active_slot() {
  static const Ops* active = lookup(detect());
  return active;
}

}  // namespace

const Ops& ops() { return *active_slot(); }

Backend detected_backend() {
  static const Backend b = detect();
  return b;
}

bool backend_available(Backend b) { return lookup(b) != nullptr; }

void force_backend(Backend b) {
  const Ops* picked = lookup(b);
  if (picked == nullptr) {
    throw std::invalid_argument(std::string("kernel backend not available: ") + backend_name(b));
  }
  active_slot() = picked;
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
    case Backend::neon:
      return "neon";
  }
  return "unknown";
}

}  // namespace scv::kernels
