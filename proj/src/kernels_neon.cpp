// NEON variants (aarch64 baseline). Same no-FMA discipline as the AVX2 file.

#include "kernels_detail.hpp"

#if defined(__ARM_NEON) && defined(__aarch64__)

#include <arm_neon.h>

namespace scv::kernels {
namespace {

void add_neon(double* dst, const double* a, const double* b, std::size_t len) {
  std::size_t j = 0;
  for (; j + 2 <= len; j += 2) {
    vst1q_f64(dst + j, vaddq_f64(vld1q_f64(a + j), vld1q_f64(b + j)));
  }
  for (; j < len; ++j) dst[j] = a[j] + b[j];
}

void axpy_neon(double* acc, const double* row, double w, std::size_t len) {
  const float64x2_t vw = vdupq_n_f64(w);
  std::size_t j = 0;
  for (; j + 2 <= len; j += 2) {
    float64x2_t vr = vld1q_f64(row + j);
    float64x2_t va = vld1q_f64(acc + j);
    vst1q_f64(acc + j, vaddq_f64(va, vmulq_f64(vw, vr)));
  }
  for (; j < len; ++j) acc[j] += w * row[j];
}

void min_plus_neon(double* best, const double* row, double shift, std::size_t len) {
  const float64x2_t vs = vdupq_n_f64(shift);
  std::size_t j = 0;
  for (; j + 2 <= len; j += 2) {
    float64x2_t v = vaddq_f64(vld1q_f64(row + j), vs);
    vst1q_f64(best + j, vminq_f64(vld1q_f64(best + j), v));
  }
  for (; j < len; ++j) {
    const double v = row[j] + shift;
    if (v < best[j]) best[j] = v;
  }
}

void max_plus_neon(double* best, const double* row, double shift, std::size_t len) {
  const float64x2_t vs = vdupq_n_f64(shift);
  std::size_t j = 0;
  for (; j + 2 <= len; j += 2) {
    float64x2_t v = vaddq_f64(vld1q_f64(row + j), vs);
    vst1q_f64(best + j, vmaxq_f64(vld1q_f64(best + j), v));
  }
  for (; j < len; ++j) {
    const double v = row[j] + shift;
    if (v > best[j]) best[j] = v;
  }
}

}  // namespace

const Ops* neon_ops_or_null() {
  static const Ops ops{add_neon, axpy_neon, min_plus_neon, max_plus_neon, Backend::neon, "neon"};
  return &ops;
}

}  // namespace scv::kernels

#else

namespace scv::kernels {
const Ops* neon_ops_or_null() { return nullptr; }
}  // namespace scv::kernels

#endif
