// AVX2 variants of the oracle row kernels. Compiled with -mavx2 in its own
// translation unit; callers reach it only through the runtime dispatcher.
// Deliberately mul+add instead of FMA so results match the scalar kernels
// bit for bit.

#include "kernels_detail.hpp"

#if defined(__x86_64__) || defined(__i386__) || defined(_M_X64)

#include <immintrin.h>

namespace scv::kernels {
namespace {

void add_avx2(double* dst, const double* a, const double* b, std::size_t len) {
  std::size_t j = 0;
  for (; j + 4 <= len; j += 4) {
    __m256d va = _mm256_loadu_pd(a + j);
    __m256d vb = _mm256_loadu_pd(b + j);
    _mm256_storeu_pd(dst + j, _mm256_add_pd(va, vb));
  }
  for (; j < len; ++j) dst[j] = a[j] + b[j];
}

void axpy_avx2(double* acc, const double* row, double w, std::size_t len) {
  const __m256d vw = _mm256_set1_pd(w);
  std::size_t j = 0;
  for (; j + 4 <= len; j += 4) {
    __m256d vr = _mm256_loadu_pd(row + j);
    __m256d va = _mm256_loadu_pd(acc + j);
    _mm256_storeu_pd(acc + j, _mm256_add_pd(va, _mm256_mul_pd(vw, vr)));
  }
  for (; j < len; ++j) acc[j] += w * row[j];
}

void min_plus_avx2(double* best, const double* row, double shift, std::size_t len) {
  const __m256d vs = _mm256_set1_pd(shift);
  std::size_t j = 0;
  for (; j + 4 <= len; j += 4) {
    __m256d vr = _mm256_loadu_pd(row + j);
    __m256d vb = _mm256_loadu_pd(best + j);
    _mm256_storeu_pd(best + j, _mm256_min_pd(vb, _mm256_add_pd(vr, vs)));
  }
  for (; j < len; ++j) {
    const double v = row[j] + shift;
    if (v < best[j]) best[j] = v;
  }
}

void max_plus_avx2(double* best, const double* row, double shift, std::size_t len) {
  const __m256d vs = _mm256_set1_pd(shift);
  std::size_t j = 0;
  for (; j + 4 <= len; j += 4) {
    __m256d vr = _mm256_loadu_pd(row + j);
    __m256d vb = _mm256_loadu_pd(best + j);
    _mm256_storeu_pd(best + j, _mm256_max_pd(vb, _mm256_add_pd(vr, vs)));
  }
  for (; j < len; ++j) {
    const double v = row[j] + shift;
    if (v > best[j]) best[j] = v;
  }
}

}  // namespace

const Ops* avx2_ops_or_null() {
  static const Ops ops{add_avx2, axpy_avx2, min_plus_avx2, max_plus_avx2, Backend::avx2, "avx2"};
  return &ops;
}

}  // namespace scv::kernels

#else

namespace scv::kernels {
const Ops* avx2_ops_or_null() { return nullptr; }
}  // namespace scv::kernels

#endif
