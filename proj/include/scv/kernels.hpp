#pragma once

#include <cstddef>

namespace scv::kernels {

enum class Backend { scalar, avx2, neon };

// Elementwise row kernels backing the distortion oracle's inner loop.
// Every backend computes bit-identical results: plain mul+add (no FMA) and
// no reassociation, so scalar/AVX2/NEON runs of the oracle agree exactly.
struct Ops {
  // dst[j] = a[j] + b[j]
  void (*add)(double* dst, const double* a, const double* b, std::size_t len);
  // acc[j] += w * row[j]
  void (*axpy)(double* acc, const double* row, double w, std::size_t len);
  // best[j] = min(best[j], row[j] + shift)
  void (*min_plus)(double* best, const double* row, double shift, std::size_t len);
  // best[j] = max(best[j], row[j] + shift)
  void (*max_plus)(double* best, const double* row, double shift, std::size_t len);
  Backend backend;
  const char* name;
};

// Active implementation: runtime-detected, overridable via force_backend()
// or the SCV_KERNELS environment variable (scalar|avx2|neon).
const Ops& ops();

// Scalar reference implementation, always available.
const Ops& scalar_ops();

Backend detected_backend();
bool backend_available(Backend b);

// Throws std::invalid_argument if the backend is not usable on this host.
void force_backend(Backend b);

const char* backend_name(Backend b);

}  // namespace scv::kernels
