#include "scv/kernels.hpp"

namespace scv::kernels {
namespace {

void add_scalar(double* dst, const double* a, const double* b, std::size_t len) {
  for (std::size_t j = 0; j < len; ++j) dst[j] = a[j] + b[j];
}

void axpy_scalar(double* acc, const double* row, double w, std::size_t len) {
  for (std::size_t j = 0; j < len; ++j) acc[j] += w * row[j];
}

void min_plus_scalar_impl(double* best, const double* row, double shift, std::size_t len) {
  for (std::size_t j = 0; j < len; ++j) {
    const double v = row[j] + shift;
    if (v < best[j]) best[j] = v;
  }
}

void max_plus_scalar_impl(double* best, const double* row, double shift, std::size_t len) {
  for (std::size_t j = 0; j < len; ++j) {
    const double v = row[j] + shift;
    if (v > best[j]) best[j] = v;
  }
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{add_scalar, axpy_scalar, min_plus_scalar_impl, max_plus_scalar_impl,
                       Backend::scalar, "scalar"};
  return ops;
}

}  // namespace scv::kernels
