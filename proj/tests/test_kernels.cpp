#include <stdexcept>
#include <random>
#include <vector>

#include "doctest.h"
#include "scv/distortion.hpp"
#include "scv/instances.hpp"
#include "scv/kernels.hpp"

using namespace scv;
namespace k = scv::kernels;

namespace {

std::vector<double> random_row(std::mt19937_64& rng, std::size_t len) {
  std::vector<double> row(len);
  for (double& v : row) {
    v = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 100.0;
  }
  return row;
}

struct BackendGuard {
  ~BackendGuard() { k::force_backend(k::detected_backend()); }
};

}  // namespace

TEST_CASE("scalar backend is always available and active dispatch is sane") {
  CHECK(k::backend_available(k::Backend::scalar));
  CHECK(k::backend_available(k::detected_backend()));
  CHECK(k::ops().add != nullptr);
  CHECK_THROWS_AS(
      k::force_backend(k::backend_available(k::Backend::avx2) ? k::Backend::neon : k::Backend::avx2),
      std::invalid_argument);
}

TEST_CASE("simd backends match the scalar reference bit for bit") {
  BackendGuard guard;
  std::mt19937_64 rng(123);
  const k::Ops& ref = k::scalar_ops();
  for (k::Backend backend : {k::Backend::avx2, k::Backend::neon}) {
    if (!k::backend_available(backend)) continue;
    k::force_backend(backend);
    const k::Ops& simd = k::ops();
    REQUIRE(simd.backend == backend);
    // Lengths straddling the vector width, including ragged tails.
    for (std::size_t len : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{4},
                            std::size_t{5}, std::size_t{7}, std::size_t{8}, std::size_t{13},
                            std::size_t{64}, std::size_t{101}}) {
      for (int rep = 0; rep < 20; ++rep) {
        const std::vector<double> a = random_row(rng, len);
        const std::vector<double> b = random_row(rng, len);
        const double shift = a[0] - 50.0;

        std::vector<double> out_ref(len), out_simd(len);
        ref.add(out_ref.data(), a.data(), b.data(), len);
        simd.add(out_simd.data(), a.data(), b.data(), len);
        CHECK(out_ref == out_simd);

        std::vector<double> acc_ref = b, acc_simd = b;
        ref.axpy(acc_ref.data(), a.data(), 0.37, len);
        simd.axpy(acc_simd.data(), a.data(), 0.37, len);
        CHECK(acc_ref == acc_simd);

        std::vector<double> min_ref = b, min_simd = b;
        ref.min_plus(min_ref.data(), a.data(), shift, len);
        simd.min_plus(min_simd.data(), a.data(), shift, len);
        CHECK(min_ref == min_simd);

        std::vector<double> max_ref = b, max_simd = b;
        ref.max_plus(max_ref.data(), a.data(), shift, len);
        simd.max_plus(max_simd.data(), a.data(), shift, len);
        CHECK(max_ref == max_simd);
      }
    }
    k::force_backend(k::detected_backend());
  }
}

TEST_CASE("oracle reports are identical across kernel backends") {
  BackendGuard guard;
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 8; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 3);
    const InstanceBundle b = random_election(rng(), m, 4, m + 3, MetricKind::line);

    k::force_backend(k::Backend::scalar);
    const DistortionReport scalar_cost = worst_case_distortion(
        b.election, MechanismId::min_projection, Objective::cost, b.universe, m - 1);
    const DistortionReport scalar_util = worst_case_distortion(
        b.election, MechanismId::max_projection, Objective::utility, b.universe, m - 1);

    for (k::Backend backend : {k::Backend::avx2, k::Backend::neon}) {
      if (!k::backend_available(backend)) continue;
      k::force_backend(backend);
      const DistortionReport simd_cost = worst_case_distortion(
          b.election, MechanismId::min_projection, Objective::cost, b.universe, m - 1);
      const DistortionReport simd_util = worst_case_distortion(
          b.election, MechanismId::max_projection, Objective::utility, b.universe, m - 1);
      CHECK(scalar_cost.worst_ratio == simd_cost.worst_ratio);
      CHECK(scalar_cost.witness == simd_cost.witness);
      CHECK(scalar_util.worst_ratio == simd_util.worst_ratio);
      CHECK(scalar_util.witness == simd_util.witness);
    }
  }
}
