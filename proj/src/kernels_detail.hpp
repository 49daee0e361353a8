#pragma once

#include "scv/kernels.hpp"

namespace scv::kernels {

// Returns nullptr when the build target lacks the instruction set.
const Ops* avx2_ops_or_null();
const Ops* neon_ops_or_null();

}  // namespace scv::kernels
