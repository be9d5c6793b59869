#pragma once

#include "reslab/simd_kernels.hpp"

namespace reslab::kernels::detail {

// Each returns nullptr when the variant was not compiled for this target.
const KernelTable* avx2_table();
const KernelTable* neon_table();

}  // namespace reslab::kernels::detail
