// Internal: per-ISA kernel tables.
#pragma once

#include "shorsim/kernels.hpp"

namespace shorsim::kernels::detail {

extern const KernelTable scalar_table;

#if defined(SHORSIM_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif

} // namespace shorsim::kernels::detail
