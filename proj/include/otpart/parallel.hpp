#pragma once

namespace otpart::par {

// Global worker cap for the OpenMP kernels. 0 or negative resets to the
// hardware default. Kernels only parallelize loops whose iterations write
// disjoint outputs, so results are identical for every thread count.
int max_threads();
void set_max_threads(int n);

}  // namespace otpart::par
