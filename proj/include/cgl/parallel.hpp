#pragma once

namespace cgl {

// Thread count used by the parallel kernels: the CGL_THREADS environment
// variable when set to a positive integer, otherwise the OpenMP default.
int thread_count();

// Override for the current process; n <= 0 restores the environment value.
void set_thread_count(int n);

}  // namespace cgl
