#include "cgl/parallel.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cgl {

namespace {

std::atomic<int> override_threads{0};

int env_threads() {
    if (const char* s = std::getenv("CGL_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) return static_cast<int>(v);
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

int thread_count() {
    int o = override_threads.load();
    return o > 0 ? o : env_threads();
}

void set_thread_count(int n) { override_threads.store(n > 0 ? n : 0); }

}  // namespace cgl
