#include "vline/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vline {

int max_threads() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("VLINE_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) return std::min(hw, cap);
    }
    return hw;
}

void parallel_for(int count, const std::function<void(int)>& fn) {
#ifdef _OPENMP
    const int threads = std::min(max_threads(), count > 0 ? count : 1);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < count; ++i) fn(i);
#else
    for (int i = 0; i < count; ++i) fn(i);
#endif
}

}  // namespace vline
