#include "ramsey/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace ramsey {

const Kernels& active_kernels() {
    static const Kernels* selected = [] {
        const Kernels* k = avx2_kernels();
        if (const char* force = std::getenv("RAMSEY_KERNELS")) {
            if (std::strcmp(force, "scalar") == 0) k = nullptr;
            // "avx2" keeps the probe result; silently falls back when absent
        }
        return k ? k : &scalar_kernels();
    }();
    return *selected;
}

} // namespace ramsey
