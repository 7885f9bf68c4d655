#include "frd/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace frd::kernels {

const Dispatch& active() {
    static const Dispatch* chosen = [] {
        const char* env = std::getenv("FRD_KERNEL");
        if (env && std::strcmp(env, "scalar") == 0) return &scalar();
        const Dispatch* v = avx2();
        if (env && std::strcmp(env, "avx2") == 0 && v) return v;
        if (env && std::strcmp(env, "avx2") == 0 && !v) return &scalar();
        return v ? v : &scalar();
    }();
    return *chosen;
}

} // namespace frd::kernels
