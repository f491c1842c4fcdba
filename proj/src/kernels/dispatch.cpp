#include "rootpair/kernels.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>

namespace rootpair {

namespace {

bool cpu_has_avx2() {
#ifdef ROOTPAIR_HAVE_AVX2
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const Kernel* best_kernel() {
#ifdef ROOTPAIR_HAVE_AVX2
    if (cpu_has_avx2()) {
        return &avx2_kernel();
    }
#endif
    return &scalar_kernel();
}

const Kernel* find_kernel(std::string_view name) {
    if (name == "scalar") {
        return &scalar_kernel();
    }
#ifdef ROOTPAIR_HAVE_AVX2
    if (name == "avx2" && cpu_has_avx2()) {
        return &avx2_kernel();
    }
#endif
    return nullptr;
}

std::atomic<const Kernel*>& selected() {
    static std::atomic<const Kernel*> kernel{[]() -> const Kernel* {
        if (const char* env = std::getenv("ROOTPAIR_KERNEL")) {
            if (const Kernel* forced = find_kernel(env)) {
                return forced;
            }
            std::fprintf(stderr,
                         "warning: ROOTPAIR_KERNEL=%s is not available on this "
                         "build/CPU; falling back to %.*s\n",
                         env, static_cast<int>(best_kernel()->name.size()),
                         best_kernel()->name.data());
        }
        return best_kernel();
    }()};
    return kernel;
}

} // namespace

const Kernel& active_kernel() {
    return *selected().load(std::memory_order_relaxed);
}

bool force_kernel(std::string_view name) {
    const Kernel* k = find_kernel(name);
    if (k == nullptr) {
        return false;
    }
    selected().store(k, std::memory_order_relaxed);
    return true;
}

std::vector<std::string_view> available_kernels() {
    std::vector<std::string_view> out{"scalar"};
    if (cpu_has_avx2()) {
        out.emplace_back("avx2");
    }
    return out;
}

} // namespace rootpair
