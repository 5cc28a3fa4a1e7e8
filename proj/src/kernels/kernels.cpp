// Runtime backend selection.
#include "semiphoton/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace semiphoton::kernels {

namespace {

const Ops* resolve(const std::string& name) {
    if (name == "scalar") return &scalar_ops();
#if defined(__x86_64__) || defined(_M_X64)
    if (name == "avx2") {
        if (!avx2_supported()) throw std::invalid_argument("kernels: avx2 not supported here");
        return &avx2_ops();
    }
#endif
#if defined(__aarch64__)
    if (name == "neon") return &neon_ops();
#endif
    if (name == "auto") {
#if defined(__x86_64__) || defined(_M_X64)
        if (avx2_supported()) return &avx2_ops();
#endif
#if defined(__aarch64__)
        return &neon_ops();
#endif
        return &scalar_ops();
    }
    throw std::invalid_argument("kernels: unknown backend '" + name + "'");
}

const Ops*& active_slot() {
    static const Ops* active = [] {
        const char* env = std::getenv("SEMIPHOTON_KERNEL");
        return resolve(env ? env : "auto");
    }();
    return active;
}

}  // namespace

const Ops& active_ops() { return *active_slot(); }

void force_backend(const char* name) { active_slot() = resolve(name); }

}  // namespace semiphoton::kernels
