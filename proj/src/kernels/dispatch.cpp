#include "semgrid/kernels/kernels.hpp"

#include <cstdlib>

#include "semgrid/common.hpp"

namespace semgrid::kernels {

const Ops* avx2_ops();  // nullptr off x86-64
const Ops* neon_ops();  // nullptr off aarch64

namespace {

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops* best_supported() {
    if (const Ops* ops = avx2_ops(); ops != nullptr && avx2_supported()) return ops;
    if (const Ops* ops = neon_ops()) return ops;
    return &scalar_ops();
}

const Ops* select(const std::string& name) {
    if (name == "auto") return best_supported();
    if (name == "scalar") return &scalar_ops();
    if (name == "avx2") {
        if (const Ops* ops = avx2_ops(); ops != nullptr && avx2_supported()) return ops;
        throw ConfigError("kernel backend 'avx2' is not supported on this machine");
    }
    if (name == "neon") {
        if (const Ops* ops = neon_ops()) return ops;
        throw ConfigError("kernel backend 'neon' is not supported on this machine");
    }
    throw ConfigError("unknown kernel backend '" + name + "'");
}

const Ops* initial_backend() {
    if (const char* env = std::getenv("SEMGRID_KERNELS")) return select(env);
    return best_supported();
}

const Ops*& active_slot() {
    static const Ops* ops = initial_backend();
    return ops;
}

}  // namespace

const Ops& active() { return *active_slot(); }

void force(const std::string& name) { active_slot() = select(name); }

std::vector<const Ops*> available() {
    std::vector<const Ops*> out{&scalar_ops()};
    if (const Ops* ops = avx2_ops(); ops != nullptr && avx2_supported()) out.push_back(ops);
    if (const Ops* ops = neon_ops()) out.push_back(ops);
    return out;
}

}  // namespace semgrid::kernels
