#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels_internal.hpp"

namespace ega::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, scalar::decode, scalar::affine_clamp,
                              scalar::min_max, scalar::first_greater};

#if defined(__x86_64__) || defined(_M_X64)
constexpr KernelTable kAvx2{Isa::Avx2, avx2::decode, avx2::affine_clamp, avx2::min_max,
                            avx2::first_greater};
#endif

#if defined(__aarch64__)
constexpr KernelTable kNeon{Isa::Neon, neon::decode, neon::affine_clamp, neon::min_max,
                            neon::first_greater};
#endif

const KernelTable* pick_default() noexcept {
    if (const char* env = std::getenv("EXTREMA_GA_ISA")) {
        const std::string_view name(env);
        for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
            if (name == to_string(isa)) {
                if (const KernelTable* t = table_for(isa)) return t;
            }
        }
    }
    if (const KernelTable* t = table_for(Isa::Avx2)) return t;
    if (const KernelTable* t = table_for(Isa::Neon)) return t;
    return &kScalar;
}

std::atomic<const KernelTable*>& active_slot() noexcept {
    static std::atomic<const KernelTable*> slot{pick_default()};
    return slot;
}

} // namespace

const KernelTable* table_for(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar:
        return &kScalar;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
        if (__builtin_cpu_supports("avx2")) return &kAvx2;
#endif
        return nullptr;
    case Isa::Neon:
#if defined(__aarch64__)
        return &kNeon;
#else
        return nullptr;
#endif
    }
    return nullptr;
}

const KernelTable& active() noexcept { return *active_slot().load(std::memory_order_acquire); }

bool set_active(Isa isa) noexcept {
    const KernelTable* t = table_for(isa);
    if (t == nullptr) return false;
    active_slot().store(t, std::memory_order_release);
    return true;
}

bool available(Isa isa) noexcept { return table_for(isa) != nullptr; }

std::string_view to_string(Isa isa) noexcept {
    switch (isa) {
    case Isa::Scalar:
        return "scalar";
    case Isa::Avx2:
        return "avx2";
    case Isa::Neon:
        return "neon";
    }
    return "unknown";
}

} // namespace ega::kernels
