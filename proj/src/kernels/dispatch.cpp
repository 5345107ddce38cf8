#include <cstdlib>
#include <string>

#include "pulsesmith/error.hpp"
#include "pulsesmith/kernels.hpp"

namespace pulsesmith::kernels {

namespace {

constexpr KernelTable kScalarTable{Isa::Scalar, &detail::left_multiply_scalar, &detail::overlap_fidelity_scalar};
#if defined(PULSESMITH_HAVE_AVX2)
constexpr KernelTable kAvx2Table{Isa::Avx2, &detail::left_multiply_avx2, &detail::overlap_fidelity_avx2};
#endif
#if defined(PULSESMITH_HAVE_NEON)
constexpr KernelTable kNeonTable{Isa::Neon, &detail::left_multiply_neon, &detail::overlap_fidelity_neon};
#endif

Isa parse_isa(const std::string& name) {
    if (name == "scalar") return Isa::Scalar;
    if (name == "avx2") return Isa::Avx2;
    if (name == "neon") return Isa::Neon;
    throw_validation("PULSESMITH_KERNEL must be one of scalar, avx2, neon, auto (got '" + name + "')");
}

const KernelTable& resolve_active() {
    if (const char* env = std::getenv("PULSESMITH_KERNEL"); env != nullptr && std::string(env) != "auto" &&
                                                           std::string(env) != "") {
        return kernels_for(parse_isa(env));
    }
    for (Isa isa : {Isa::Avx2, Isa::Neon}) {
        if (isa_supported(isa)) return kernels_for(isa);
    }
    return kScalarTable;
}

}  // namespace

std::string_view to_string(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "scalar";
}

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(PULSESMITH_HAVE_AVX2)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::Neon:
#if defined(PULSESMITH_HAVE_NEON)
            return true;  // baseline on aarch64
#else
            return false;
#endif
    }
    return false;
}

const KernelTable& kernels_for(Isa isa) {
    if (!isa_supported(isa)) {
        throw_validation("kernel ISA '" + std::string(to_string(isa)) + "' is not available on this machine");
    }
    switch (isa) {
#if defined(PULSESMITH_HAVE_AVX2)
        case Isa::Avx2: return kAvx2Table;
#endif
#if defined(PULSESMITH_HAVE_NEON)
        case Isa::Neon: return kNeonTable;
#endif
        default: return kScalarTable;
    }
}

const KernelTable& active_kernels() {
    static const KernelTable& table = resolve_active();
    return table;
}

}  // namespace pulsesmith::kernels
