#include <cstdlib>
#include <string>

#include "kernels/tables.hpp"
#include "reslab/errors.hpp"

namespace reslab::kernels {

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
            return detail::avx2_table() != nullptr && __builtin_cpu_supports("avx2") &&
                   __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::Neon:
            return detail::neon_table() != nullptr;
    }
    return false;
}

const KernelTable& table_for(Isa isa) {
    if (!isa_available(isa)) {
        throw InvalidArgument("kernel variant not available: " + std::string(isa_name(isa)));
    }
    switch (isa) {
        case Isa::Avx2:
            return *detail::avx2_table();
        case Isa::Neon:
            return *detail::neon_table();
        case Isa::Scalar:
            break;
    }
    return scalar_table();
}

const KernelTable& active() {
    static const KernelTable& chosen = [] () -> const KernelTable& {
        const char* forced = std::getenv("RESLAB_ISA");
        if (forced != nullptr && std::string(forced) == "scalar") return scalar_table();
        if (isa_available(Isa::Avx2)) return *detail::avx2_table();
        if (isa_available(Isa::Neon)) return *detail::neon_table();
        return scalar_table();
    }();
    return chosen;
}

std::string_view isa_name(Isa isa) {
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

}  // namespace reslab::kernels
