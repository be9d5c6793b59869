#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace reslab::kernels {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2, Neon };

/// Function table for the data-parallel loops on interleaved complex arrays.
/// Every entry has a scalar reference; vector variants must agree with it
/// up to rounding (the vector code uses fused multiply-add).
struct KernelTable {
    Isa isa;
    /// out[i] = a[i] * b[i]
    void (*cmul)(const cplx* a, const cplx* b, cplx* out, std::size_t n);
    /// out[i] = a[i] * conj(b[i])
    void (*cmul_conj)(const cplx* a, const cplx* b, cplx* out, std::size_t n);
    /// y[i] += alpha * x[i]
    void (*caxpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
    /// out[i] = a[i]^2
    void (*square)(const cplx* a, cplx* out, std::size_t n);
    /// out[i] = |a[i]|^2 a[i]
    void (*cubic)(const cplx* a, cplx* out, std::size_t n);
    /// sum_i w[i] |a[i]|^2
    double (*weighted_norm2)(const double* w, const cplx* a, std::size_t n);
};

const KernelTable& scalar_table();

/// True when the running CPU can execute the given variant.
bool isa_available(Isa isa);

/// Table for a specific variant; throws InvalidArgument if unavailable.
const KernelTable& table_for(Isa isa);

/// Best available table, chosen once at first use. Setting the environment
/// variable RESLAB_ISA=scalar forces the reference kernels.
const KernelTable& active();

std::string_view isa_name(Isa isa);

}  // namespace reslab::kernels
