#include "reslab/simd_kernels.hpp"

namespace reslab::kernels {
namespace {

// Written out on real and imaginary parts so the results do not depend on
// the library's complex multiply (which adds inf/nan recovery branches).

void cmul_scalar(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        out[i] = cplx(ar * br - ai * bi, ai * br + ar * bi);
    }
}

void cmul_conj_scalar(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        out[i] = cplx(ar * br + ai * bi, ai * br - ar * bi);
    }
}

void caxpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double pr = alpha.real(), pi = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = cplx(y[i].real() + (pr * xr - pi * xi), y[i].imag() + (pi * xr + pr * xi));
    }
}

void square_scalar(const cplx* a, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        out[i] = cplx(ar * ar - ai * ai, 2.0 * ar * ai);
    }
}

void cubic_scalar(const cplx* a, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double m = ar * ar + ai * ai;
        out[i] = cplx(m * ar, m * ai);
    }
}

double weighted_norm2_scalar(const double* w, const cplx* a, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        acc += w[i] * (ar * ar + ai * ai);
    }
    return acc;
}

constexpr KernelTable kScalar{Isa::Scalar,  cmul_scalar,  cmul_conj_scalar,     caxpy_scalar,
                              square_scalar, cubic_scalar, weighted_norm2_scalar};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace reslab::kernels
