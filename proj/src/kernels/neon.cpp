#include "kernels/tables.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace reslab::kernels::detail {
namespace {

// One complex number per 128-bit register, stored as [re, im].

inline float64x2_t mul1(float64x2_t a, float64x2_t b) {
    const float64x2_t br = vdupq_laneq_f64(b, 0);
    const float64x2_t bi = vdupq_laneq_f64(b, 1);
    const float64x2_t as = vextq_f64(a, a, 1);  // [ai, ar]
    const float64x2_t sign = {-1.0, 1.0};
    return vfmaq_f64(vmulq_f64(a, br), vmulq_f64(as, sign), bi);
}

inline float64x2_t mul1_conj(float64x2_t a, float64x2_t b) {
    const float64x2_t br = vdupq_laneq_f64(b, 0);
    const float64x2_t bi = vdupq_laneq_f64(b, 1);
    const float64x2_t as = vextq_f64(a, a, 1);
    const float64x2_t sign = {1.0, -1.0};
    return vfmaq_f64(vmulq_f64(a, br), vmulq_f64(as, sign), bi);
}

void cmul_neon(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    auto* pa = reinterpret_cast<const double*>(a);
    auto* pb = reinterpret_cast<const double*>(b);
    auto* po = reinterpret_cast<double*>(out);
    for (std::size_t i = 0; i < n; ++i) vst1q_f64(po + 2 * i, mul1(vld1q_f64(pa + 2 * i), vld1q_f64(pb + 2 * i)));
}

void cmul_conj_neon(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    auto* pa = reinterpret_cast<const double*>(a);
    auto* pb = reinterpret_cast<const double*>(b);
    auto* po = reinterpret_cast<double*>(out);
    for (std::size_t i = 0; i < n; ++i) {
        vst1q_f64(po + 2 * i, mul1_conj(vld1q_f64(pa + 2 * i), vld1q_f64(pb + 2 * i)));
    }
}

void caxpy_neon(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    auto* px = reinterpret_cast<const double*>(x);
    auto* py = reinterpret_cast<double*>(y);
    const float64x2_t al = {alpha.real(), alpha.imag()};
    for (std::size_t i = 0; i < n; ++i) {
        vst1q_f64(py + 2 * i, vaddq_f64(vld1q_f64(py + 2 * i), mul1(vld1q_f64(px + 2 * i), al)));
    }
}

void square_neon(const cplx* a, cplx* out, std::size_t n) {
    auto* pa = reinterpret_cast<const double*>(a);
    auto* po = reinterpret_cast<double*>(out);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t v = vld1q_f64(pa + 2 * i);
        vst1q_f64(po + 2 * i, mul1(v, v));
    }
}

void cubic_neon(const cplx* a, cplx* out, std::size_t n) {
    auto* pa = reinterpret_cast<const double*>(a);
    auto* po = reinterpret_cast<double*>(out);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t v = vld1q_f64(pa + 2 * i);
        const double m = vaddvq_f64(vmulq_f64(v, v));
        vst1q_f64(po + 2 * i, vmulq_n_f64(v, m));
    }
}

double weighted_norm2_neon(const double* w, const cplx* a, std::size_t n) {
    auto* pa = reinterpret_cast<const double*>(a);
    float64x2_t acc = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t v = vld1q_f64(pa + 2 * i);
        acc = vfmaq_f64(acc, vmulq_n_f64(v, w[i]), v);
    }
    return vaddvq_f64(acc);
}

const KernelTable kNeon{Isa::Neon,  cmul_neon,  cmul_conj_neon,     caxpy_neon,
                        square_neon, cubic_neon, weighted_norm2_neon};

}  // namespace

const KernelTable* neon_table() { return &kNeon; }

}  // namespace reslab::kernels::detail

#else

namespace reslab::kernels::detail {
const KernelTable* neon_table() { return nullptr; }
}  // namespace reslab::kernels::detail

#endif
