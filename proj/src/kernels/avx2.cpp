#include "kernels/tables.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#define RESLAB_AVX2 __attribute__((target("avx2,fma")))

namespace reslab::kernels::detail {
namespace {

// Two complex numbers per 256-bit register, stored as [re0, im0, re1, im1].

RESLAB_AVX2 inline __m256d mul2(__m256d a, __m256d b) {
    const __m256d br = _mm256_movedup_pd(b);
    const __m256d bi = _mm256_permute_pd(b, 0xF);
    const __m256d as = _mm256_permute_pd(a, 0x5);
    return _mm256_fmaddsub_pd(a, br, _mm256_mul_pd(as, bi));
}

RESLAB_AVX2 inline __m256d mul2_conj(__m256d a, __m256d b) {
    const __m256d br = _mm256_movedup_pd(b);
    const __m256d bi = _mm256_permute_pd(b, 0xF);
    const __m256d as = _mm256_permute_pd(a, 0x5);
    return _mm256_fmsubadd_pd(a, br, _mm256_mul_pd(as, bi));
}

RESLAB_AVX2 void cmul_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    auto* pa = reinterpret_cast<const double*>(a);
    auto* pb = reinterpret_cast<const double*>(b);
    auto* po = reinterpret_cast<double*>(out);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        _mm256_storeu_pd(po + 2 * i, mul2(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i)));
    }
    for (; i < n; ++i) out[i] = a[i] * b[i];
}

RESLAB_AVX2 void cmul_conj_avx2(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    auto* pa = reinterpret_cast<const double*>(a);
    auto* pb = reinterpret_cast<const double*>(b);
    auto* po = reinterpret_cast<double*>(out);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        _mm256_storeu_pd(po + 2 * i, mul2_conj(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i)));
    }
    for (; i < n; ++i) out[i] = a[i] * std::conj(b[i]);
}

RESLAB_AVX2 void caxpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    auto* px = reinterpret_cast<const double*>(x);
    auto* py = reinterpret_cast<double*>(y);
    const __m256d al = _mm256_setr_pd(alpha.real(), alpha.imag(), alpha.real(), alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d prod = mul2(_mm256_loadu_pd(px + 2 * i), al);
        _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(_mm256_loadu_pd(py + 2 * i), prod));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

RESLAB_AVX2 void square_avx2(const cplx* a, cplx* out, std::size_t n) {
    auto* pa = reinterpret_cast<const double*>(a);
    auto* po = reinterpret_cast<double*>(out);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = _mm256_loadu_pd(pa + 2 * i);
        _mm256_storeu_pd(po + 2 * i, mul2(v, v));
    }
    for (; i < n; ++i) out[i] = a[i] * a[i];
}

RESLAB_AVX2 void cubic_avx2(const cplx* a, cplx* out, std::size_t n) {
    auto* pa = reinterpret_cast<const double*>(a);
    auto* po = reinterpret_cast<double*>(out);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = _mm256_loadu_pd(pa + 2 * i);
        const __m256d sq = _mm256_mul_pd(v, v);
        const __m256d m = _mm256_hadd_pd(sq, sq);  // [|a0|^2, |a0|^2, |a1|^2, |a1|^2]
        _mm256_storeu_pd(po + 2 * i, _mm256_mul_pd(m, v));
    }
    for (; i < n; ++i) out[i] = std::norm(a[i]) * a[i];
}

RESLAB_AVX2 double weighted_norm2_avx2(const double* w, const cplx* a, std::size_t n) {
    auto* pa = reinterpret_cast<const double*>(a);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d v = _mm256_loadu_pd(pa + 2 * i);
        const __m256d ww = _mm256_permute4x64_pd(_mm256_castpd128_pd256(_mm_loadu_pd(w + i)), 0x50);
        acc = _mm256_fmadd_pd(_mm256_mul_pd(ww, v), v, acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) total += w[i] * std::norm(a[i]);
    return total;
}

const KernelTable kAvx2{Isa::Avx2,  cmul_avx2,  cmul_conj_avx2,     caxpy_avx2,
                        square_avx2, cubic_avx2, weighted_norm2_avx2};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2; }

}  // namespace reslab::kernels::detail

#else

namespace reslab::kernels::detail {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace reslab::kernels::detail

#endif
