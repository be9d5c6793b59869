#pragma once

#include <complex>
#include <cstddef>

namespace reslab::fft {

using cplx = std::complex<double>;

/// out[j] = Σ_m in[m] e^{+2πi jm/n}  (unnormalized)
void backward(const cplx* in, cplx* out, std::size_t n);

/// out[m] = Σ_j in[j] e^{-2πi jm/n}  (unnormalized)
void forward(const cplx* in, cplx* out, std::size_t n);

}  // namespace reslab::fft
