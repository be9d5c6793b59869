#pragma once

#include <random>

#include "reslab/fourier_field.hpp"

namespace reslab::test {

/// Gaussian coefficients on |k| <= band with e^{-decay |k|} envelope.
inline FourierField random_field(std::uint64_t seed, std::size_t n, bool real, int band = 1 << 20,
                                 double decay = 0.0, bool zero_mean = false) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> g;
    FourierField u(n, real);
    for (int k = u.k_min(); k <= u.k_max(); ++k) {
        const double a = g(gen), b = g(gen);
        if (std::abs(k) > band || (zero_mean && k == 0)) continue;
        if (real && k < 0) continue;
        const double env = std::exp(-decay * std::abs(k));
        if (real && (k == 0 || k == u.k_min())) {
            u.set_coeff(k, a * env);
        } else {
            u.set_coeff(k, cplx(a, b) * env);
        }
    }
    return u;
}

}  // namespace reslab::test
