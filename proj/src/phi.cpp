#include "reslab/phi.hpp"

#include <cmath>

namespace reslab {
namespace {

// Σ_{j>=0} z^j / (j + offset)!  for |z| < 1; 22 terms reach double precision.
std::complex<double> series(std::complex<double> z, int offset) {
    double fact = 1.0;
    for (int j = 2; j <= offset; ++j) fact *= j;
    std::complex<double> term(1.0 / fact, 0.0), sum(0.0, 0.0);
    for (int j = 0; j < 22; ++j) {
        sum += term;
        term *= z / static_cast<double>(j + offset + 1);
    }
    return sum;
}

}  // namespace

std::complex<double> phi1(std::complex<double> z) {
    if (std::abs(z) < 1.0) return series(z, 1);
    return (std::exp(z) - 1.0) / z;
}

std::complex<double> phi2(std::complex<double> z) {
    if (std::abs(z) < 1.0) return series(z, 2);
    return (std::exp(z) - 1.0 - z) / (z * z);
}

}  // namespace reslab
