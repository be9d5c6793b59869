#pragma once

#include <complex>

namespace reslab {

/// φ1(z) = (e^z - 1)/z, φ1(0) = 1.
std::complex<double> phi1(std::complex<double> z);

/// φ2(z) = (e^z - 1 - z)/z^2, φ2(0) = 1/2.
std::complex<double> phi2(std::complex<double> z);

}  // namespace reslab
