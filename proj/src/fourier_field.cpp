#include "reslab/fourier_field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "reslab/errors.hpp"
#include "reslab/simd_kernels.hpp"

namespace reslab {
namespace {

void check_size(std::size_t n) {
    if (n < 8 || (n & (n - 1)) != 0) {
        throw InvalidArgument("n_modes must be a power of two >= 8, got " + std::to_string(n));
    }
}

void check_same_size(const FourierField& a, const FourierField& b) {
    if (a.n_modes() != b.n_modes()) throw InvalidArgument("fields have different n_modes");
}

}  // namespace

FourierField::FourierField(std::size_t n_modes, bool real_valued)
    : coeffs_(n_modes, cplx(0.0, 0.0)), real_(real_valued) {
    check_size(n_modes);
}

FourierField::FourierField(std::vector<cplx> coeffs, bool real_valued) : coeffs_(std::move(coeffs)) {
    check_size(coeffs_.size());
    if (real_valued) {
        if (!is_conjugate_symmetric(1e-12)) {
            throw InvalidArgument("coefficients are not conjugate symmetric");
        }
        enforce_conjugate_symmetry();
    }
}

cplx FourierField::coeff(int k) const {
    if (k < k_min() || k > k_max()) throw InvalidArgument("mode out of range: " + std::to_string(k));
    return coeffs_[index(k)];
}

void FourierField::set_coeff(int k, cplx value) {
    if (k < k_min() || k > k_max()) throw InvalidArgument("mode out of range: " + std::to_string(k));
    if (!real_) {
        coeffs_[index(k)] = value;
        return;
    }
    if (k == 0 || k == k_min()) {
        coeffs_[index(k)] = cplx(value.real(), 0.0);
        return;
    }
    coeffs_[index(k)] = value;
    coeffs_[index(-k)] = std::conj(value);
}

void FourierField::enforce_conjugate_symmetry() {
    coeffs_[index(0)] = cplx(coeffs_[index(0)].real(), 0.0);
    coeffs_[index(k_min())] = cplx(coeffs_[index(k_min())].real(), 0.0);
    for (int k = 1; k <= k_max(); ++k) {
        const cplx avg = 0.5 * (coeffs_[index(k)] + std::conj(coeffs_[index(-k)]));
        coeffs_[index(k)] = avg;
        coeffs_[index(-k)] = std::conj(avg);
    }
    real_ = true;
}

bool FourierField::is_conjugate_symmetric(double tol) const {
    double scale = 0.0;
    for (const cplx& c : coeffs_) scale = std::max(scale, std::abs(c));
    const double bound = tol * std::max(scale, 1e-300);
    if (std::abs(coeffs_[index(0)].imag()) > bound) return false;
    if (std::abs(coeffs_[index(k_min())].imag()) > bound) return false;
    for (int k = 1; k <= k_max(); ++k) {
        if (std::abs(coeffs_[index(k)] - std::conj(coeffs_[index(-k)])) > bound) return false;
    }
    return true;
}

int FourierField::bandwidth() const noexcept {
    for (int b = -k_min(); b >= 0; --b) {
        if (b <= k_max() && coeffs_[index(b)] != cplx(0.0, 0.0)) return b;
        if (coeffs_[index(-b)] != cplx(0.0, 0.0)) return b;
    }
    return -1;
}

bool FourierField::all_finite() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const cplx& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

FourierField& FourierField::operator+=(const FourierField& other) {
    check_same_size(*this, other);
    kernels::active().caxpy(cplx(1.0, 0.0), other.coeffs_.data(), coeffs_.data(), coeffs_.size());
    real_ = real_ && other.real_;
    return *this;
}

FourierField& FourierField::operator-=(const FourierField& other) {
    check_same_size(*this, other);
    kernels::active().caxpy(cplx(-1.0, 0.0), other.coeffs_.data(), coeffs_.data(), coeffs_.size());
    real_ = real_ && other.real_;
    return *this;
}

FourierField& FourierField::operator*=(double s) noexcept {
    for (cplx& c : coeffs_) c *= s;
    return *this;
}

FourierField& FourierField::operator*=(cplx s) {
    if (s.imag() == 0.0) return *this *= s.real();
    for (cplx& c : coeffs_) c *= s;
    real_ = false;
    return *this;
}

FourierField operator+(FourierField a, const FourierField& b) { return a += b; }
FourierField operator-(FourierField a, const FourierField& b) { return a -= b; }
FourierField operator*(double s, FourierField a) { return a *= s; }
FourierField operator*(cplx s, FourierField a) { return a *= s; }

double l2_distance(const FourierField& a, const FourierField& b) {
    check_same_size(a, b);
    double acc = 0.0;
    for (std::size_t i = 0; i < a.n_modes(); ++i) acc += std::norm(a.coeffs()[i] - b.coeffs()[i]);
    return std::sqrt(acc);
}

double max_abs_diff(const FourierField& a, const FourierField& b) {
    check_same_size(a, b);
    double m = 0.0;
    for (std::size_t i = 0; i < a.n_modes(); ++i) m = std::max(m, std::abs(a.coeffs()[i] - b.coeffs()[i]));
    return m;
}

}  // namespace reslab
