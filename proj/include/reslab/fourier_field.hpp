#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace reslab {

using cplx = std::complex<double>;

/// Spectral coefficients of a 2π-periodic function u(x) = Σ_k c_k e^{ikx}
/// for k = -N/2 .. N/2-1, stored in ascending k.
///
/// When real_valued() is set, c(-k) = conj(c(k)) holds exactly and the
/// Nyquist coefficient c(-N/2) is real.
class FourierField {
public:
    /// Zero field. N must be a power of two, N >= 8.
    explicit FourierField(std::size_t n_modes, bool real_valued = false);

    /// Takes coefficients in ascending k. If real_valued, the input must be
    /// conjugate symmetric to 1e-12 relative; it is then symmetrized exactly.
    FourierField(std::vector<cplx> coeffs, bool real_valued);

    std::size_t n_modes() const noexcept { return coeffs_.size(); }
    int k_min() const noexcept { return -static_cast<int>(coeffs_.size() / 2); }
    int k_max() const noexcept { return static_cast<int>(coeffs_.size() / 2) - 1; }
    bool real_valued() const noexcept { return real_; }

    std::size_t index(int k) const noexcept { return static_cast<std::size_t>(k - k_min()); }
    cplx coeff(int k) const;

    /// Sets c(k). On a real field this also sets c(-k) = conj(value)
    /// (and keeps only the real part at the Nyquist mode).
    void set_coeff(int k, cplx value);

    std::span<const cplx> coeffs() const noexcept { return coeffs_; }

    /// Raw access. Callers writing through this span on a real field must
    /// finish with enforce_conjugate_symmetry() or drop_real_flag().
    std::span<cplx> mutable_coeffs() noexcept { return coeffs_; }

    /// Replaces c by its conjugate-symmetric part and sets the flag.
    void enforce_conjugate_symmetry();
    void drop_real_flag() noexcept { real_ = false; }

    /// c(-k) = conj(c(k)) within tol * max|c| and Nyquist imaginary part within the same.
    bool is_conjugate_symmetric(double tol) const;

    /// Largest |k| with a nonzero coefficient; -1 for the zero field.
    int bandwidth() const noexcept;

    bool all_finite() const noexcept;

    FourierField& operator+=(const FourierField& other);
    FourierField& operator-=(const FourierField& other);
    FourierField& operator*=(double s) noexcept;
    FourierField& operator*=(cplx s);

private:
    std::vector<cplx> coeffs_;
    bool real_ = false;
};

FourierField operator+(FourierField a, const FourierField& b);
FourierField operator-(FourierField a, const FourierField& b);
FourierField operator*(double s, FourierField a);
FourierField operator*(cplx s, FourierField a);

/// Euclidean distance of coefficient vectors (the L2 norm of a - b).
double l2_distance(const FourierField& a, const FourierField& b);

/// Largest absolute coefficient difference.
double max_abs_diff(const FourierField& a, const FourierField& b);

}  // namespace reslab
