#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "reslab/fourier_field.hpp"

namespace reslab {

/// Fourier multiplier given by its symbol k -> m(k).
class Multiplier {
public:
    explicit Multiplier(std::function<cplx(int)> symbol) : symbol_(std::move(symbol)) {}

    cplx operator()(int k) const { return symbol_(k); }

    /// Symbol values for k = -N/2 .. N/2-1.
    std::vector<cplx> table(std::size_t n_modes) const;

private:
    std::function<cplx(int)> symbol_;
};

namespace multipliers {
Multiplier identity();
Multiplier derivative();                 // ik
Multiplier kdv_propagator(double t);     // e^{itk^3}
Multiplier nls_propagator(double t);     // e^{-itk^2}
Multiplier inverse_derivative();         // 1/(ik), 0 at k = 0
}  // namespace multipliers

/// c'(k) = m(k) c(k). The result is flagged real only when the input is and
/// the symbol satisfies m(-k) = conj(m(k)) on the occupied modes.
FourierField apply_multiplier(const FourierField& u, const Multiplier& m);

/// Same as apply_multiplier with a precomputed symbol table.
FourierField apply_table(const FourierField& u, const std::vector<cplx>& symbol);

/// True if table[-k] = conj(table[k]) (relative 1e-14) wherever u is nonzero,
/// including a real symbol at the Nyquist mode when that mode is occupied.
bool table_preserves_reality(const std::vector<cplx>& symbol, const FourierField& u);

FourierField linear_flow_kdv(const FourierField& u, double t);
FourierField linear_flow_nls(const FourierField& u, double t);
FourierField dx(const FourierField& u);
FourierField inv_dx(const FourierField& u);

/// (Σ_k (1+|k|)^{2s} |c_k|^2)^{1/2}
double sobolev_norm(const FourierField& u, double s);
double l2_norm(const FourierField& u);

/// c_k = (1+|k|)^{-(sigma+1/2+0.01)} e^{iθ_k} for k != 0 and k != -N/2, θ_k uniform
/// from a 64-bit Mersenne twister seeded with `seed`; c_0 = 0.
FourierField rough_data(double sigma, std::uint64_t seed, std::size_t n_modes, bool real_valued);

/// Largest K with K^3 tau <= 1 (boundary inclusive, K >= 1).
int cutoff_mode(double tau);

/// Zeroes every mode with |k| > cutoff_mode(tau).
FourierField project_cutoff(const FourierField& u, double tau);

/// Zeroes every mode with |k| > K.
FourierField truncate_band(const FourierField& u, int K);

/// Samples u(x_j) = Σ_k c_k e^{ikx_j}, x_j = 2πj/N, on the N-point grid.
std::vector<cplx> to_physical(const FourierField& u);

/// Inverse of to_physical. If real_valued, the result is symmetrized.
FourierField from_physical(const std::vector<cplx>& samples, bool real_valued);

/// Exact product a*b truncated to |k| <= N/2-1. The padded grid is the
/// smallest power of two that avoids aliasing into the kept band (2N for
/// full-band inputs, smaller for band-limited inputs).
FourierField product(const FourierField& a, const FourierField& b);

/// Exact a*a truncated to |k| <= N/2-1.
FourierField square(const FourierField& a);

/// Exact |a|^2 a truncated to |k| <= N/2-1.
FourierField cubic(const FourierField& a);

/// Exact a*b*conj(c) truncated to |k| <= N/2-1.
FourierField product_conj(const FourierField& a, const FourierField& b, const FourierField& c);

/// O(N^2) reference convolution Σ_{k1+k2=k} a_{k1} b_{k2}, truncated to |k| <= N/2-1.
FourierField direct_convolution(const FourierField& a, const FourierField& b);

}  // namespace reslab
