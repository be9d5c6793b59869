#pragma once

#include <string>
#include <vector>

#include "reslab/fourier_field.hpp"

namespace reslab {

/// One-step methods for u_t + u_xxx = (1/2)(u^2)_x on the torus.
enum class KdvKind { Lie, Strang, ExpInt1, ExpInt2, Resonance1, Resonance2, SymmetricMidpoint };

struct KdvScheme {
    KdvKind kind = KdvKind::Resonance1;
    double tau = 0.01;
    /// Wrap every nonlinear factor and product in the cutoff Π_tau.
    bool filter = false;
    /// Fourth-order Runge-Kutta substeps for the Burgers part (Lie, Strang).
    int burgers_substeps = 20;
    /// Fixed-point controls (SymmetricMidpoint).
    double fp_tol = 1e-12;
    int fp_max_iter = 100;
    double fp_damping = 1.0;
};

/// Throws InvalidArgument on tau == 0 or non-finite, fp_tol <= 0, fp_max_iter < 1,
/// burgers_substeps < 1, damping outside (0, 1], or filter with tau < 0.
void validate(const KdvScheme& scheme);

std::string to_string(KdvKind kind);
KdvKind kdv_kind_from_string(const std::string& name);

/// Precomputes the symbol tables of one scheme at one resolution; step() is
/// then a pure function of its argument. A negative tau steps backward in
/// time (used for the adjoint check of the symmetric scheme).
class KdvStepper {
public:
    KdvStepper(const KdvScheme& scheme, std::size_t n_modes);

    FourierField step(const FourierField& u) const;

    const KdvScheme& scheme() const noexcept { return scheme_; }
    std::size_t n_modes() const noexcept { return n_; }

private:
    FourierField lie(const FourierField& u) const;
    FourierField strang(const FourierField& u) const;
    FourierField expint1(const FourierField& u) const;
    FourierField expint2(const FourierField& u) const;
    FourierField resonance1(const FourierField& u) const;
    FourierField resonance2(const FourierField& u) const;
    FourierField midpoint(const FourierField& u) const;

    FourierField burgers(const FourierField& u) const;
    FourierField cut(const FourierField& u) const;
    FourierField sq(const FourierField& u) const;
    FourierField mul(const FourierField& a, const FourierField& b) const;

    KdvScheme scheme_;
    std::size_t n_;
    int band_;  // cutoff mode when filtering

    std::vector<cplx> e_;         // e^{iτk^3}
    std::vector<cplx> e_inv_;     // e^{-iτk^3}
    std::vector<cplx> e_half_;    // e^{iτk^3/2}
    std::vector<cplx> inv_d_;     // 1/(ik)
    std::vector<cplx> half_d_;    // ik/2
    std::vector<cplx> d_;         // ik
    std::vector<cplx> d3_;        // ik^3 = -(ik)^3
    std::vector<cplx> exp1_;      // (τ/2) ik φ1(iτk^3)
    std::vector<cplx> exp2_a_;    // (1/2) ik e^{iτk^3} τ φ1(-iτk^3)
    std::vector<cplx> exp2_b_;    // (1/2) ik e^{iτk^3} τ^2 (φ1 - φ2)(-iτk^3)
    std::vector<cplx> res2_;      // (τ^2/4) e^{iτk^3} Ψ_k ik
};

FourierField step_lie(const FourierField& u, const KdvScheme& s);
FourierField step_strang(const FourierField& u, const KdvScheme& s);
FourierField step_expint1(const FourierField& u, const KdvScheme& s);
FourierField step_expint2(const FourierField& u, const KdvScheme& s);
FourierField step_resonance1(const FourierField& u, const KdvScheme& s);
FourierField step_resonance2(const FourierField& u, const KdvScheme& s);
FourierField step_symmetric_midpoint(const FourierField& u, const KdvScheme& s);

/// Ψ_k = sin(τk^2)/(τk^2), 1 at k = 0.
double resonance_filter_psi(double tau, int k);

}  // namespace reslab
