#pragma once

#include <string>
#include <vector>

#include "reslab/fourier_field.hpp"

namespace reslab {

/// One-step methods for i u_t + u_xx = |u|^2 u on the torus.
enum class NlsKind { LieNls, StrangNls, ExpInt1Nls, Resonance1Nls };

struct NlsScheme {
    NlsKind kind = NlsKind::Resonance1Nls;
    double tau = 0.01;
    /// Wrap nonlinear factors and output in Π_tau. Only the Fourier-space
    /// schemes (ExpInt1Nls, Resonance1Nls) support it.
    bool filter = false;
};

void validate(const NlsScheme& scheme);

std::string to_string(NlsKind kind);
NlsKind nls_kind_from_string(const std::string& name);

class NlsStepper {
public:
    NlsStepper(const NlsScheme& scheme, std::size_t n_modes);

    FourierField step(const FourierField& u) const;

    const NlsScheme& scheme() const noexcept { return scheme_; }

private:
    FourierField nonlinear_flow(const FourierField& u, double t) const;
    FourierField cut(const FourierField& u) const;

    NlsScheme scheme_;
    std::size_t n_;
    int band_;
    std::vector<cplx> e_;       // e^{-iτk^2}
    std::vector<cplx> e_half_;  // e^{-iτk^2/2}
    std::vector<cplx> exp1_;    // -iτ e^{-iτk^2} φ1(iτk^2)
    std::vector<cplx> res_phi_; // φ1(-2iτk^2)
};

FourierField step_lie_nls(const FourierField& u, const NlsScheme& s);
FourierField step_strang_nls(const FourierField& u, const NlsScheme& s);
FourierField step_expint1_nls(const FourierField& u, const NlsScheme& s);
FourierField step_resonance1_nls(const FourierField& u, const NlsScheme& s);

/// O(N^3) evaluation of the first-order resonance step straight from its
/// Fourier-space definition (reference for the factorized implementation).
FourierField resonance1_nls_direct(const FourierField& u, double tau);

}  // namespace reslab
