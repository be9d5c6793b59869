#include "reslab/nls_schemes.hpp"

#include <cmath>

#include "reslab/errors.hpp"
#include "reslab/phi.hpp"
#include "reslab/spectral.hpp"

namespace reslab {

void validate(const NlsScheme& s) {
    if (!std::isfinite(s.tau) || s.tau == 0.0) throw InvalidArgument("tau must be finite and nonzero");
    if (s.filter && s.tau < 0.0) throw InvalidArgument("the cutoff needs tau > 0");
    if (s.filter && (s.kind == NlsKind::LieNls || s.kind == NlsKind::StrangNls)) {
        throw Unsupported("splitting schemes solve the nonlinear subflow exactly and have no filtered form");
    }
}

std::string to_string(NlsKind kind) {
    switch (kind) {
        case NlsKind::LieNls: return "lie";
        case NlsKind::StrangNls: return "strang";
        case NlsKind::ExpInt1Nls: return "expint1";
        case NlsKind::Resonance1Nls: return "resonance1";
    }
    return "unknown";
}

NlsKind nls_kind_from_string(const std::string& name) {
    for (NlsKind k : {NlsKind::LieNls, NlsKind::StrangNls, NlsKind::ExpInt1Nls, NlsKind::Resonance1Nls}) {
        if (to_string(k) == name) return k;
    }
    throw InvalidArgument("unknown NLS scheme: " + name);
}

NlsStepper::NlsStepper(const NlsScheme& scheme, std::size_t n_modes) : scheme_(scheme), n_(n_modes) {
    validate(scheme_);
    FourierField probe(n_modes);
    band_ = scheme_.filter ? cutoff_mode(scheme_.tau) : probe.k_max();
    const double tau = scheme_.tau;
    const cplx I(0.0, 1.0);
    e_.resize(n_);
    e_half_.resize(n_);
    exp1_.resize(n_);
    res_phi_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        const double k = probe.k_min() + static_cast<int>(i);
        const double k2 = k * k;
        e_[i] = std::polar(1.0, -tau * k2);
        e_half_[i] = std::polar(1.0, -0.5 * tau * k2);
        exp1_[i] = -I * tau * e_[i] * phi1(I * tau * k2);
        res_phi_[i] = phi1(-2.0 * I * tau * k2);
    }
}

FourierField NlsStepper::cut(const FourierField& u) const {
    return scheme_.filter ? truncate_band(u, band_) : u;
}

FourierField NlsStepper::nonlinear_flow(const FourierField& u, double t) const {
    // |u| is constant along this subflow, so it is solved exactly on the grid.
    std::vector<cplx> x = to_physical(u);
    for (cplx& v : x) v *= std::polar(1.0, -t * std::norm(v));
    return from_physical(x, false);
}

FourierField NlsStepper::step(const FourierField& u) const {
    if (u.n_modes() != n_) throw InvalidArgument("field resolution does not match the stepper");
    FourierField out(n_);
    switch (scheme_.kind) {
        case NlsKind::LieNls:
            out = apply_table(nonlinear_flow(u, scheme_.tau), e_);
            break;
        case NlsKind::StrangNls:
            out = apply_table(nonlinear_flow(apply_table(u, e_half_), scheme_.tau), e_half_);
            break;
        case NlsKind::ExpInt1Nls:
            out = apply_table(u, e_) + apply_table(cut(cubic(cut(u))), exp1_);
            break;
        case NlsKind::Resonance1Nls: {
            const FourierField uc = cut(u);
            const FourierField w = cut(apply_table(uc, res_phi_));
            FourierField nl = cut(product_conj(uc, uc, w));
            nl *= cplx(0.0, -scheme_.tau);
            out = apply_table(u + nl, e_);
            break;
        }
    }
    if (!out.all_finite()) throw NonFiniteValue("non-finite coefficient after NLS " + to_string(scheme_.kind) + " step");
    return out;
}

FourierField step_lie_nls(const FourierField& u, const NlsScheme& s) {
    NlsScheme c = s;
    c.kind = NlsKind::LieNls;
    return NlsStepper(c, u.n_modes()).step(u);
}

FourierField step_strang_nls(const FourierField& u, const NlsScheme& s) {
    NlsScheme c = s;
    c.kind = NlsKind::StrangNls;
    return NlsStepper(c, u.n_modes()).step(u);
}

FourierField step_expint1_nls(const FourierField& u, const NlsScheme& s) {
    NlsScheme c = s;
    c.kind = NlsKind::ExpInt1Nls;
    return NlsStepper(c, u.n_modes()).step(u);
}

FourierField step_resonance1_nls(const FourierField& u, const NlsScheme& s) {
    NlsScheme c = s;
    c.kind = NlsKind::Resonance1Nls;
    return NlsStepper(c, u.n_modes()).step(u);
}

FourierField resonance1_nls_direct(const FourierField& u, double tau) {
    const cplx I(0.0, 1.0);
    FourierField out(u.n_modes());
    auto c = out.mutable_coeffs();
    const int lo = u.k_min(), hi = u.k_max();
    for (int k = lo; k <= hi; ++k) {
        const double kd = k;
        cplx sum(0.0, 0.0);
        if (std::abs(k) <= hi) {
            for (int k1 = lo; k1 <= hi; ++k1) {
                const cplx w1 = tau * phi1(2.0 * I * tau * (static_cast<double>(k1) * k1)) * std::conj(u.coeff(k1));
                for (int k2 = lo; k2 <= hi; ++k2) {
                    const int k3 = k + k1 - k2;
                    if (k3 < lo || k3 > hi) continue;
                    sum += w1 * u.coeff(k2) * u.coeff(k3);
                }
            }
        }
        c[out.index(k)] = std::polar(1.0, -tau * kd * kd) * (u.coeff(k) - I * sum);
    }
    return out;
}

}  // namespace reslab
