#include "reslab/kdv_schemes.hpp"

#include <cmath>

#include "reslab/errors.hpp"
#include "reslab/phi.hpp"
#include "reslab/spectral.hpp"

namespace reslab {

void validate(const KdvScheme& s) {
    if (!std::isfinite(s.tau) || s.tau == 0.0) throw InvalidArgument("tau must be finite and nonzero");
    if (s.filter && s.tau < 0.0) throw InvalidArgument("the cutoff needs tau > 0");
    if (!(s.fp_tol > 0.0)) throw InvalidArgument("fp_tol must be positive");
    if (s.fp_max_iter < 1) throw InvalidArgument("fp_max_iter must be >= 1");
    if (s.burgers_substeps < 1) throw InvalidArgument("burgers_substeps must be >= 1");
    if (!(s.fp_damping > 0.0 && s.fp_damping <= 1.0)) throw InvalidArgument("fp_damping must lie in (0, 1]");
}

std::string to_string(KdvKind kind) {
    switch (kind) {
        case KdvKind::Lie: return "lie";
        case KdvKind::Strang: return "strang";
        case KdvKind::ExpInt1: return "expint1";
        case KdvKind::ExpInt2: return "expint2";
        case KdvKind::Resonance1: return "resonance1";
        case KdvKind::Resonance2: return "resonance2";
        case KdvKind::SymmetricMidpoint: return "symmetric_midpoint";
    }
    return "unknown";
}

KdvKind kdv_kind_from_string(const std::string& name) {
    for (KdvKind k : {KdvKind::Lie, KdvKind::Strang, KdvKind::ExpInt1, KdvKind::ExpInt2, KdvKind::Resonance1,
                      KdvKind::Resonance2, KdvKind::SymmetricMidpoint}) {
        if (to_string(k) == name) return k;
    }
    throw InvalidArgument("unknown KdV scheme: " + name);
}

double resonance_filter_psi(double tau, int k) {
    if (k == 0) return 1.0;
    const double x = tau * static_cast<double>(k) * k;
    return std::sin(x) / x;
}

KdvStepper::KdvStepper(const KdvScheme& scheme, std::size_t n_modes) : scheme_(scheme), n_(n_modes) {
    validate(scheme_);
    FourierField probe(n_modes);  // validates n_modes
    band_ = scheme_.filter ? cutoff_mode(scheme_.tau) : probe.k_max();
    const double tau = scheme_.tau;
    const int kmin = probe.k_min();
    auto fill = [&](std::vector<cplx>& t, auto f) {
        t.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) t[i] = f(kmin + static_cast<int>(i));
    };
    auto k3 = [](int k) { return static_cast<double>(k) * k * k; };
    const cplx I(0.0, 1.0);
    fill(e_, [&](int k) { return std::polar(1.0, tau * k3(k)); });
    fill(e_inv_, [&](int k) { return std::polar(1.0, -tau * k3(k)); });
    fill(e_half_, [&](int k) { return std::polar(1.0, 0.5 * tau * k3(k)); });
    fill(inv_d_, [](int k) { return k == 0 ? cplx(0.0, 0.0) : cplx(0.0, -1.0 / k); });
    fill(half_d_, [](int k) { return cplx(0.0, 0.5 * k); });
    fill(d_, [](int k) { return cplx(0.0, static_cast<double>(k)); });
    fill(d3_, [&](int k) { return cplx(0.0, k3(k)); });
    fill(exp1_, [&](int k) { return 0.5 * tau * cplx(0.0, k) * phi1(I * tau * k3(k)); });
    fill(exp2_a_, [&](int k) {
        return 0.5 * cplx(0.0, k) * std::polar(1.0, tau * k3(k)) * tau * phi1(-I * tau * k3(k));
    });
    fill(exp2_b_, [&](int k) {
        const cplx z = -I * tau * k3(k);
        return 0.5 * cplx(0.0, k) * std::polar(1.0, tau * k3(k)) * tau * tau * (phi1(z) - phi2(z));
    });
    fill(res2_, [&](int k) {
        return 0.25 * tau * tau * std::polar(1.0, tau * k3(k)) * resonance_filter_psi(tau, k) * cplx(0.0, k);
    });
}

FourierField KdvStepper::cut(const FourierField& u) const {
    return scheme_.filter ? truncate_band(u, band_) : u;
}

FourierField KdvStepper::sq(const FourierField& u) const {
    if (!scheme_.filter) return square(u);
    return cut(square(cut(u)));
}

FourierField KdvStepper::mul(const FourierField& a, const FourierField& b) const {
    if (!scheme_.filter) return product(a, b);
    return cut(product(cut(a), cut(b)));
}

FourierField KdvStepper::step(const FourierField& u) const {
    if (u.n_modes() != n_) throw InvalidArgument("field resolution does not match the stepper");
    FourierField out = [&] {
        switch (scheme_.kind) {
            case KdvKind::Lie: return lie(u);
            case KdvKind::Strang: return strang(u);
            case KdvKind::ExpInt1: return expint1(u);
            case KdvKind::ExpInt2: return expint2(u);
            case KdvKind::Resonance1: return resonance1(u);
            case KdvKind::Resonance2: return resonance2(u);
            case KdvKind::SymmetricMidpoint: return midpoint(u);
        }
        throw InvalidArgument("unknown scheme kind");
    }();
    if (!out.all_finite()) throw NonFiniteValue("non-finite coefficient after " + to_string(scheme_.kind) + " step");
    return out;
}

FourierField KdvStepper::burgers(const FourierField& u) const {
    const double h = scheme_.tau / scheme_.burgers_substeps;
    auto f = [&](const FourierField& w) { return apply_table(sq(w), half_d_); };
    FourierField w = u;
    for (int i = 0; i < scheme_.burgers_substeps; ++i) {
        const FourierField k1 = f(w);
        const FourierField k2 = f(w + (0.5 * h) * k1);
        const FourierField k3 = f(w + (0.5 * h) * k2);
        const FourierField k4 = f(w + h * k3);
        w += (h / 6.0) * (k1 + 2.0 * (k2 + k3) + k4);
    }
    return w;
}

FourierField KdvStepper::lie(const FourierField& u) const { return apply_table(burgers(u), e_); }

FourierField KdvStepper::strang(const FourierField& u) const {
    return apply_table(burgers(apply_table(u, e_half_)), e_half_);
}

FourierField KdvStepper::expint1(const FourierField& u) const {
    return apply_table(u, e_) + apply_table(sq(u), exp1_);
}

FourierField KdvStepper::expint2(const FourierField& u) const {
    const FourierField u2 = sq(u);
    const FourierField udot = apply_table(u, d3_) + apply_table(u2, half_d_);
    const FourierField uu = 2.0 * mul(u, udot);
    return apply_table(u, e_) + apply_table(u2, exp2_a_) + apply_table(uu, exp2_b_);
}

FourierField KdvStepper::resonance1(const FourierField& u) const {
    const FourierField w = apply_table(u, inv_d_);
    const FourierField ew = apply_table(w, e_);
    return apply_table(u, e_) + (1.0 / 6.0) * (sq(ew) - apply_table(sq(w), e_));
}

FourierField KdvStepper::resonance2(const FourierField& u) const {
    const FourierField inner = apply_table(sq(u), d_);
    return resonance1(u) + apply_table(mul(u, inner), res2_);
}

FourierField KdvStepper::midpoint(const FourierField& u) const {
    const FourierField w = apply_table(u, inv_d_);
    const FourierField ew = apply_table(w, e_);
    const FourierField eu = apply_table(u, e_);
    FourierField current = resonance1(u);
    double residual = 0.0;
    for (int it = 1; it <= scheme_.fp_max_iter; ++it) {
        const FourierField wp = apply_table(current, inv_d_);
        const FourierField a = ew + wp;
        const FourierField b = w + apply_table(wp, e_inv_);
        FourierField next = eu + (1.0 / 24.0) * (sq(a) - apply_table(sq(b), e_));
        residual = l2_distance(next, current);
        if (!std::isfinite(residual)) throw NonFiniteValue("non-finite iterate in the symmetric scheme");
        if (scheme_.fp_damping == 1.0) {
            current = std::move(next);
        } else {
            current += scheme_.fp_damping * (next - current);
        }
        if (residual < scheme_.fp_tol) return current;
    }
    throw NoConvergence(scheme_.fp_max_iter, residual);
}

namespace {

FourierField run_one(const FourierField& u, KdvScheme s, KdvKind kind) {
    s.kind = kind;
    return KdvStepper(s, u.n_modes()).step(u);
}

}  // namespace

FourierField step_lie(const FourierField& u, const KdvScheme& s) { return run_one(u, s, KdvKind::Lie); }
FourierField step_strang(const FourierField& u, const KdvScheme& s) { return run_one(u, s, KdvKind::Strang); }
FourierField step_expint1(const FourierField& u, const KdvScheme& s) { return run_one(u, s, KdvKind::ExpInt1); }
FourierField step_expint2(const FourierField& u, const KdvScheme& s) { return run_one(u, s, KdvKind::ExpInt2); }
FourierField step_resonance1(const FourierField& u, const KdvScheme& s) {
    return run_one(u, s, KdvKind::Resonance1);
}
FourierField step_resonance2(const FourierField& u, const KdvScheme& s) {
    return run_one(u, s, KdvKind::Resonance2);
}
FourierField step_symmetric_midpoint(const FourierField& u, const KdvScheme& s) {
    return run_one(u, s, KdvKind::SymmetricMidpoint);
}

}  // namespace reslab
