#include <cmath>

#include "reslab/errors.hpp"
#include "reslab/harness.hpp"
#include "reslab/spectral.hpp"

namespace reslab {

namespace {

/// Right-hand side without the linear part: ½ ik (u^2)^ for KdV, -i |u|^2 u for NLS.
/// band >= 0 projects the result onto |k| <= band.
FourierField nonlinearity(Model model, const FourierField& u, const std::vector<cplx>& half_d, int band) {
    FourierField f = model == Model::Kdv ? apply_table(square(u), half_d) : cplx(0.0, -1.0) * cubic(u);
    return band >= 0 ? truncate_band(f, band) : f;
}

/// Lawson RK4: RK4 for w = e^{-tL} u with the linear flow applied exactly.
FourierField lawson_rk4(Model model, FourierField u, double t_end, double tau_ref, int band = -1) {
    const long steps = std::max<long>(1, static_cast<long>(std::ceil(t_end / tau_ref - 1e-9)));
    const double h = t_end / static_cast<double>(steps);
    const std::size_t n = u.n_modes();
    const auto prop = [&](double t) {
        return (model == Model::Kdv ? multipliers::kdv_propagator(t) : multipliers::nls_propagator(t)).table(n);
    };
    const std::vector<cplx> e_full = prop(h), e_half = prop(0.5 * h);
    std::vector<cplx> half_d = multipliers::derivative().table(n);
    for (auto& c : half_d) c *= 0.5;

    for (long s = 0; s < steps; ++s) {
        const FourierField k1 = nonlinearity(model, u, half_d, band);
        const FourierField uh = apply_table(u, e_half);
        const FourierField k2 = nonlinearity(model, apply_table(u + (0.5 * h) * k1, e_half), half_d, band);
        const FourierField k3 = nonlinearity(model, uh + (0.5 * h) * k2, half_d, band);
        const FourierField k4 = nonlinearity(model, apply_table(u, e_full) + h * apply_table(k3, e_half), half_d, band);
        FourierField next = apply_table(u, e_full);
        next += (h / 6.0) * apply_table(k1, e_full);
        next += (h / 3.0) * apply_table(k2 + k3, e_half);
        next += (h / 6.0) * k4;
        if (!next.all_finite()) throw NonFiniteValue("reference integration diverged at step " + std::to_string(s));
        u = std::move(next);
    }
    return u;
}

std::size_t modes_for_band(int K, std::size_t cap) {
    std::size_t m = 8;
    while (static_cast<int>(m / 2) - 1 < K && m < cap) m *= 2;
    return m;
}

}  // namespace

FourierField reference_solution(Model model, const FourierField& v, double t_end, double tau_ref,
                                double filter_tau) {
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw InvalidArgument("t_end must be finite and >= 0");
    if (!(tau_ref > 0.0)) throw InvalidArgument("tau_ref must be positive");
    if (!v.all_finite()) throw NonFiniteValue("initial data is not finite");
    if (t_end == 0.0) return v;
    if (filter_tau <= 0.0) return lawson_rk4(model, v, t_end, tau_ref);

    // Modes above the cutoff only feel the linear flow; the band evolves on its own.
    const int K = std::min(cutoff_mode(filter_tau), v.k_max());
    const std::size_t m = modes_for_band(K, v.n_modes());
    FourierField band(m, v.real_valued());
    for (int k = -K; k <= K; ++k) band.set_coeff(k, v.coeff(k));
    band = lawson_rk4(model, band, t_end, tau_ref, K);

    FourierField out = model == Model::Kdv ? linear_flow_kdv(v, t_end) : linear_flow_nls(v, t_end);
    auto c = out.mutable_coeffs();
    for (int k = -K; k <= K; ++k) c[out.index(k)] = band.coeff(k);
    if (out.real_valued()) out.enforce_conjugate_symmetry();
    return out;
}

}  // namespace reslab
