#include "reslab/bourgain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "reslab/errors.hpp"
#include "reslab/simd_kernels.hpp"
#include "reslab/spectral.hpp"

namespace reslab {

void TimeSequence::validate() const {
    if (fields.empty()) throw InvalidArgument("a time sequence needs at least one field");
    if (!(tau > 0.0) || !std::isfinite(tau)) throw InvalidArgument("tau must be positive");
    for (const auto& f : fields) {
        if (f.n_modes() != fields[0].n_modes()) throw InvalidArgument("fields of a sequence must share n_modes");
    }
}

std::size_t default_sigma_samples(std::size_t steps) {
    std::size_t j = 64;
    while (j < 4 * steps) j *= 2;
    return j;
}

double SpacetimeGrid::sigma(std::size_t j) const {
    const double period = 2.0 * std::numbers::pi / tau;
    return -0.5 * period + period * static_cast<double>(j) / static_cast<double>(n_sigma);
}

SpacetimeGrid spacetime_transform(const TimeSequence& seq, std::size_t sigma_samples) {
    seq.validate();
    const std::size_t M = seq.steps(), N = seq.n_modes();
    const std::size_t J = sigma_samples == 0 ? default_sigma_samples(M) : sigma_samples;
    if (J < 4 * M) throw InvalidArgument("sigma_samples must be at least 4 times the number of steps");
    SpacetimeGrid g{seq.tau, J, N, std::vector<cplx>(J * N)};
    std::vector<cplx> in(J), out(J);
    for (std::size_t i = 0; i < N; ++i) {
        std::fill(in.begin(), in.end(), cplx(0.0, 0.0));
        for (std::size_t m = 0; m < M; ++m) {
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            in[m] = seq.tau * sign * seq.fields[m].coeffs()[i];
        }
        fft::backward(in.data(), out.data(), J);
        for (std::size_t j = 0; j < J; ++j) g.values[j * N + i] = out[j];
    }
    return g;
}

cplx d_tau(double sigma, double tau) {
    if (!(tau > 0.0)) throw InvalidArgument("d_tau needs tau > 0");
    // e^{iθ} - 1 = 2i sin(θ/2) e^{iθ/2}, free of cancellation for small θ.
    const double half = 0.5 * tau * sigma;
    return cplx(0.0, 2.0 * std::sin(half)) * std::polar(1.0, half) / tau;
}

namespace {

double dispersion_shift(Model model, int k) {
    const double kd = k;
    return model == Model::Kdv ? kd * kd * kd : -kd * kd;
}

double bracket(double x) { return 1.0 + std::abs(x); }

}  // namespace

double xsb_norm(const TimeSequence& seq, const BourgainParams& p) {
    const SpacetimeGrid g = spacetime_transform(seq, p.sigma_samples);
    const std::size_t N = g.n_modes, J = g.n_sigma;
    const int kmin = -static_cast<int>(N / 2);
    std::vector<double> w(N);
    std::vector<double> ws(N);
    for (std::size_t i = 0; i < N; ++i) ws[i] = std::pow(bracket(kmin + static_cast<int>(i)), 2.0 * p.s);
    double total = 0.0;
    const auto& kt = kernels::active();
    for (std::size_t j = 0; j < J; ++j) {
        const double sig = g.sigma(j);
        for (std::size_t i = 0; i < N; ++i) {
            const int k = kmin + static_cast<int>(i);
            const double d = std::abs(d_tau(sig + dispersion_shift(p.model, k), g.tau));
            w[i] = ws[i] * (p.b == 0.0 ? 1.0 : std::pow(bracket(d), 2.0 * p.b));
        }
        total += kt.weighted_norm2(w.data(), g.values.data() + j * N, N);
    }
    return std::sqrt(total / (g.tau * static_cast<double>(J)));
}

namespace {

double l2_l1_at(const TimeSequence& seq, double s, double w, Model model, std::size_t J) {
    const std::size_t M = seq.steps(), N = seq.n_modes();
    const double tau = seq.tau;
    const double period = 2.0 * std::numbers::pi / tau;
    const int kmin = -static_cast<int>(N / 2);
    std::vector<cplx> in(J), out(J);
    double total = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const int k = kmin + static_cast<int>(i);
        std::fill(in.begin(), in.end(), cplx(0.0, 0.0));
        bool any = false;
        for (std::size_t m = 0; m < M; ++m) {
            const cplx c = seq.fields[m].coeffs()[i];
            any = any || c != cplx(0.0, 0.0);
            in[m] = ((m % 2 == 0) ? tau : -tau) * c;
        }
        if (!any) continue;
        fft::backward(in.data(), out.data(), J);
        const double shift = dispersion_shift(model, k);
        double acc = 0.0;
        for (std::size_t j = 0; j < J; ++j) {
            const double a = std::abs(out[j]);
            if (w == 0.0) {
                acc += a;
                continue;
            }
            const double sigma = -0.5 * period + period * static_cast<double>(j) / static_cast<double>(J);
            // |d_tau(x)| = 2|sin(tau x / 2)| / tau
            const double d = 2.0 * std::abs(std::sin(0.5 * tau * (sigma + shift))) / tau;
            acc += a * (w == 1.0 ? 1.0 / bracket(d) : std::pow(bracket(d), -w));
        }
        acc *= std::pow(bracket(k), s) / (tau * static_cast<double>(J));
        total += acc * acc;
    }
    return std::sqrt(total);
}

void require_zero_mean(const TimeSequence& seq) {
    double scale = 0.0;
    for (const auto& f : seq.fields) {
        for (const cplx& c : f.coeffs()) scale = std::max(scale, std::abs(c));
    }
    for (std::size_t n = 0; n < seq.steps(); ++n) {
        if (std::abs(seq.fields[n].coeff(0)) > 1e-14 * std::max(scale, 1e-300)) {
            throw NonZeroMeanMode("field " + std::to_string(n) + " has a nonzero mean");
        }
    }
}

}  // namespace

double l2_l1_norm(const TimeSequence& seq, double s, double w, Model model) {
    seq.validate();
    std::size_t J = default_sigma_samples(seq.steps());
    double prev = l2_l1_at(seq, s, w, model, J);
    for (int doubling = 0; doubling < 12; ++doubling) {
        J *= 2;
        const double next = l2_l1_at(seq, s, w, model, J);
        if (std::abs(next - prev) <= 1e-6 * std::max(std::abs(next), 1e-300)) return next;
        prev = next;
    }
    return prev;
}

double xs_norm(const TimeSequence& seq, double s, Model model) {
    seq.validate();
    require_zero_mean(seq);
    return xsb_norm(seq, {s, 0.5, model, 0}) + l2_l1_norm(seq, s, 0.0, model);
}

double ys_norm(const TimeSequence& seq, double s, Model model) {
    seq.validate();
    return xsb_norm(seq, {s, -0.5, model, 0}) + l2_l1_norm(seq, s, 1.0, model);
}

double bump(double t) {
    if (std::abs(t) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - t * t));
}

TimeSequence duhamel_sum(const TimeSequence& seq, const std::vector<double>& window, Model model) {
    seq.validate();
    if (window.size() != seq.steps()) throw InvalidArgument("window length must match the sequence");
    const std::size_t N = seq.n_modes();
    const Multiplier prop =
        model == Model::Kdv ? multipliers::kdv_propagator(seq.tau) : multipliers::nls_propagator(seq.tau);
    const std::vector<cplx> table = prop.table(N);
    TimeSequence out{{}, seq.tau};
    FourierField acc = seq.fields[0];
    for (std::size_t n = 0; n < seq.steps(); ++n) {
        if (n > 0) acc = apply_table(acc, table) + seq.fields[n];
        out.fields.push_back((window[n] * seq.tau) * acc);
    }
    return out;
}

TimeSequence duhamel_sum(const TimeSequence& seq, Model model) {
    std::vector<double> window(seq.steps());
    for (std::size_t n = 0; n < window.size(); ++n) {
        window[n] = bump(static_cast<double>(n) / static_cast<double>(window.size()));
    }
    return duhamel_sum(seq, window, model);
}

}  // namespace reslab
