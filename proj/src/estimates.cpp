#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "reslab/bourgain.hpp"
#include "reslab/errors.hpp"
#include "reslab/spectral.hpp"

namespace reslab {

namespace {

constexpr std::size_t kModes = 32;

enum class Temporal { Free, Modulated, White, Alternating };

struct Trial {
    std::mt19937_64 rng;
    double decay;
    Temporal profile;
};

Trial make_trial(std::uint64_t seed, int trial, std::size_t tau_index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(tau_index)};
    static constexpr double decays[] = {0.0, 1.0, 2.0};
    return {std::mt19937_64(seq), decays[trial % 3], static_cast<Temporal>((trial / 3) % 4)};
}

/// Zero-mean complex Gaussian field on |k| <= band with <k>^{-decay} envelope.
FourierField random_field(std::mt19937_64& rng, std::size_t n, int band, double decay) {
    std::normal_distribution<double> g;
    FourierField u(n);
    const int kmax = std::min(band, u.k_max());
    for (int k = -kmax; k <= kmax; ++k) {
        if (k == 0) continue;
        const double a = g(rng), b = g(rng);
        u.set_coeff(k, cplx(a, b) * std::pow(1.0 + std::abs(k), -decay));
    }
    return u;
}

/// Fields at time indices first, first+1, ..., first+len-1.
TimeSequence random_sequence(Trial& t, double tau, int first, std::size_t len, std::size_t n, int band) {
    const FourierField base = random_field(t.rng, n, band, t.decay);
    std::uniform_real_distribution<double> freq(-std::numbers::pi / tau, std::numbers::pi / tau);
    const double omega = freq(t.rng);
    TimeSequence seq{{}, tau};
    for (std::size_t i = 0; i < len; ++i) {
        const int m = first + static_cast<int>(i);
        switch (t.profile) {
            case Temporal::Free:
                seq.fields.push_back(linear_flow_kdv(base, m * tau));
                break;
            case Temporal::Modulated:
                seq.fields.push_back(std::polar(1.0, omega * m * tau) * linear_flow_kdv(base, m * tau));
                break;
            case Temporal::White:
                seq.fields.push_back(random_field(t.rng, n, band, t.decay));
                break;
            case Temporal::Alternating:
                seq.fields.push_back((m % 2 == 0 ? 1.0 : -1.0) * base);
                break;
        }
    }
    return seq;
}

TimeSequence windowed(const TimeSequence& seq, int first, double scale) {
    TimeSequence out{{}, seq.tau};
    for (std::size_t i = 0; i < seq.steps(); ++i) {
        const double t = (first + static_cast<int>(i)) * seq.tau / scale;
        out.fields.push_back(bump(t) * seq.fields[i]);
    }
    return out;
}

double sup_norm(const TimeSequence& seq, double s) {
    double m = 0.0;
    for (const auto& f : seq.fields) m = std::max(m, sobolev_norm(f, s));
    return m;
}

std::size_t steps_per_unit(double tau) { return static_cast<std::size_t>(std::llround(1.0 / tau)); }

/// Input band for the bilinear check: grows with 1/τ so the uncut product
/// reaches frequencies beyond the resonance scale.
int bilinear_band(double tau) { return static_cast<int>(std::ceil(1.0 / tau)); }

std::size_t modes_for_band(int band) {
    std::size_t n = 8;
    while (static_cast<int>(n / 2) - 1 < 2 * band) n *= 2;
    return n;
}

struct Params {
    double s = 0.0, b = 0.4, b_prime = 0.1, T = 0.5;
};

/// LHS/RHS for one random input; `cut` selects Π_τ in the bilinear check.
double trial_ratio(const std::string& id, Trial& t, double tau, const Params& p, bool cut) {
    const std::size_t M = steps_per_unit(tau);
    const int Mi = static_cast<int>(M);
    const int band = static_cast<int>(kModes / 2) - 1;
    if (id == "bourg1d") {
        const FourierField f = random_field(t.rng, kModes, band, t.decay);
        TimeSequence seq{{}, tau};
        for (int n = -Mi + 1; n < Mi; ++n) seq.fields.push_back(bump(n * tau) * linear_flow_kdv(f, n * tau));
        return xsb_norm(seq, {p.s, p.b, Model::Kdv, 0}) / sobolev_norm(f, p.s);
    }
    if (id == "bourg2d") {
        const int first = -2 * Mi + 1;
        const TimeSequence u = random_sequence(t, tau, first, 4 * M - 1, kModes, band);
        return xsb_norm(windowed(u, first, 1.0), {p.s, p.b, Model::Kdv, 0}) /
               xsb_norm(u, {p.s, p.b, Model::Kdv, 0});
    }
    if (id == "bourg3d") {
        const int first = -2 * Mi + 1;
        const TimeSequence u = random_sequence(t, tau, first, 4 * M - 1, kModes, band);
        return xsb_norm(windowed(u, first, p.T), {p.s, p.b_prime, Model::Kdv, 0}) /
               (std::pow(p.T, p.b - p.b_prime) * xsb_norm(u, {p.s, p.b, Model::Kdv, 0}));
    }
    if (id == "bourg4d") {
        const TimeSequence u = random_sequence(t, tau, 0, M, kModes, band);
        return xsb_norm(duhamel_sum(u), {p.s, p.b, Model::Kdv, 0}) /
               xsb_norm(u, {p.s, p.b - 1.0, Model::Kdv, 0});
    }
    if (id == "sob_half") {
        const TimeSequence u = random_sequence(t, tau, 0, M, kModes, band);
        return sup_norm(u, p.s) / xs_norm(u, p.s);
    }
    if (id == "duhamel_half") {
        const TimeSequence u = random_sequence(t, tau, 0, M, kModes, band);
        return xs_norm(duhamel_sum(u), p.s) / ys_norm(u, p.s);
    }
    if (id == "embedding") {
        const TimeSequence u = random_sequence(t, tau, 0, M, kModes, band);
        return xsb_norm(u, {p.s, p.b, Model::Kdv, 0}) /
               (std::pow(tau, -(p.b - p.b_prime)) * xsb_norm(u, {p.s, p.b_prime, Model::Kdv, 0}));
    }
    if (id == "bilinear") {
        const int in_band = bilinear_band(tau);
        const std::size_t n = modes_for_band(in_band);
        const TimeSequence u = random_sequence(t, tau, 0, M, n, in_band);
        const TimeSequence v = random_sequence(t, tau, 0, M, n, in_band);
        TimeSequence w{{}, tau};
        for (std::size_t m = 0; m < M; ++m) {
            if (cut) {
                w.fields.push_back(
                    project_cutoff(dx(product(project_cutoff(u.fields[m], tau), project_cutoff(v.fields[m], tau))), tau));
            } else {
                w.fields.push_back(dx(product(u.fields[m], v.fields[m])));
            }
        }
        const double u_half = xsb_norm(u, {p.s, 0.5, Model::Kdv, 0});
        const double u_third = xsb_norm(u, {p.s, 1.0 / 3.0, Model::Kdv, 0});
        const double v_half = xsb_norm(v, {p.s, 0.5, Model::Kdv, 0});
        const double v_third = xsb_norm(v, {p.s, 1.0 / 3.0, Model::Kdv, 0});
        return ys_norm(w, p.s) / (u_half * v_third + v_half * u_third);
    }
    throw InvalidArgument("unknown estimate id: " + id);
}

template <class F>
std::vector<double> parallel_trials(int trials, F&& f) {
    std::vector<double> out(static_cast<std::size_t>(trials));
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), trials));
    if (workers == 1) {
        for (int i = 0; i < trials; ++i) out[static_cast<std::size_t>(i)] = f(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = static_cast<int>(w); i < trials; i += static_cast<int>(workers)) {
                    out[static_cast<std::size_t>(i)] = f(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

double uniformity(const std::vector<TauConstant>& per_tau) {
    double lo = INFINITY, hi = 0.0;
    for (const auto& c : per_tau) {
        lo = std::min(lo, c.best_constant);
        hi = std::max(hi, c.best_constant);
    }
    return lo > 0.0 ? hi / lo : INFINITY;
}

}  // namespace

std::vector<std::string> estimate_ids() {
    return {"bourg1d", "bourg2d", "bourg3d", "bourg4d", "sob_half", "duhamel_half", "bilinear", "embedding"};
}

ConstantReport check_estimate(const std::string& id, int trials, const std::vector<double>& taus,
                              std::uint64_t seed) {
    const auto ids = estimate_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw InvalidArgument("unknown estimate id: " + id);
    if (trials < 10) throw InvalidArgument("check_estimate needs at least 10 trials");
    if (taus.empty()) throw InvalidArgument("check_estimate needs at least one tau");
    for (double tau : taus) {
        if (!(tau > 0.0 && tau <= 1.0)) throw InvalidArgument("tau must lie in (0, 1]");
    }
    Params p;
    if (id == "bourg4d") p.b = 0.6;

    ConstantReport rep;
    rep.estimate = id;
    for (std::size_t ti = 0; ti < taus.size(); ++ti) {
        const double tau = taus[ti];
        auto run = [&](bool cut) {
            const auto r = parallel_trials(trials, [&](int i) {
                Trial t = make_trial(seed, i, ti);
                return trial_ratio(id, t, tau, p, cut);
            });
            return *std::max_element(r.begin(), r.end());
        };
        rep.per_tau.push_back({tau, run(true)});
        if (id == "bilinear") rep.per_tau_no_cutoff.push_back({tau, run(false)});
    }
    rep.uniformity_ratio = uniformity(rep.per_tau);
    if (id == "embedding" && taus.size() >= 2) {
        // C(τ) τ^{b-b'} is what was stored; the raw constant is C τ^{-(b-b')}.
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& c : rep.per_tau) {
            const double x = std::log(c.tau);
            const double y = std::log(c.best_constant) - (p.b - p.b_prime) * x;
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double n = static_cast<double>(rep.per_tau.size());
        rep.scaling_exponent = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    rep.parameters = {{"s", p.s}, {"n_modes", static_cast<double>(kModes)}, {"trials", static_cast<double>(trials)}};
    if (id == "bourg3d" || id == "embedding") {
        rep.parameters.push_back({"b", p.b});
        rep.parameters.push_back({"b_prime", p.b_prime});
        if (id == "bourg3d") rep.parameters.push_back({"T", p.T});
    } else if (id == "bourg1d" || id == "bourg2d" || id == "bourg4d") {
        rep.parameters.push_back({"b", p.b});
    }
    return rep;
}

}  // namespace reslab
