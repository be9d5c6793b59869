#include "reslab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <numbers>
#include <sstream>

#include "reslab/errors.hpp"
#include "reslab/kdv_schemes.hpp"
#include "reslab/nls_schemes.hpp"
#include "reslab/spectral.hpp"

namespace reslab {

void ExperimentConfig::validate() const {
    if (n_modes < 8 || (n_modes & (n_modes - 1)) != 0) throw InvalidArgument("n_modes must be a power of two >= 8");
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw InvalidArgument("t_end must be positive");
    if (taus.size() < 2) throw InvalidArgument("taus needs at least two entries");
    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (!(taus[i] > 0.0) || !std::isfinite(taus[i])) throw InvalidArgument("taus must be positive");
        if (i > 0 && !(taus[i] < taus[i - 1])) throw InvalidArgument("taus must be strictly decreasing");
    }
    if (substep_factor < 1) throw InvalidArgument("substep_factor must be >= 1");
    if (norm_space == NormSpace::Hs && !std::isfinite(norm_s)) throw InvalidArgument("norm s must be finite");
    if (data.rough() && !(data.sigma >= 0.0)) throw InvalidArgument("rough data needs sigma >= 0");
    if (model == Model::Kdv) {
        reslab::validate(KdvScheme{kdv_kind_from_string(scheme), taus.back(), filter});
    } else {
        reslab::validate(NlsScheme{nls_kind_from_string(scheme), taus.back(), filter});
    }
    if (!data.rough()) (void)smooth_profile(data.smooth, model, n_modes);
}

FourierField smooth_profile(const std::string& name, Model model, std::size_t n_modes) {
    const bool real = model == Model::Kdv;
    if (name == "cos") {
        FourierField u(n_modes, real);
        u.set_coeff(1, 0.5);
        if (!real) u.set_coeff(-1, 0.5);
        return u;
    }
    if (name == "sech2" && real) {
        std::vector<cplx> x(n_modes);
        for (std::size_t j = 0; j < n_modes; ++j) {
            const double xj = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_modes);
            const double c = std::cosh(2.0 * (xj - std::numbers::pi));
            x[j] = 1.0 / (c * c);
        }
        FourierField u = from_physical(x, true);
        u.set_coeff(0, 0.0);
        u.set_coeff(u.k_min(), 0.0);
        return u;
    }
    if (name == "cos_sin" && !real) {
        FourierField u(n_modes);
        u.set_coeff(1, 0.5);
        u.set_coeff(-1, 0.5);
        u.set_coeff(2, 0.25);
        u.set_coeff(-2, -0.25);
        return u;
    }
    if (name == "plane_wave" && !real) {
        FourierField u(n_modes);
        u.set_coeff(0, 1.0);
        return u;
    }
    throw InvalidArgument("unknown smooth profile '" + name + "' for model " + to_string(model));
}

FourierField initial_field(const ExperimentConfig& cfg, std::uint64_t seed) {
    if (!cfg.data.rough()) return smooth_profile(cfg.data.smooth, cfg.model, cfg.n_modes);
    return rough_data(cfg.data.sigma, seed, cfg.n_modes, cfg.model == Model::Kdv);
}

std::pair<double, long> align_step(double tau, double t_end) {
    const long steps = std::max<long>(1, static_cast<long>(std::ceil(t_end / tau - 1e-9)));
    return {t_end / static_cast<double>(steps), steps};
}

std::function<FourierField(const FourierField&)> make_stepper(const ExperimentConfig& cfg, double tau) {
    if (cfg.model == Model::Kdv) {
        auto st = std::make_shared<KdvStepper>(KdvScheme{kdv_kind_from_string(cfg.scheme), tau, cfg.filter},
                                               cfg.n_modes);
        return [st](const FourierField& u) { return st->step(u); };
    }
    auto st = std::make_shared<NlsStepper>(NlsScheme{nls_kind_from_string(cfg.scheme), tau, cfg.filter}, cfg.n_modes);
    return [st](const FourierField& u) { return st->step(u); };
}

double error_norm(const ExperimentConfig& cfg, const FourierField& a, const FourierField& b) {
    const FourierField d = a - b;
    return cfg.norm_space == NormSpace::L2 ? l2_norm(d) : sobolev_norm(d, cfg.norm_s);
}

double fit_order(const std::vector<std::pair<double, double>>& errors) {
    if (errors.size() < 2) throw Degenerate("fit_order needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [tau, err] : errors) {
        if (!(tau > 0.0) || !std::isfinite(tau)) throw Degenerate("tau must be positive and finite");
        if (!(err > 0.0) || !std::isfinite(err)) throw Degenerate("errors must be positive and finite");
        const double x = std::log(tau), y = std::log(err);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(errors.size());
    const double den = n * sxx - sx * sx;
    if (!(std::abs(den) > 1e-300)) throw Degenerate("fit_order needs two distinct taus");
    return (n * sxy - sx * sy) / den;
}

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::vector<std::uint64_t> seeds_of(const ExperimentConfig& cfg) {
    if (!cfg.data.rough()) return {0};
    if (cfg.seeds.empty()) return {cfg.data.seed};
    return cfg.seeds;
}

/// Reference at t_end for one initial field, memoized per filter band.
class ReferenceCache {
public:
    ReferenceCache(const ExperimentConfig& cfg, const FourierField& v) : cfg_(cfg), v_(v) {}

    /// Unfiltered: one reference at min(taus)/substep_factor. Filtered: one
    /// per cutoff band, stepped at (smallest τ with that band)/substep_factor.
    const FourierField& at(double tau) {
        const int key = cfg_.filter ? cutoff_mode(tau) : -1;
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            double finest = INFINITY;
            for (double t : cfg_.taus) {
                if (!cfg_.filter || cutoff_mode(t) == key) finest = std::min(finest, t);
            }
            const double tau_ref = align_step(finest / cfg_.substep_factor, cfg_.t_end).first;
            it = cache_.emplace(key, reference_solution(cfg_.model, v_, cfg_.t_end, tau_ref, cfg_.filter ? tau : 0.0))
                     .first;
        }
        return it->second;
    }

private:
    const ExperimentConfig& cfg_;
    FourierField v_;
    std::map<int, FourierField> cache_;
};

}  // namespace

ConvergenceReport run_convergence(const ExperimentConfig& cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    ConvergenceReport rep;
    rep.config = cfg;
    for (std::uint64_t seed : seeds_of(cfg)) {
        const FourierField v = initial_field(cfg, seed);
        ReferenceCache refs(cfg, v);
        std::vector<ConvergenceRow> rows;
        for (double requested : cfg.taus) {
            const auto [tau, steps] = align_step(requested, cfg.t_end);
            ConvergenceRow row{tau, std::nan(""), steps, {}};
            try {
                const auto step = make_stepper(cfg, tau);
                FourierField u = v;
                for (long n = 0; n < steps; ++n) u = step(u);
                row.error = error_norm(cfg, u, refs.at(tau));
            } catch (const Error& e) {
                row.failure = e.what();
            }
            rows.push_back(row);
        }
        std::optional<double> order;
        try {
            std::vector<std::pair<double, double>> pts;
            for (const auto& r : rows) pts.emplace_back(r.tau, r.error);
            order = fit_order(pts);
        } catch (const Degenerate&) {
        }
        rep.seed_orders.emplace_back(seed, order);
        rep.seed_rows.push_back(std::move(rows));
    }

    rep.rows = rep.seed_rows.front();
    if (rep.seed_rows.size() > 1) {
        for (std::size_t i = 0; i < rep.rows.size(); ++i) {
            std::vector<double> errs;
            for (const auto& rows : rep.seed_rows) errs.push_back(rows[i].error);
            rep.rows[i].error = median(errs);
        }
    }
    std::vector<double> orders;
    for (const auto& [seed, o] : rep.seed_orders) {
        if (o) orders.push_back(*o);
    }
    if (orders.size() == rep.seed_orders.size()) rep.fitted_order = median(orders);
    rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

OrderReductionReport run_order_reduction(const ExperimentConfig& first, const ExperimentConfig& second) {
    ExperimentConfig probe = second;
    probe.scheme = first.scheme;
    const bool same = probe.model == first.model && probe.n_modes == first.n_modes &&
                      probe.data.smooth == first.data.smooth && probe.data.sigma == first.data.sigma &&
                      probe.data.seed == first.data.seed && probe.t_end == first.t_end && probe.taus == first.taus &&
                      probe.norm_space == first.norm_space && probe.norm_s == first.norm_s &&
                      probe.filter == first.filter && probe.substep_factor == first.substep_factor &&
                      probe.seeds == first.seeds;
    if (!same) throw InvalidArgument("order-reduction configs must differ only in the scheme");
    OrderReductionReport rep{run_convergence(first), run_convergence(second), 0.0};
    if (!rep.first.fitted_order || !rep.second.fitted_order) {
        throw Degenerate("order reduction needs finite errors for both schemes");
    }
    rep.difference = *rep.first.fitted_order - *rep.second.fitted_order;
    return rep;
}

double one_step_error(const ExperimentConfig& cfg, double tau) {
    const FourierField v = initial_field(cfg, cfg.data.seed);
    const FourierField u = make_stepper(cfg, tau)(v);
    const FourierField ref =
        reference_solution(cfg.model, v, tau, tau / cfg.substep_factor, cfg.filter ? tau : 0.0);
    return error_norm(cfg, u, ref);
}

EvolveResult evolve(const ExperimentConfig& cfg, long dump_every) {
    if (cfg.taus.empty()) throw InvalidArgument("evolve needs a tau");
    if (dump_every < 1) throw InvalidArgument("dump_every must be >= 1");
    const auto [tau, steps] = align_step(cfg.taus.front(), cfg.t_end);
    const auto step = make_stepper(cfg, tau);
    EvolveResult res;
    FourierField u = initial_field(cfg, cfg.data.seed);
    auto record = [&](long n) {
        const cplx m = u.coeff(0);
        res.diagnostics.push_back({n, n * tau, m.real(), m.imag(), l2_norm(u)});
    };
    res.snapshots.emplace_back(0, u);
    record(0);
    for (long n = 1; n <= steps; ++n) {
        try {
            u = step(u);
        } catch (const NonFiniteValue& e) {
            res.failure = std::string(e.what()) + " (last good snapshot at step " +
                          std::to_string(res.snapshots.back().first) + ")";
            return res;
        }
        record(n);
        if (n % dump_every == 0 || n == steps) res.snapshots.emplace_back(n, u);
    }
    return res;
}

std::string to_csv(const ConvergenceReport& report) {
    std::ostringstream os;
    os << "tau,error,steps\n";
    char buf[64];
    for (const auto& r : report.rows) {
        std::snprintf(buf, sizeof buf, "%.17g", r.tau);
        os << buf << ',';
        std::snprintf(buf, sizeof buf, "%.17g", r.error);
        os << buf << ',' << r.steps << '\n';
    }
    return os.str();
}

}  // namespace reslab
