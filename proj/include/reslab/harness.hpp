#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reslab/fourier_field.hpp"
#include "reslab/trees.hpp"

namespace reslab {

inline constexpr const char* kArtifactVersion = "0.1.0";

enum class NormSpace { L2, Hs };

struct InitialData {
    /// Named smooth profile, or empty for rough data.
    std::string smooth;
    double sigma = 0.0;
    std::uint64_t seed = 1;

    bool rough() const noexcept { return smooth.empty(); }
};

struct ExperimentConfig {
    Model model = Model::Kdv;
    std::string scheme = "resonance1";
    std::size_t n_modes = 128;
    InitialData data{"cos"};
    double t_end = 1.0;
    std::vector<double> taus;
    NormSpace norm_space = NormSpace::L2;
    double norm_s = 0.0;
    bool filter = false;
    int substep_factor = 100;
    /// Rough data only: seeds to run; the median fitted order is reported.
    std::vector<std::uint64_t> seeds;

    /// Throws InvalidArgument on a malformed config.
    void validate() const;
};

/// Known smooth profiles: "cos", "sech2" (zero-mean sech^2 bump) for KdV and
/// "cos_sin" (cos x + 0.5 i sin 2x), "plane_wave" (constant 1) for NLS.
FourierField smooth_profile(const std::string& name, Model model, std::size_t n_modes);

/// Initial field of a config for one seed (seed ignored for smooth data).
FourierField initial_field(const ExperimentConfig& cfg, std::uint64_t seed);

/// τ rounded down to t_end / ceil(t_end / τ) and the matching step count.
std::pair<double, long> align_step(double tau, double t_end);

/// Interaction-picture RK4 on the truncated spectral system. A positive
/// filter_tau solves the filtered equation with cutoff Π_{filter_tau}.
FourierField reference_solution(Model model, const FourierField& v, double t_end, double tau_ref,
                                double filter_tau = 0.0);

/// One-step function of a configured scheme at step size tau.
std::function<FourierField(const FourierField&)> make_stepper(const ExperimentConfig& cfg, double tau);

double error_norm(const ExperimentConfig& cfg, const FourierField& a, const FourierField& b);

struct ConvergenceRow {
    double tau = 0.0;
    double error = 0.0;
    long steps = 0;
    std::string failure;  // scheme error message; empty on success
};

struct ConvergenceReport {
    ExperimentConfig config;
    /// Per-τ rows; with several seeds the error is the median over seeds.
    std::vector<ConvergenceRow> rows;
    std::vector<std::vector<ConvergenceRow>> seed_rows;
    /// Fitted order per seed (rough data) or a single entry.
    std::vector<std::pair<std::uint64_t, std::optional<double>>> seed_orders;
    std::optional<double> fitted_order;
    double wall_time_s = 0.0;
};

/// Least-squares slope of log(err) against log(tau). Throws Degenerate on a
/// non-positive or non-finite error or fewer than two distinct taus.
double fit_order(const std::vector<std::pair<double, double>>& errors);

ConvergenceReport run_convergence(const ExperimentConfig& cfg);

struct OrderReductionReport {
    ConvergenceReport first;
    ConvergenceReport second;
    /// fitted_order(first) - fitted_order(second)
    double difference = 0.0;
};

/// Both configs must differ only in the scheme.
OrderReductionReport run_order_reduction(const ExperimentConfig& first, const ExperimentConfig& second);

/// Global error after a single step of size tau against the reference.
double one_step_error(const ExperimentConfig& cfg, double tau);

struct StepDiagnostics {
    long step = 0;
    double time = 0.0;
    double mass_re = 0.0;
    double mass_im = 0.0;
    double l2 = 0.0;
};

struct EvolveResult {
    std::vector<std::pair<long, FourierField>> snapshots;
    std::vector<StepDiagnostics> diagnostics;
    /// Set when a step produced non-finite values; snapshots end at the last good one.
    std::optional<std::string> failure;
};

/// Uses taus[0] (aligned); snapshots at step 0, every dump_every steps and the final step.
EvolveResult evolve(const ExperimentConfig& cfg, long dump_every);

/// CSV `tau,error,steps` with 17 significant digits.
std::string to_csv(const ConvergenceReport& report);

}  // namespace reslab
