#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reslab/fourier_field.hpp"
#include "reslab/trees.hpp"

namespace reslab {

/// Fields u^0 .. u^{M-1} at times nτ; zero outside this range.
struct TimeSequence {
    std::vector<FourierField> fields;
    double tau = 1.0;

    std::size_t steps() const noexcept { return fields.size(); }
    std::size_t n_modes() const { return fields.at(0).n_modes(); }
    void validate() const;
};

/// Default σ resolution: the next power of two >= max(4M, 64).
std::size_t default_sigma_samples(std::size_t steps);

/// ũ(σ_j, k) = τ Σ_m c^m_k e^{imτσ_j} on σ_j = -π/τ + 2πj/(Jτ), j = 0..J-1.
struct SpacetimeGrid {
    double tau;
    std::size_t n_sigma;
    std::size_t n_modes;
    std::vector<cplx> values;  // row-major [j][k + N/2]

    double sigma(std::size_t j) const;
    cplx at(std::size_t j, int k) const {
        return values[j * n_modes + static_cast<std::size_t>(k + static_cast<int>(n_modes / 2))];
    }
};

SpacetimeGrid spacetime_transform(const TimeSequence& seq, std::size_t sigma_samples = 0);

/// (e^{iτσ} - 1)/τ
cplx d_tau(double sigma, double tau);

struct BourgainParams {
    double s = 0.0;
    double b = 0.0;
    Model model = Model::Kdv;  // dispersion shift σ + k^3 (KdV) or σ - k^2 (NLS)
    std::size_t sigma_samples = 0;  // 0 selects default_sigma_samples
};

/// (∫ Σ_k <k>^{2s} <d_τ(σ + P(k))>^{2b} |ũ|^2 dσ/2π)^{1/2} with <x> = 1 + |x|,
/// the σ-integral taken with the uniform periodic rule on the σ grid.
/// The measure dσ/2π makes s = b = 0 equal (τ Σ_m ||u^m||^2)^{1/2}.
double xsb_norm(const TimeSequence& seq, const BourgainParams& p);

/// (Σ_k (∫ <k>^s <d_τ(σ + P(k))>^{-w} |ũ(σ,k)| dσ/2π)^2)^{1/2}; the σ grid is
/// doubled until two successive values agree to 1e-6 relative.
double l2_l1_norm(const TimeSequence& seq, double s, double w, Model model = Model::Kdv);

/// X^s_τ = X^{s,1/2}_τ + ℓ²L¹ part. Throws NonZeroMeanMode on a nonzero mean.
double xs_norm(const TimeSequence& seq, double s, Model model = Model::Kdv);

/// Y^s_τ = X^{s,-1/2}_τ + ℓ²L¹ part weighted by <d_τ>^{-1}.
double ys_norm(const TimeSequence& seq, double s, Model model = Model::Kdv);

/// η(t) = exp(1 - 1/(1 - t^2)) on (-1, 1), 0 outside.
double bump(double t);

/// U^n = η(n/M) τ Σ_{m<=n} e^{-(n-m)τ ∂_x^3} u^m (window scaled to the
/// support length M); NLS uses the Schrödinger propagator.
TimeSequence duhamel_sum(const TimeSequence& seq, Model model = Model::Kdv);

/// Same with an explicit window: U^n = window(n) τ Σ_{m<=n} e^{...} u^m.
TimeSequence duhamel_sum(const TimeSequence& seq, const std::vector<double>& window, Model model = Model::Kdv);

struct TauConstant {
    double tau;
    double best_constant;
};

struct ConstantReport {
    std::string estimate;
    std::vector<TauConstant> per_tau;
    double uniformity_ratio = 0.0;
    /// bilinear only: constants with the cutoff removed.
    std::vector<TauConstant> per_tau_no_cutoff;
    /// embedding only: fitted slope of log C against log τ.
    double scaling_exponent = 0.0;
    /// Parameters used (b, b', T, s, n_modes, trials).
    std::vector<std::pair<std::string, double>> parameters;
};

/// Known ids: bourg1d, bourg2d, bourg3d, bourg4d, sob_half, duhamel_half, bilinear, embedding.
std::vector<std::string> estimate_ids();

/// Maximizes LHS/RHS of the named estimate over a random ensemble for every τ.
ConstantReport check_estimate(const std::string& id, int trials, const std::vector<double>& taus,
                              std::uint64_t seed);

}  // namespace reslab
