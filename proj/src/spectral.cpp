#include "reslab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "fft.hpp"
#include "reslab/errors.hpp"
#include "reslab/simd_kernels.hpp"

namespace reslab {

std::vector<cplx> Multiplier::table(std::size_t n_modes) const {
    std::vector<cplx> t(n_modes);
    const int kmin = -static_cast<int>(n_modes / 2);
    for (std::size_t i = 0; i < n_modes; ++i) t[i] = symbol_(kmin + static_cast<int>(i));
    return t;
}

namespace multipliers {

Multiplier identity() {
    return Multiplier([](int) { return cplx(1.0, 0.0); });
}

Multiplier derivative() {
    return Multiplier([](int k) { return cplx(0.0, static_cast<double>(k)); });
}

Multiplier kdv_propagator(double t) {
    return Multiplier([t](int k) {
        const double kd = k;
        return std::polar(1.0, t * kd * kd * kd);
    });
}

Multiplier nls_propagator(double t) {
    return Multiplier([t](int k) {
        const double kd = k;
        return std::polar(1.0, -t * kd * kd);
    });
}

Multiplier inverse_derivative() {
    return Multiplier([](int k) { return k == 0 ? cplx(0.0, 0.0) : cplx(0.0, -1.0 / k); });
}

}  // namespace multipliers

bool table_preserves_reality(const std::vector<cplx>& symbol, const FourierField& u) {
    const int kmin = u.k_min();
    auto at = [&](int k) { return symbol[static_cast<std::size_t>(k - kmin)]; };
    auto tol = [](cplx m) { return 1e-14 * std::max(1.0, std::abs(m)); };
    const auto c = u.coeffs();
    if (c[u.index(0)] != cplx(0.0, 0.0) && std::abs(at(0).imag()) > tol(at(0))) return false;
    if (c[u.index(kmin)] != cplx(0.0, 0.0) && std::abs(at(kmin).imag()) > tol(at(kmin))) return false;
    for (int k = 1; k <= u.k_max(); ++k) {
        if (c[u.index(k)] == cplx(0.0, 0.0)) continue;
        if (std::abs(at(-k) - std::conj(at(k))) > tol(at(k))) return false;
    }
    return true;
}

FourierField apply_table(const FourierField& u, const std::vector<cplx>& symbol) {
    if (symbol.size() != u.n_modes()) throw InvalidArgument("symbol table size mismatch");
    FourierField out(u.n_modes(), false);
    kernels::active().cmul(u.coeffs().data(), symbol.data(), out.mutable_coeffs().data(), u.n_modes());
    if (u.real_valued() && table_preserves_reality(symbol, u)) out.enforce_conjugate_symmetry();
    return out;
}

FourierField apply_multiplier(const FourierField& u, const Multiplier& m) {
    return apply_table(u, m.table(u.n_modes()));
}

FourierField linear_flow_kdv(const FourierField& u, double t) {
    return apply_multiplier(u, multipliers::kdv_propagator(t));
}

FourierField linear_flow_nls(const FourierField& u, double t) {
    return apply_multiplier(u, multipliers::nls_propagator(t));
}

FourierField dx(const FourierField& u) { return apply_multiplier(u, multipliers::derivative()); }

FourierField inv_dx(const FourierField& u) { return apply_multiplier(u, multipliers::inverse_derivative()); }

double sobolev_norm(const FourierField& u, double s) {
    const std::size_t n = u.n_modes();
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int k = u.k_min() + static_cast<int>(i);
        w[i] = s == 0.0 ? 1.0 : std::pow(1.0 + std::abs(k), 2.0 * s);
    }
    return std::sqrt(kernels::active().weighted_norm2(w.data(), u.coeffs().data(), n));
}

double l2_norm(const FourierField& u) { return sobolev_norm(u, 0.0); }

FourierField rough_data(double sigma, std::uint64_t seed, std::size_t n_modes, bool real_valued) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) throw InvalidArgument("sigma must be finite and >= 0");
    constexpr double eps = 0.01;
    FourierField u(n_modes, real_valued);
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    auto amp = [&](int k) { return std::pow(1.0 + std::abs(k), -(sigma + 0.5 + eps)); };
    if (real_valued) {
        for (int k = 1; k <= u.k_max(); ++k) u.set_coeff(k, std::polar(amp(k), angle(gen)));
    } else {
        for (int k = u.k_min() + 1; k <= u.k_max(); ++k) {
            const double theta = angle(gen);
            if (k != 0) u.set_coeff(k, std::polar(amp(k), theta));
        }
    }
    return u;
}

int cutoff_mode(double tau) {
    if (!(tau > 0.0)) throw InvalidArgument("cutoff requires tau > 0");
    int K = 1;
    while (static_cast<double>(K + 1) * (K + 1) * (K + 1) * tau <= 1.0 + 1e-12) ++K;
    return K;
}

FourierField truncate_band(const FourierField& u, int K) {
    FourierField out = u;
    auto c = out.mutable_coeffs();
    for (int k = u.k_min(); k <= u.k_max(); ++k) {
        if (std::abs(k) > K) c[u.index(k)] = cplx(0.0, 0.0);
    }
    return out;
}

FourierField project_cutoff(const FourierField& u, double tau) { return truncate_band(u, cutoff_mode(tau)); }

namespace {

std::size_t wrap(int k, std::size_t m) {
    const long mm = static_cast<long>(m);
    return static_cast<std::size_t>(((k % mm) + mm) % mm);
}

struct Scratch {
    std::vector<cplx> a, b, c, work;
    void reserve(std::size_t m) {
        if (a.size() < m) {
            a.resize(m);
            b.resize(m);
            c.resize(m);
            work.resize(m);
        }
    }
};

Scratch& scratch(std::size_t m) {
    thread_local Scratch s;
    s.reserve(m);
    return s;
}

// Samples of u on an m-point grid, written to out.
void samples_on(const FourierField& u, int band, std::size_t m, cplx* work, cplx* out) {
    std::fill(work, work + m, cplx(0.0, 0.0));
    const auto c = u.coeffs();
    for (int k = std::max(-band, u.k_min()); k <= std::min(band, u.k_max()); ++k) {
        work[wrap(k, m)] = c[u.index(k)];
    }
    fft::backward(work, out, m);
}

// Coefficients |k| <= keep of the m-point samples in phys.
FourierField coefficients_from(cplx* phys, cplx* work, std::size_t m, std::size_t n_modes, int keep,
                               bool real_valued) {
    fft::forward(phys, work, m);
    FourierField out(n_modes, false);
    auto c = out.mutable_coeffs();
    const double scale = 1.0 / static_cast<double>(m);
    for (int k = -keep; k <= keep; ++k) c[out.index(k)] = work[wrap(k, m)] * scale;
    if (real_valued) out.enforce_conjugate_symmetry();
    return out;
}

std::size_t padded_size(int total_band, int keep) {
    std::size_t m = 8;
    while (m <= static_cast<std::size_t>(total_band + keep)) m *= 2;
    return m;
}

void check_same(const FourierField& a, const FourierField& b) {
    if (a.n_modes() != b.n_modes()) throw InvalidArgument("fields have different n_modes");
}

}  // namespace

FourierField product(const FourierField& a, const FourierField& b) {
    check_same(a, b);
    if (&a == &b) return square(a);
    const bool real = a.real_valued() && b.real_valued();
    const int ba = a.bandwidth(), bb = b.bandwidth();
    if (ba < 0 || bb < 0) return FourierField(a.n_modes(), real);
    const int keep = std::min(a.k_max(), ba + bb);
    const std::size_t m = padded_size(ba + bb, keep);
    Scratch& s = scratch(m);
    samples_on(a, ba, m, s.work.data(), s.a.data());
    samples_on(b, bb, m, s.work.data(), s.b.data());
    kernels::active().cmul(s.a.data(), s.b.data(), s.c.data(), m);
    return coefficients_from(s.c.data(), s.work.data(), m, a.n_modes(), keep, real);
}

FourierField square(const FourierField& a) {
    const int ba = a.bandwidth();
    if (ba < 0) return FourierField(a.n_modes(), a.real_valued());
    const int keep = std::min(a.k_max(), 2 * ba);
    const std::size_t m = padded_size(2 * ba, keep);
    Scratch& s = scratch(m);
    samples_on(a, ba, m, s.work.data(), s.a.data());
    kernels::active().square(s.a.data(), s.c.data(), m);
    return coefficients_from(s.c.data(), s.work.data(), m, a.n_modes(), keep, a.real_valued());
}

FourierField cubic(const FourierField& a) {
    const int ba = a.bandwidth();
    if (ba < 0) return FourierField(a.n_modes(), a.real_valued());
    const int keep = std::min(a.k_max(), 3 * ba);
    const std::size_t m = padded_size(3 * ba, keep);
    Scratch& s = scratch(m);
    samples_on(a, ba, m, s.work.data(), s.a.data());
    kernels::active().cubic(s.a.data(), s.c.data(), m);
    return coefficients_from(s.c.data(), s.work.data(), m, a.n_modes(), keep, a.real_valued());
}

FourierField product_conj(const FourierField& a, const FourierField& b, const FourierField& c) {
    check_same(a, b);
    check_same(a, c);
    const bool real = a.real_valued() && b.real_valued() && c.real_valued();
    const int ba = a.bandwidth(), bb = b.bandwidth(), bc = c.bandwidth();
    if (ba < 0 || bb < 0 || bc < 0) return FourierField(a.n_modes(), real);
    const int keep = std::min(a.k_max(), ba + bb + bc);
    const std::size_t m = padded_size(ba + bb + bc, keep);
    Scratch& s = scratch(m);
    samples_on(a, ba, m, s.work.data(), s.a.data());
    samples_on(b, bb, m, s.work.data(), s.b.data());
    const auto& kt = kernels::active();
    kt.cmul(s.a.data(), s.b.data(), s.a.data(), m);
    samples_on(c, bc, m, s.work.data(), s.b.data());
    kt.cmul_conj(s.a.data(), s.b.data(), s.c.data(), m);
    return coefficients_from(s.c.data(), s.work.data(), m, a.n_modes(), keep, real);
}

std::vector<cplx> to_physical(const FourierField& u) {
    const std::size_t n = u.n_modes();
    std::vector<cplx> work(n), out(n);
    samples_on(u, static_cast<int>(n / 2), n, work.data(), out.data());
    return out;
}

FourierField from_physical(const std::vector<cplx>& samples, bool real_valued) {
    const std::size_t n = samples.size();
    std::vector<cplx> work(n);
    FourierField out(n, false);
    fft::forward(samples.data(), work.data(), n);
    auto c = out.mutable_coeffs();
    const double scale = 1.0 / static_cast<double>(n);
    for (int k = out.k_min(); k <= out.k_max(); ++k) c[out.index(k)] = work[wrap(k, n)] * scale;
    if (real_valued) out.enforce_conjugate_symmetry();
    return out;
}

FourierField direct_convolution(const FourierField& a, const FourierField& b) {
    check_same(a, b);
    FourierField out(a.n_modes(), false);
    auto c = out.mutable_coeffs();
    for (int k1 = a.k_min(); k1 <= a.k_max(); ++k1) {
        for (int k2 = b.k_min(); k2 <= b.k_max(); ++k2) {
            const int k = k1 + k2;
            if (std::abs(k) > a.k_max()) continue;
            c[out.index(k)] += a.coeffs()[a.index(k1)] * b.coeffs()[b.index(k2)];
        }
    }
    if (a.real_valued() && b.real_valued()) out.enforce_conjugate_symmetry();
    return out;
}

}  // namespace reslab
