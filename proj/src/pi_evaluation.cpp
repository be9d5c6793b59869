#include <cmath>
#include <cstdio>

#include "reslab/errors.hpp"
#include "reslab/trees.hpp"

namespace reslab {
namespace {

const cplx I(0.0, 1.0);

// Coefficient algebra with frequencies fixed: plain complex numbers.
struct NumericAlgebra {
    std::span<const std::int64_t> freqs;
    using Coeff = cplx;

    Coeff one() const { return 1.0; }
    Coeff mul(const Coeff& a, const Coeff& b) const { return a * b; }
    Coeff scale(const Coeff& a, cplx s) const { return a * s; }
    Coeff times_poly(const Coeff& a, const FrequencyPolynomial& p) const {
        return a * static_cast<double>(p.evaluate(freqs));
    }
    Coeff div_poly(const Coeff& a, const FrequencyPolynomial& p) const {
        return a / static_cast<double>(p.evaluate(freqs));
    }
    bool vanishes(const FrequencyPolynomial& p) const { return p.evaluate(freqs) == 0; }
};

struct SymbolicCoeff {
    cplx scalar;
    FrequencyPolynomial numerator;
    std::vector<FrequencyPolynomial> denominators;
};

// Coefficient algebra over the polynomial ring: rational functions kept as
// numerator and a list of denominator factors.
struct SymbolicAlgebra {
    std::size_t n_vars;
    using Coeff = SymbolicCoeff;

    Coeff one() const { return {1.0, FrequencyPolynomial::constant(n_vars, 1), {}}; }
    Coeff mul(const Coeff& a, const Coeff& b) const {
        Coeff c{a.scalar * b.scalar, a.numerator * b.numerator, a.denominators};
        c.denominators.insert(c.denominators.end(), b.denominators.begin(), b.denominators.end());
        return c;
    }
    Coeff scale(const Coeff& a, cplx s) const { return {a.scalar * s, a.numerator, a.denominators}; }
    Coeff times_poly(const Coeff& a, const FrequencyPolynomial& p) const {
        return {a.scalar, a.numerator * p, a.denominators};
    }
    Coeff div_poly(const Coeff& a, const FrequencyPolynomial& p) const {
        Coeff c = a;
        c.denominators.push_back(p);
        return c;
    }
    bool vanishes(const FrequencyPolynomial& p) const { return p.is_zero(); }
};

template <class Alg>
struct Term {
    typename Alg::Coeff coeff;
    int power;
    FrequencyPolynomial phase;
};

struct Mode {
    bool discretized = false;
    bool classical = false;
    int budget = 0;
};

double factorial(int n) {
    double f = 1.0;
    for (int j = 2; j <= n; ++j) f *= j;
    return f;
}

cplx ipow(cplx z, int e) {
    cplx r = 1.0;
    for (int j = 0; j < e; ++j) r *= z;
    return r;
}

// Recursive evaluation of iterated oscillatory integrals as sums of
// coeff * t^power * e^{i t phase}.
template <class Alg>
class Engine {
public:
    Engine(const DecoratedTree& t, const Alg& alg, Mode mode) : t_(t), alg_(alg), mode_(mode) {}

    std::vector<Term<Alg>> run() { return edge_value(t_.node(0).children.at(0)); }

    int max_discarded_degree() const { return max_discarded_; }

private:
    FrequencyPolynomial kappa(int x) const { return FrequencyPolynomial::linear(t_.frequency(x)); }

    FrequencyPolynomial propagator_phase(int x) const {
        if (t_.model() == Model::Kdv) return kappa(x).pow(3);
        const FrequencyPolynomial p = kappa(x).pow(2);
        return t_.node(x).conjugate ? p : -p;
    }

    FrequencyPolynomial integral_phase(int x) const { return -propagator_phase(x); }

    std::vector<Term<Alg>> edge_value(int x) {
        const TreeNode& n = t_.node(x);
        if (n.edge == EdgeKind::Propagator) {
            std::vector<Term<Alg>> inner;
            if (n.children.empty()) {
                inner.push_back({alg_.one(), 0, FrequencyPolynomial(t_.n_vars())});
            } else {
                inner = edge_value(n.children[0]);
            }
            const FrequencyPolynomial ph = propagator_phase(x);
            for (auto& term : inner) term.phase += ph;
            return inner;
        }
        std::vector<Term<Alg>> integrand{{alg_.one(), 0, integral_phase(x)}};
        for (int c : n.children) integrand = multiply(integrand, edge_value(c));
        std::vector<Term<Alg>> out;
        for (const auto& term : integrand) {
            for (auto& r : integrate(term)) out.push_back(std::move(r));
        }
        for (auto& term : out) term.coeff = prefactor(x, term.coeff);
        return out;
    }

    typename Alg::Coeff prefactor(int x, const typename Alg::Coeff& c) const {
        if (t_.model() == Model::Kdv) return alg_.scale(alg_.times_poly(c, kappa(x)), I);
        return alg_.scale(c, t_.node(x).conjugate ? I : -I);
    }

    std::vector<Term<Alg>> multiply(const std::vector<Term<Alg>>& a, const std::vector<Term<Alg>>& b) const {
        std::vector<Term<Alg>> out;
        out.reserve(a.size() * b.size());
        for (const auto& x : a) {
            for (const auto& y : b) out.push_back({alg_.mul(x.coeff, y.coeff), x.power + y.power, x.phase + y.phase});
        }
        return out;
    }

    std::vector<Term<Alg>> integrate(const Term<Alg>& term) {
        if (!mode_.discretized) return integrate_exact(term.coeff, term.power, term.phase);
        FrequencyPolynomial exact(t_.n_vars()), taylor(t_.n_vars());
        if (mode_.classical) {
            taylor = term.phase;
        } else if (t_.model() == Model::Kdv && t_.integral_count() == 1) {
            // Single KdV integral: the phase factorizes and is integrated exactly.
            exact = term.phase;
        } else {
            auto [dom, low] = resonance_split(term.phase, t_.model());
            exact = std::move(dom);
            taylor = std::move(low);
        }
        if (!taylor.is_zero()) {
            max_discarded_ = std::max(max_discarded_, (mode_.budget + 1) * taylor.degree());
        }
        std::vector<Term<Alg>> out;
        FrequencyPolynomial rpow = FrequencyPolynomial::constant(t_.n_vars(), 1);
        for (int j = 0; j <= mode_.budget; ++j) {
            if (j > 0 && taylor.is_zero()) break;
            const auto c = alg_.scale(alg_.times_poly(term.coeff, rpow), ipow(I, j) / factorial(j));
            for (auto& r : integrate_exact(c, term.power + j, exact)) out.push_back(std::move(r));
            rpow = rpow * taylor;
        }
        return out;
    }

    // ∫_0^t s^p e^{i s E} ds in closed form.
    std::vector<Term<Alg>> integrate_exact(const typename Alg::Coeff& c, int p, const FrequencyPolynomial& E) const {
        const std::size_t nv = t_.n_vars();
        if (alg_.vanishes(E)) return {{alg_.scale(c, 1.0 / (p + 1)), p + 1, FrequencyPolynomial(nv)}};
        std::vector<Term<Alg>> out;
        const cplx minus_i(0.0, -1.0);
        for (int j = 0; j <= p; ++j) {
            const int e = p - j + 1;
            const double sign = ((p - j) % 2 == 0) ? 1.0 : -1.0;
            auto cj = alg_.scale(c, sign * factorial(p) / factorial(j) * ipow(minus_i, e));
            for (int q = 0; q < e; ++q) cj = alg_.div_poly(cj, E);
            out.push_back({cj, j, E});
        }
        const double sign = (p % 2 == 0) ? 1.0 : -1.0;
        auto c0 = alg_.scale(c, -sign * factorial(p) * ipow(minus_i, p + 1));
        for (int q = 0; q < p + 1; ++q) c0 = alg_.div_poly(c0, E);
        out.push_back({c0, 0, FrequencyPolynomial(nv)});
        return out;
    }

    const DecoratedTree& t_;
    const Alg& alg_;
    Mode mode_;
    int max_discarded_ = 0;
};

cplx sum_numeric(const std::vector<Term<NumericAlgebra>>& terms, std::span<const std::int64_t> freqs, double time) {
    cplx total = 0.0;
    for (const auto& term : terms) {
        const double w = static_cast<double>(term.phase.evaluate(freqs));
        total += term.coeff * std::pow(time, term.power) * std::polar(1.0, time * w);
    }
    return total;
}

void check_order(const DecoratedTree& t, int r) {
    if (r > 2) throw Unsupported("discretization is implemented for r <= 2, got r = " + std::to_string(r));
    if (r < t.integral_count()) throw InvalidArgument("tree has more integrals than the requested order");
}

int run_degree(const DecoratedTree& t, int r, bool classical) {
    SymbolicAlgebra alg{t.n_vars()};
    Engine<SymbolicAlgebra> eng(t, alg, Mode{true, classical, r - t.integral_count()});
    eng.run();
    const int d = eng.max_discarded_degree();
    if (d == 0) return 0;
    const int prefactor = t.model() == Model::Kdv ? t.integral_count() : 0;
    return d + prefactor;
}

std::string format_scalar(cplx z) {
    char buf[96];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.15g", z.real());
    } else if (z.real() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.15gi", z.imag());
    } else {
        std::snprintf(buf, sizeof buf, "(%.15g%+.15gi)", z.real(), z.imag());
    }
    return buf;
}

}  // namespace

cplx evaluate_pi(const DecoratedTree& t, std::span<const std::int64_t> freqs, double time) {
    if (freqs.size() != t.n_vars()) throw InvalidArgument("wrong number of frequencies for this tree");
    NumericAlgebra alg{freqs};
    Engine<NumericAlgebra> eng(t, alg, Mode{});
    return sum_numeric(eng.run(), freqs, time);
}

int classical_threshold(const DecoratedTree& t, int r) {
    check_order(t, r);
    return run_degree(t, r, true);
}

int local_error_degree(const DecoratedTree& t, int n, int r) {
    check_order(t, r);
    const bool classical = n >= run_degree(t, r, true);
    return run_degree(t, r, classical);
}

cplx evaluate_pi_discretized(const DecoratedTree& t, std::span<const std::int64_t> freqs, double time, int n,
                             int r) {
    check_order(t, r);
    if (freqs.size() != t.n_vars()) throw InvalidArgument("wrong number of frequencies for this tree");
    const bool classical = n >= run_degree(t, r, true);
    NumericAlgebra alg{freqs};
    Engine<NumericAlgebra> eng(t, alg, Mode{true, classical, r - t.integral_count()});
    return sum_numeric(eng.run(), freqs, time);
}

std::vector<SymbolicTerm> symbolic_pi(const DecoratedTree& t, bool discretized, int n, int r) {
    Mode mode{};
    if (discretized) {
        check_order(t, r);
        mode = Mode{true, n >= run_degree(t, r, true), r - t.integral_count()};
    }
    SymbolicAlgebra alg{t.n_vars()};
    Engine<SymbolicAlgebra> eng(t, alg, mode);
    std::vector<SymbolicTerm> out;
    for (auto& term : eng.run()) {
        out.push_back({term.coeff.scalar, std::move(term.coeff.numerator), std::move(term.coeff.denominators),
                       term.power, std::move(term.phase)});
    }
    return out;
}

cplx SymbolicTerm::evaluate(std::span<const std::int64_t> freqs, double time) const {
    cplx v = scalar * static_cast<double>(numerator.evaluate(freqs));
    for (const auto& d : denominators) v /= static_cast<double>(d.evaluate(freqs));
    return v * std::pow(time, power) * std::polar(1.0, time * static_cast<double>(phase.evaluate(freqs)));
}

std::string SymbolicTerm::to_string() const {
    std::string s = format_scalar(scalar) + " * (" + numerator.to_string() + ")";
    for (const auto& d : denominators) s += " / (" + d.to_string() + ")";
    if (power > 0) s += " * t^" + std::to_string(power);
    if (!phase.is_zero()) s += " * exp(i t (" + phase.to_string() + "))";
    return s;
}

}  // namespace reslab
