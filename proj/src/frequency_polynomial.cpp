#include "reslab/frequency_polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "reslab/errors.hpp"

namespace reslab {

FrequencyPolynomial FrequencyPolynomial::constant(std::size_t n_vars, std::int64_t c) {
    FrequencyPolynomial p(n_vars);
    p.add_term(Exponents(n_vars, 0), c);
    return p;
}

FrequencyPolynomial FrequencyPolynomial::variable(std::size_t n_vars, std::size_t i) {
    if (i >= n_vars) throw InvalidArgument("variable index out of range");
    FrequencyPolynomial p(n_vars);
    Exponents e(n_vars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

FrequencyPolynomial FrequencyPolynomial::linear(const LinearForm& form) {
    FrequencyPolynomial p(form.size());
    for (std::size_t i = 0; i < form.size(); ++i) {
        if (form[i] == 0) continue;
        Exponents e(form.size(), 0);
        e[i] = 1;
        p.add_term(e, form[i]);
    }
    return p;
}

void FrequencyPolynomial::add_term(const Exponents& e, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int FrequencyPolynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

int FrequencyPolynomial::max_variable_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) {
        for (int x : e) d = std::max(d, x);
    }
    return d;
}

bool FrequencyPolynomial::is_homogeneous() const {
    const int d = degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
        return std::accumulate(t.first.begin(), t.first.end(), 0) == d;
    });
}

std::int64_t FrequencyPolynomial::evaluate(std::span<const std::int64_t> k) const {
    if (k.size() != n_vars_) throw InvalidArgument("wrong number of frequencies");
    std::int64_t total = 0;
    for (const auto& [e, c] : terms_) {
        std::int64_t m = c;
        for (std::size_t i = 0; i < n_vars_; ++i) {
            for (int j = 0; j < e[i]; ++j) m *= k[i];
        }
        total += m;
    }
    return total;
}

double FrequencyPolynomial::evaluate(std::span<const double> k) const {
    if (k.size() != n_vars_) throw InvalidArgument("wrong number of frequencies");
    double total = 0.0;
    for (const auto& [e, c] : terms_) {
        double m = static_cast<double>(c);
        for (std::size_t i = 0; i < n_vars_; ++i) {
            for (int j = 0; j < e[i]; ++j) m *= k[i];
        }
        total += m;
    }
    return total;
}

FrequencyPolynomial& FrequencyPolynomial::operator+=(const FrequencyPolynomial& other) {
    if (other.n_vars_ != n_vars_) throw InvalidArgument("polynomials over different variable sets");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

FrequencyPolynomial& FrequencyPolynomial::operator-=(const FrequencyPolynomial& other) {
    if (other.n_vars_ != n_vars_) throw InvalidArgument("polynomials over different variable sets");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

FrequencyPolynomial FrequencyPolynomial::operator-() const { return -1 * *this; }

FrequencyPolynomial operator*(const FrequencyPolynomial& a, const FrequencyPolynomial& b) {
    if (a.n_vars_ != b.n_vars_) throw InvalidArgument("polynomials over different variable sets");
    FrequencyPolynomial p(a.n_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            FrequencyPolynomial::Exponents e(a.n_vars_);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

FrequencyPolynomial operator*(std::int64_t s, const FrequencyPolynomial& a) {
    FrequencyPolynomial p(a.n_vars_);
    for (const auto& [e, c] : a.terms_) p.add_term(e, s * c);
    return p;
}

FrequencyPolynomial FrequencyPolynomial::pow(int e) const {
    if (e < 0) throw InvalidArgument("negative power");
    FrequencyPolynomial p = constant(n_vars_, 1);
    for (int i = 0; i < e; ++i) p = p * *this;
    return p;
}

std::string FrequencyPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest total degree first, then lexicographically larger exponents first.
    std::vector<std::pair<Exponents, std::int64_t>> sorted(terms_.begin(), terms_.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
        const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    bool first = true;
    for (const auto& [e, c] : sorted) {
        const bool constant_term = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (mag != 1 || constant_term) out += std::to_string(mag);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += "k" + std::to_string(i + 1);
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

std::string linear_form_to_string(const LinearForm& form) {
    std::string out;
    for (std::size_t i = 0; i < form.size(); ++i) {
        const int a = form[i];
        if (a == 0) continue;
        if (a < 0) {
            out += "-";
        } else if (!out.empty()) {
            out += "+";
        }
        if (a != 1 && a != -1) out += std::to_string(a < 0 ? -a : a);
        out += "k" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

}  // namespace reslab
