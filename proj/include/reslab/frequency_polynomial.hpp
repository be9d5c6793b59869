#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace reslab {

/// Integer linear form Σ a_i k_i over leaf frequencies.
using LinearForm = std::vector<int>;

/// Multivariate polynomial with integer coefficients in k_1..k_n.
class FrequencyPolynomial {
public:
    using Exponents = std::vector<int>;

    explicit FrequencyPolynomial(std::size_t n_vars = 0) : n_vars_(n_vars) {}

    static FrequencyPolynomial constant(std::size_t n_vars, std::int64_t c);
    static FrequencyPolynomial variable(std::size_t n_vars, std::size_t i);
    static FrequencyPolynomial linear(const LinearForm& form);

    std::size_t n_vars() const noexcept { return n_vars_; }
    const std::map<Exponents, std::int64_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// Largest exponent of a single variable over all monomials.
    int max_variable_degree() const;
    /// True if all monomials have the same total degree.
    bool is_homogeneous() const;

    std::int64_t evaluate(std::span<const std::int64_t> k) const;
    double evaluate(std::span<const double> k) const;

    FrequencyPolynomial& operator+=(const FrequencyPolynomial& other);
    FrequencyPolynomial& operator-=(const FrequencyPolynomial& other);
    FrequencyPolynomial operator-() const;
    friend FrequencyPolynomial operator+(FrequencyPolynomial a, const FrequencyPolynomial& b) { return a += b; }
    friend FrequencyPolynomial operator-(FrequencyPolynomial a, const FrequencyPolynomial& b) { return a -= b; }
    friend FrequencyPolynomial operator*(const FrequencyPolynomial& a, const FrequencyPolynomial& b);
    friend FrequencyPolynomial operator*(std::int64_t s, const FrequencyPolynomial& a);
    FrequencyPolynomial pow(int e) const;

    bool operator==(const FrequencyPolynomial& other) const = default;

    /// "3k1^2k2 + 3k1k2^2"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void add_term(const Exponents& e, std::int64_t c);

    std::size_t n_vars_;
    std::map<Exponents, std::int64_t> terms_;
};

/// "k1+k2", "-k1+k2+k3", "0".
std::string linear_form_to_string(const LinearForm& form);

}  // namespace reslab
