#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "reslab/bourgain.hpp"
#include "reslab/errors.hpp"
#include "reslab/spectral.hpp"
#include "test_util.hpp"

using namespace reslab;
using reslab::test::random_field;
constexpr double pi = std::numbers::pi;

namespace {

TimeSequence random_sequence(std::uint64_t seed, std::size_t steps, double tau, std::size_t n = 16,
                             bool zero_mean = true) {
    TimeSequence s{{}, tau};
    for (std::size_t m = 0; m < steps; ++m) s.fields.push_back(random_field(seed * 1000 + m, n, false, 1 << 20, 0.3, zero_mean));
    return s;
}

double parseval(const TimeSequence& s) {
    double acc = 0.0;
    for (const auto& f : s.fields) acc += std::pow(l2_norm(f), 2);
    return std::sqrt(s.tau * acc);
}

}  // namespace

TEST_CASE("space-time transform of short sequences") {
    FourierField one(8);
    one.set_coeff(1, 1.0);
    const double tau = 0.25;
    const SpacetimeGrid g = spacetime_transform(TimeSequence{{one}, tau});
    CHECK(g.n_sigma == 64);
    for (std::size_t j = 0; j < g.n_sigma; ++j) CHECK(std::abs(g.at(j, 1) - tau) < 1e-15);
    const SpacetimeGrid h = spacetime_transform(TimeSequence{{one, one}, tau});
    for (std::size_t j = 0; j < h.n_sigma; ++j) {
        const cplx expect = tau * (1.0 + std::polar(1.0, tau * h.sigma(j)));
        CHECK(std::abs(h.at(j, 1) - expect) < 1e-14);
    }
    CHECK(h.sigma(0) == doctest::Approx(-pi / tau));
    CHECK_THROWS_AS(spacetime_transform(TimeSequence{{one, one}, tau}, 7), InvalidArgument);
    CHECK_THROWS_AS(spacetime_transform(TimeSequence{{}, tau}), InvalidArgument);
}

TEST_CASE("Parseval identity") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const TimeSequence s = random_sequence(seed, 5 + seed * 3, 1.0 / (4 + seed));
        CHECK(xsb_norm(s, {0.0, 0.0, Model::Kdv, 0}) == doctest::Approx(parseval(s)).epsilon(1e-10));
        CHECK(xsb_norm(s, {0.0, 0.0, Model::Nls, 1024}) == doctest::Approx(parseval(s)).epsilon(1e-10));
    }
}

TEST_CASE("d_tau envelope") {
    CHECK(d_tau(0.0, 0.3) == cplx(0.0, 0.0));
    CHECK_THROWS_AS(d_tau(1.0, 0.0), InvalidArgument);
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> theta(-pi, pi), logtau(-8.0, 0.0);
    for (int i = 0; i < 100000; ++i) {
        const double tau = std::exp(logtau(gen));
        const double sigma = theta(gen) / tau;
        const double d = std::abs(d_tau(sigma, tau));
        if (sigma != 0.0) {
            CHECK_MESSAGE(d / std::abs(sigma) >= 2.0 / pi - 1e-14, sigma);
            CHECK_MESSAGE(d / std::abs(sigma) <= 1.0 + 1e-14, sigma);
        }
        CHECK(d <= 2.0 / tau + 1e-12);
        CHECK(std::abs(d_tau(sigma + 2 * pi / tau, tau) - d_tau(sigma, tau)) < 1e-9 / tau);
    }
}

TEST_CASE("norm properties") {
    const TimeSequence a = random_sequence(3, 12, 0.125);
    const TimeSequence b = random_sequence(4, 12, 0.125);
    TimeSequence sum{{}, 0.125}, scaled{{}, 0.125}, zero{{}, 0.125};
    for (std::size_t m = 0; m < 12; ++m) {
        sum.fields.push_back(a.fields[m] + b.fields[m]);
        scaled.fields.push_back(-2.5 * a.fields[m]);
        zero.fields.push_back(FourierField(16));
    }
    for (double bb : {-0.5, 0.0, 0.4, 0.6}) {
        const BourgainParams p{0.5, bb, Model::Kdv, 0};
        CHECK(xsb_norm(scaled, p) == doctest::Approx(2.5 * xsb_norm(a, p)).epsilon(1e-12));
        CHECK(xsb_norm(sum, p) <= xsb_norm(a, p) + xsb_norm(b, p) + 1e-12);
        CHECK(xsb_norm(zero, p) == 0.0);
        CHECK(xsb_norm(a, {0.0, bb, Model::Kdv, 0}) <= xsb_norm(a, p));
        CHECK(xsb_norm(a, {0.5, bb - 0.1, Model::Kdv, 0}) <= xsb_norm(a, p));
    }
    CHECK(xs_norm(scaled, 0.0) == doctest::Approx(2.5 * xs_norm(a, 0.0)).epsilon(1e-12));
    CHECK(xs_norm(sum, 0.0) <= xs_norm(a, 0.0) + xs_norm(b, 0.0) + 1e-12);
    CHECK(ys_norm(sum, 0.0) <= ys_norm(a, 0.0) + ys_norm(b, 0.0) + 1e-12);
    CHECK(xs_norm(zero, 0.0) == 0.0);
    CHECK(ys_norm(zero, 0.0) == 0.0);
    CHECK(xs_norm(a, 1.0) >= xsb_norm(a, {1.0, 0.5, Model::Kdv, 0}));
    CHECK(xs_norm(a, 0.0) <= xs_norm(a, 1.0));
}

TEST_CASE("X^s norms need zero-mean sequences") {
    const TimeSequence s = random_sequence(5, 8, 0.25, 16, false);
    CHECK_THROWS_AS(xs_norm(s, 0.0), NonZeroMeanMode);
    CHECK_NOTHROW(ys_norm(s, 0.0));
}

TEST_CASE("discrete Duhamel sums") {
    const double tau = 0.1;
    TimeSequence zero{std::vector<FourierField>(6, FourierField(16)), tau};
    for (const auto& f : duhamel_sum(zero).fields) CHECK(f.bandwidth() == -1);

    const FourierField f = random_field(6, 16, false);
    TimeSequence impulse{std::vector<FourierField>(10, FourierField(16)), tau};
    impulse.fields[0] = f;
    std::vector<double> window(10);
    for (std::size_t n = 0; n < 10; ++n) window[n] = bump(n * tau);
    const TimeSequence U = duhamel_sum(impulse, window);
    for (std::size_t n = 0; n < 10; ++n) {
        const FourierField expect = (bump(n * tau) * tau) * linear_flow_kdv(f, n * tau);
        CHECK(max_abs_diff(U.fields[n], expect) < 1e-14);
    }
    const TimeSequence V = duhamel_sum(impulse, window, Model::Nls);
    CHECK(max_abs_diff(V.fields[3], (bump(0.3) * tau) * linear_flow_nls(f, 0.3)) < 1e-14);
    CHECK(bump(0.0) == 1.0);
    CHECK(bump(1.0) == 0.0);
    CHECK(bump(-1.5) == 0.0);
}

TEST_CASE("estimate checks reject bad input") {
    CHECK_THROWS_AS(check_estimate("bourg9", 20, {0.125}, 1), InvalidArgument);
    CHECK_THROWS_AS(check_estimate("bourg1d", 5, {0.125}, 1), InvalidArgument);
    const ConstantReport r = check_estimate("bourg1d", 12, {0.125, 0.0625}, 3);
    CHECK(r.per_tau.size() == 2);
    CHECK(r.uniformity_ratio >= 1.0);
    const ConstantReport again = check_estimate("bourg1d", 12, {0.125, 0.0625}, 3);
    CHECK(again.per_tau[1].best_constant == r.per_tau[1].best_constant);
}
