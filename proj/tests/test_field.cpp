#include <doctest.h>

#include <cmath>
#include <numbers>

#include "reslab/errors.hpp"
#include "reslab/phi.hpp"
#include "reslab/spectral.hpp"
#include "test_util.hpp"

using namespace reslab;
using reslab::test::random_field;
constexpr double pi = std::numbers::pi;

TEST_CASE("field construction and symmetry") {
    CHECK_THROWS_AS(FourierField(6), InvalidArgument);
    CHECK_THROWS_AS(FourierField(4), InvalidArgument);
    FourierField u(8, true);
    u.set_coeff(2, cplx(1.0, 2.0));
    CHECK(u.coeff(-2) == cplx(1.0, -2.0));
    u.set_coeff(-4, cplx(3.0, 5.0));
    CHECK(u.coeff(-4) == cplx(3.0, 0.0));
    CHECK(u.is_conjugate_symmetric(0.0));
    CHECK_THROWS_AS(u.coeff(4), InvalidArgument);

    std::vector<cplx> bad(8, cplx(0.0, 0.0));
    bad[5] = 1.0;  // k = 1 without its mirror
    CHECK_THROWS_AS(FourierField(bad, true), InvalidArgument);
    CHECK_NOTHROW(FourierField(bad, false));
    CHECK(u.bandwidth() == 4);
    CHECK(FourierField(16).bandwidth() == -1);
}

TEST_CASE("field arithmetic keeps the real flag only when both are real") {
    const FourierField a = random_field(1, 16, true);
    const FourierField b = random_field(2, 16, false);
    CHECK((a + a).real_valued());
    CHECK_FALSE((a + b).real_valued());
    CHECK((2.0 * a).real_valued());
    CHECK_FALSE((cplx(0.0, 1.0) * a).real_valued());
    CHECK(l2_distance(a - a, FourierField(16)) == 0.0);
    CHECK_THROWS_AS(a + FourierField(32), InvalidArgument);
}

TEST_CASE("multipliers") {
    const FourierField u = random_field(3, 32, false);
    CHECK(max_abs_diff(apply_multiplier(u, multipliers::identity()), u) == 0.0);

    FourierField d(16);
    d.set_coeff(1, 1.0);
    CHECK(std::abs(dx(d).coeff(1) - cplx(0.0, 1.0)) < 1e-15);

    FourierField two(16, true);
    two.set_coeff(1, 1.0);
    const FourierField w = apply_multiplier(two, multipliers::kdv_propagator(pi));
    CHECK(std::abs(w.coeff(1) + 1.0) < 1e-15);
    CHECK(std::abs(w.coeff(-1) + 1.0) < 1e-15);
}

TEST_CASE("linear flows") {
    FourierField u(16);
    u.set_coeff(1, 1.0);
    u.set_coeff(2, 1.0);
    u.set_coeff(3, 1.0);
    CHECK(max_abs_diff(linear_flow_kdv(u, 0.0), u) == 0.0);
    CHECK(std::abs(linear_flow_kdv(u, 0.3).coeff(1) - std::polar(1.0, 0.3)) < 1e-15);
    CHECK(std::abs(linear_flow_kdv(u, pi / 8).coeff(2) + 1.0) < 1e-14);
    CHECK(std::abs(linear_flow_nls(u, pi).coeff(1) + 1.0) < 1e-15);
    CHECK(std::abs(linear_flow_nls(u, 2 * pi / 9).coeff(3) - 1.0) < 1e-14);
    CHECK(max_abs_diff(linear_flow_nls(u, 0.0), u) == 0.0);
}

TEST_CASE("inverse derivative") {
    FourierField c(8);
    c.set_coeff(0, 3.0);
    CHECK(inv_dx(c).bandwidth() == -1);
    FourierField one(8);
    one.set_coeff(1, 1.0);
    CHECK(std::abs(inv_dx(one).coeff(1) - cplx(0.0, -1.0)) < 1e-15);
    const FourierField u = random_field(4, 64, true, 31, 0.0, true);
    CHECK(max_abs_diff(dx(inv_dx(u)), u) < 1e-13);
}

TEST_CASE("sobolev norms") {
    CHECK(sobolev_norm(FourierField(8), 1.0) == 0.0);
    FourierField u(8, true);
    u.set_coeff(1, 1.0);
    CHECK(sobolev_norm(u, 0.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(sobolev_norm(u, 1.0) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
    const FourierField r = random_field(5, 64, false);
    CHECK(sobolev_norm(r, 0.5) <= sobolev_norm(r, 1.0));
}

TEST_CASE("rough data") {
    const FourierField a = rough_data(2.0, 1, 256, true);
    const FourierField b = rough_data(2.0, 1, 256, true);
    CHECK(max_abs_diff(a, b) == 0.0);
    CHECK(a.coeff(0) == cplx(0.0, 0.0));
    CHECK(rough_data(1.0, 9, 64, false).coeff(0) == cplx(0.0, 0.0));
    CHECK(std::isfinite(sobolev_norm(a, 2.0)));
    double prev = 0.0;
    for (std::size_t n : {256u, 512u, 1024u}) {
        const double s4 = sobolev_norm(rough_data(2.0, 1, n, true), 4.0);
        CHECK(s4 > prev);
        prev = s4;
    }
    // The H^2 norm stays bounded as N grows while H^4 roughly doubles per octave.
    CHECK(sobolev_norm(rough_data(2.0, 1, 4096, true), 2.0) < 2.0 * sobolev_norm(rough_data(2.0, 1, 256, true), 2.0));
    CHECK_THROWS_AS(rough_data(-1.0, 1, 64, true), InvalidArgument);
}

TEST_CASE("frequency cutoff") {
    CHECK(cutoff_mode(1.0 / 64) == 4);
    CHECK(cutoff_mode(1.0 / 63) == 3);
    CHECK(cutoff_mode(1.0) == 1);
    CHECK(cutoff_mode(4.0) == 1);
    FourierField u(16);
    u.set_coeff(1, 1.0);
    u.set_coeff(-1, 2.0);
    CHECK(max_abs_diff(project_cutoff(u, 2.0), u) == 0.0);
    FourierField v(32);
    v.set_coeff(4, 1.0);
    v.set_coeff(5, 1.0);
    const FourierField p = project_cutoff(v, 1.0 / 64);
    CHECK(p.coeff(4) == cplx(1.0, 0.0));
    CHECK(p.coeff(5) == cplx(0.0, 0.0));
    const FourierField r = random_field(6, 64, false);
    CHECK(max_abs_diff(project_cutoff(project_cutoff(r, 0.001), 0.001), project_cutoff(r, 0.001)) == 0.0);
}

TEST_CASE("physical grid transforms") {
    const FourierField u = random_field(7, 64, false);
    CHECK(max_abs_diff(from_physical(to_physical(u), false), u) < 1e-13);
    const FourierField r = random_field(8, 64, true);
    const FourierField back = from_physical(to_physical(r), true);
    CHECK(back.real_valued());
    CHECK(max_abs_diff(back, r) < 1e-13);

    FourierField e(16);
    e.set_coeff(1, 1.0);
    const auto x = to_physical(e);
    for (std::size_t j = 0; j < x.size(); ++j) {
        CHECK(std::abs(x[j] - std::polar(1.0, 2 * pi * j / 16.0)) < 1e-14);
    }
}

TEST_CASE("products agree with direct convolution") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const FourierField a = random_field(10 + seed, 64, false);
        const FourierField b = random_field(20 + seed, 64, false);
        CHECK(max_abs_diff(product(a, b), direct_convolution(a, b)) < 1e-12);
        CHECK(max_abs_diff(square(a), direct_convolution(a, a)) < 1e-12);
        // Band-limited inputs: the physical-grid product is exact too.
        const FourierField p = random_field(30 + seed, 64, false, 15);
        const FourierField q = random_field(40 + seed, 64, false, 15);
        auto xp = to_physical(p);
        const auto xq = to_physical(q);
        for (std::size_t j = 0; j < xp.size(); ++j) xp[j] *= xq[j];
        CHECK(max_abs_diff(from_physical(xp, false), direct_convolution(p, q)) < 1e-12);
    }
    const FourierField r = random_field(50, 32, true);
    const FourierField sq = square(r);
    CHECK(sq.real_valued());
    CHECK(max_abs_diff(sq, direct_convolution(r, r)) < 1e-12);
}

TEST_CASE("cubic products") {
    const FourierField a = random_field(60, 32, false, 6);
    const FourierField b = random_field(61, 32, false, 6);
    const FourierField c = random_field(62, 32, false, 6);
    FourierField cc = c;
    auto m = cc.mutable_coeffs();
    for (int k = c.k_min(); k <= c.k_max(); ++k) {
        m[c.index(k)] = -k >= c.k_min() && -k <= c.k_max() ? std::conj(c.coeff(-k)) : cplx(0.0, 0.0);
    }
    const FourierField expect = direct_convolution(direct_convolution(a, b), cc);
    CHECK(max_abs_diff(product_conj(a, b, c), expect) < 1e-12);
    const FourierField ac = [&] {
        FourierField t = a;
        auto mm = t.mutable_coeffs();
        for (int k = a.k_min(); k <= a.k_max(); ++k) {
            mm[a.index(k)] = -k >= a.k_min() && -k <= a.k_max() ? std::conj(a.coeff(-k)) : cplx(0.0, 0.0);
        }
        return t;
    }();
    CHECK(max_abs_diff(cubic(a), direct_convolution(direct_convolution(a, a), ac)) < 1e-12);
}

TEST_CASE("phi functions") {
    CHECK(phi1(0.0) == cplx(1.0, 0.0));
    CHECK(std::abs(phi2(0.0) - 0.5) < 1e-16);
    for (double r : {1e-8, 1e-3, 0.5, 0.99, 1.01, 3.0, 40.0}) {
        for (double ang : {0.0, pi / 2, pi, 2.0}) {
            const cplx z = std::polar(r, ang);
            // Expansion-free references in long double.
            const std::complex<long double> zl(z.real(), z.imag());
            const auto e = std::exp(zl);
            const auto p1 = r < 1e-3 ? std::complex<long double>(1) + zl / 2.0L + zl * zl / 6.0L : (e - 1.0L) / zl;
            const auto p2 = r < 1e-3 ? std::complex<long double>(0.5L) + zl / 6.0L + zl * zl / 24.0L
                                     : (e - 1.0L - zl) / (zl * zl);
            CHECK(std::abs(phi1(z) - cplx(p1)) <= 1e-13 * std::max(1.0, std::abs(cplx(p1))));
            CHECK(std::abs(phi2(z) - cplx(p2)) <= 1e-12 * std::max(1.0, std::abs(cplx(p2))));
        }
    }
}
