#include <doctest.h>

#include <cmath>

#include "reslab/errors.hpp"
#include "reslab/nls_schemes.hpp"
#include "reslab/spectral.hpp"
#include "reslab/trees.hpp"
#include "test_util.hpp"

using namespace reslab;
using reslab::test::random_field;

namespace {
const NlsKind all_kinds[] = {NlsKind::LieNls, NlsKind::StrangNls, NlsKind::ExpInt1Nls, NlsKind::Resonance1Nls};
}

TEST_CASE("nls scheme validation and names") {
    for (NlsKind k : all_kinds) CHECK(nls_kind_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(nls_kind_from_string("expint2"), InvalidArgument);
    CHECK_THROWS_AS(validate(NlsScheme{NlsKind::LieNls, 0.1, true}), Unsupported);
    CHECK_THROWS_AS(validate(NlsScheme{NlsKind::ExpInt1Nls, 0.0}), InvalidArgument);
    CHECK_NOTHROW(validate(NlsScheme{NlsKind::Resonance1Nls, 0.1, true}));
}

TEST_CASE("nls schemes map zero to zero") {
    for (NlsKind k : all_kinds) {
        CHECK(NlsStepper({k, 0.1}, 16).step(FourierField(16)).bandwidth() == -1);
    }
}

TEST_CASE("plane waves") {
    const cplx c(0.7, -0.4);
    FourierField u(16);
    u.set_coeff(0, c);
    const double tau = 0.3;
    const cplx exact = c * std::polar(1.0, -tau * std::norm(c));
    for (NlsKind k : {NlsKind::LieNls, NlsKind::StrangNls}) {
        const FourierField v = NlsStepper({k, tau}, 16).step(u);
        CHECK(std::abs(v.coeff(0) - exact) < 1e-15);
        CHECK(v.bandwidth() == 0);
    }
}

TEST_CASE("splitting steps are L2 isometries") {
    const FourierField u = random_field(1, 64, false, 1 << 20, 0.5);
    for (NlsKind k : {NlsKind::LieNls, NlsKind::StrangNls}) {
        FourierField v = u;
        NlsStepper st({k, 0.05}, 64);
        for (int n = 0; n < 20; ++n) {
            const FourierField w = st.step(v);
            CHECK(std::abs(l2_norm(w) - l2_norm(v)) <= 1e-12 * l2_norm(v));
            v = w;
        }
    }
}

TEST_CASE("first-order exponential integrator keeps phi1(0) = 1 at k = 0") {
    FourierField u(16);
    u.set_coeff(0, 0.5);
    const double tau = 0.01;
    // ExpInt1 on a constant: c - iτ|c|^2 c.
    const FourierField v = step_expint1_nls(u, {NlsKind::ExpInt1Nls, tau});
    CHECK(std::abs(v.coeff(0) - (0.5 - cplx(0.0, tau) * 0.125)) < 1e-16);
}

TEST_CASE("factorized resonance step equals the direct triple sum") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const FourierField u = random_field(10 + seed, 8, false);
        const double tau = 0.05 + 0.1 * seed;
        const FourierField a = step_resonance1_nls(u, {NlsKind::Resonance1Nls, tau});
        const FourierField b = resonance1_nls_direct(u, tau);
        CHECK(max_abs_diff(a, b) < 1e-11);
    }
}

TEST_CASE("nls resonance step equals the order-one tree series") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const FourierField v = random_field(30 + seed, 8, false, 3);
        const double tau = 0.1 + 0.03 * seed;
        const FourierField a = step_resonance1_nls(v, {NlsKind::Resonance1Nls, tau});
        const FourierField b = tree_series(Model::Nls, 1, v, tau, 3, true, 0);
        CHECK(max_abs_diff(a, b) < 1e-10);
    }
}

TEST_CASE("nls blow-up is reported") {
    FourierField u(32);
    for (int k = -15; k < 16; ++k) u.set_coeff(k, 1e120);
    CHECK_THROWS_AS(step_expint1_nls(u, {NlsKind::ExpInt1Nls, 0.5}), NonFiniteValue);
}
