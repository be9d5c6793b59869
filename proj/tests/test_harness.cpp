#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "reslab/errors.hpp"
#include "reslab/harness.hpp"
#include "reslab/json_io.hpp"
#include "reslab/spectral.hpp"
#include "test_util.hpp"

using namespace reslab;
namespace fs = std::filesystem;

namespace {

ExperimentConfig small_kdv(const std::string& scheme) {
    ExperimentConfig c;
    c.model = Model::Kdv;
    c.scheme = scheme;
    c.n_modes = 32;
    c.data.smooth = "cos";
    c.t_end = 0.5;
    c.taus = {0.1, 0.05, 0.025};
    c.substep_factor = 20;
    return c;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("fit_order") {
    CHECK(fit_order({{0.1, 1e-2}, {0.05, 2.5e-3}}) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit_order({{0.1, 3e-3}, {0.05, 3e-3}, {0.01, 3e-3}}) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> noise(-1.0, 1.0);
    std::vector<std::pair<double, double>> pts;
    for (double tau = 0.2; tau > 1e-4; tau /= 2) pts.emplace_back(tau, std::pow(tau, 1.5) * (1 + 0.01 * noise(gen)));
    CHECK(std::abs(fit_order(pts) - 1.5) < 0.05);
    CHECK_THROWS_AS(fit_order({{0.1, 0.0}, {0.05, 1.0}}), Degenerate);
    CHECK_THROWS_AS(fit_order({{0.1, NAN}, {0.05, 1.0}}), Degenerate);
    CHECK_THROWS_AS(fit_order({{0.1, 1.0}}), Degenerate);
    CHECK_THROWS_AS(fit_order({{0.1, 1.0}, {0.1, 2.0}}), Degenerate);
}

TEST_CASE("step alignment") {
    const auto [tau, steps] = align_step(0.3, 1.0);
    CHECK(steps == 4);
    CHECK(tau == 0.25);
    CHECK(align_step(0.0625, 1.0).second == 16);
    CHECK(align_step(0.0625, 1.0).first == 0.0625);
}

TEST_CASE("config validation") {
    ExperimentConfig c = small_kdv("resonance1");
    CHECK_NOTHROW(c.validate());
    c.taus = {0.1};
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c.taus = {0.05, 0.1};
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c = small_kdv("lie");
    c.model = Model::Nls;
    c.data.smooth = "cos_sin";
    c.filter = true;
    CHECK_THROWS_AS(c.validate(), Unsupported);
    c = small_kdv("nonsense");
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
    c = small_kdv("lie");
    c.data.smooth = "plane_wave";
    CHECK_THROWS_AS(c.validate(), InvalidArgument);
}

TEST_CASE("reference solution") {
    const FourierField v = smooth_profile("sech2", Model::Kdv, 64);
    CHECK(std::abs(v.coeff(0)) == 0.0);
    CHECK(max_abs_diff(reference_solution(Model::Kdv, v, 0.0, 0.01), v) == 0.0);
    const FourierField a = reference_solution(Model::Kdv, v, 0.5, 1e-4);
    const FourierField b = reference_solution(Model::Kdv, v, 0.5, 5e-5);
    CHECK(l2_distance(a, b) <= 1e-10);

    FourierField c(16);
    const cplx amp(0.8, 0.3);
    c.set_coeff(0, amp);
    const FourierField w = reference_solution(Model::Nls, c, 1.3, 1e-3);
    CHECK(std::abs(w.coeff(0) - amp * std::polar(1.0, -1.3 * std::norm(amp))) < 1e-10);

    // Filtered reference: modes above the cutoff move linearly.
    const FourierField r = rough_data(1.0, 3, 64, true);
    const double tau = 1.0 / 27;
    const FourierField f = reference_solution(Model::Kdv, r, 0.4, 1e-3, tau);
    const FourierField lin = linear_flow_kdv(r, 0.4);
    for (int k = 4; k < 32; ++k) CHECK(std::abs(f.coeff(k) - lin.coeff(k)) < 1e-15);
    CHECK(std::abs(f.coeff(2) - lin.coeff(2)) > 1e-6);
}

TEST_CASE("convergence runs") {
    const ConvergenceReport rep = run_convergence(small_kdv("strang"));
    REQUIRE(rep.rows.size() == 3);
    REQUIRE(rep.fitted_order.has_value());
    CHECK(*rep.fitted_order > 1.5);
    CHECK(rep.rows[0].steps == 5);
    CHECK(rep.rows[0].error > rep.rows[2].error);

    const std::string csv = to_csv(rep);
    CHECK(csv.rfind("tau,error,steps\n", 0) == 0);
    CHECK(csv == to_csv(run_convergence(small_kdv("strang"))));

    ExperimentConfig rough = small_kdv("expint1");
    rough.data = InitialData{"", 1.5, 1};
    rough.seeds = {1, 2, 3};
    rough.filter = true;
    const ConvergenceReport rr = run_convergence(rough);
    CHECK(rr.seed_orders.size() == 3);
    CHECK(rr.seed_rows.size() == 3);
    const auto j = report_to_json(rr);
    CHECK(j.at("seeds").size() == 3);
    CHECK(j.at("artifact_version") == kArtifactVersion);

    const auto same = run_order_reduction(small_kdv("resonance1"), small_kdv("resonance1"));
    CHECK(same.difference == 0.0);
    ExperimentConfig other = small_kdv("resonance1");
    other.t_end = 1.0;
    CHECK_THROWS_AS(run_order_reduction(small_kdv("expint1"), other), InvalidArgument);
}

TEST_CASE("failures are recorded per tau") {
    ExperimentConfig c = small_kdv("symmetric_midpoint");
    c.data = InitialData{"", 0.0, 1};
    c.n_modes = 256;
    c.taus = {0.5, 0.25};
    c.t_end = 0.5;
    const ConvergenceReport rep = run_convergence(c);
    bool any_failure = false;
    for (const auto& r : rep.rows) any_failure |= !r.failure.empty();
    CHECK(any_failure);
    CHECK_FALSE(rep.fitted_order.has_value());
}

TEST_CASE("evolve diagnostics") {
    ExperimentConfig c = small_kdv("resonance2");
    c.taus = {0.05, 0.01};
    const EvolveResult res = evolve(c, 10);
    CHECK(res.snapshots.size() == 2);
    CHECK(res.snapshots.back().first == 10);
    CHECK(res.diagnostics.size() == 11);
    for (const auto& d : res.diagnostics) CHECK(std::abs(d.mass_re - res.diagnostics[0].mass_re) <= 1e-13);
    CHECK(evolve(c, 3).snapshots.size() == 5);

    ExperimentConfig n = small_kdv("lie");
    n.model = Model::Nls;
    n.data.smooth = "cos_sin";
    const EvolveResult nr = evolve(n, 100);
    for (const auto& d : nr.diagnostics) CHECK(std::abs(d.l2 - nr.diagnostics[0].l2) <= 1e-12);
}

TEST_CASE("json round trips") {
    const FourierField u = test::random_field(3, 16, true);
    const FourierField back = field_from_json(field_to_json(u));
    CHECK(back.real_valued());
    CHECK(max_abs_diff(back, u) == 0.0);
    CHECK_THROWS_AS(field_from_json(nlohmann::json{{"n_modes", 8}, {"coeffs", {1, 2}}}), InvalidArgument);

    ExperimentConfig c = small_kdv("expint2");
    c.norm_space = NormSpace::Hs;
    c.norm_s = 1.5;
    const ExperimentConfig d = config_from_json(config_to_json(c));
    CHECK(config_to_json(d) == config_to_json(c));
    auto bad = config_to_json(c);
    bad["unknown"] = 1;
    CHECK_THROWS_AS(config_from_json(bad), InvalidArgument);
    bad = config_to_json(c);
    bad["norm"]["space"] = "H1";
    CHECK_THROWS_AS(config_from_json(bad), InvalidArgument);
}

TEST_CASE("command line tool") {
    const fs::path dir = fs::temp_directory_path() / "reslab_cli_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::ofstream(dir / "cfg.json") << config_to_json(small_kdv("resonance1")).dump();
    const std::string cli = RESLAB_CLI;
    const std::string converge = cli + " converge --config " + (dir / "cfg.json").string() + " --out " +
                                 (dir / "out").string() + " > " + (dir / "stdout.txt").string();
    REQUIRE(std::system(converge.c_str()) == 0);
    const std::string csv = slurp(dir / "out" / "convergence.csv");
    CHECK(csv.rfind("tau,error,steps\n", 0) == 0);
    const auto report = nlohmann::json::parse(slurp(dir / "out" / "report.json"));
    CHECK(report.contains("fitted_order"));
    CHECK(report.at("rows").size() == 3);

    const std::string ev = cli + " evolve --config " + (dir / "cfg.json").string() + " --dump-every 5 --out " +
                           (dir / "ev").string();
    REQUIRE(std::system(ev.c_str()) == 0);
    std::ifstream snaps(dir / "ev" / "snapshots.jsonl");
    int lines = 0;
    for (std::string line; std::getline(snaps, line);) {
        const auto j = nlohmann::json::parse(line);
        CHECK(field_from_json(j.at("field")).n_modes() == 32);
        ++lines;
    }
    CHECK(lines == 2);

    const std::string trees = cli + " trees --model kdv --order 2 --coproduct > " + (dir / "trees.txt").string();
    REQUIRE(std::system(trees.c_str()) == 0);
    CHECK(slurp(dir / "trees.txt").find("I(P[k1],P[k2])") != std::string::npos);

    const std::string bg = cli + " bourgain --estimate bourg1d --taus 0.125,0.0625 --trials 10 --seed 7 > " +
                           (dir / "bg.json").string();
    REQUIRE(std::system(bg.c_str()) == 0);
    const auto j = nlohmann::json::parse(slurp(dir / "bg.json"));
    CHECK(j.at("per_tau").size() == 2);
    CHECK(j.contains("uniformity_ratio"));

    CHECK(std::system((cli + " bourgain --estimate nope 2> /dev/null").c_str()) != 0);
    fs::remove_all(dir);
}
