#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "reslab/bourgain.hpp"
#include "reslab/errors.hpp"
#include "reslab/harness.hpp"
#include "reslab/json_io.hpp"
#include "reslab/simd_kernels.hpp"
#include "reslab/trees.hpp"

namespace fs = std::filesystem;
using namespace reslab;

namespace {

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open config " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
    }
    return config_from_json(j);
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
}

int cmd_converge(const std::string& config, const std::string& out_dir) {
    const ExperimentConfig cfg = load_config(config);
    const ConvergenceReport rep = run_convergence(cfg);
    const std::string json = report_to_json(rep).dump(2);
    if (out_dir.empty()) {
        std::cout << json << '\n';
    } else {
        fs::create_directories(out_dir);
        write_file(fs::path(out_dir) / "convergence.csv", to_csv(rep));
        write_file(fs::path(out_dir) / "report.json", json + "\n");
        std::cout << to_csv(rep);
    }
    return rep.fitted_order ? 0 : 3;
}

int cmd_evolve(const std::string& config, long dump_every, const std::string& out_dir) {
    const ExperimentConfig cfg = load_config(config);
    const EvolveResult res = evolve(cfg, dump_every);
    std::ostringstream snaps, diag;
    for (const auto& [step, field] : res.snapshots) {
        snaps << nlohmann::json{{"step", step}, {"field", field_to_json(field)}}.dump() << '\n';
    }
    diag << "step,time,mass_re,mass_im,l2\n";
    char buf[160];
    for (const auto& d : res.diagnostics) {
        std::snprintf(buf, sizeof buf, "%ld,%.17g,%.17g,%.17g,%.17g\n", d.step, d.time, d.mass_re, d.mass_im, d.l2);
        diag << buf;
    }
    if (out_dir.empty()) {
        std::cout << snaps.str();
        std::cerr << diag.str();
    } else {
        fs::create_directories(out_dir);
        write_file(fs::path(out_dir) / "snapshots.jsonl", snaps.str());
        write_file(fs::path(out_dir) / "diagnostics.csv", diag.str());
    }
    if (res.failure) {
        std::cerr << "error: " << *res.failure << '\n';
        return 2;
    }
    return 0;
}

int cmd_trees(const std::string& model_name, int order, bool coproduct) {
    const Model model = model_from_string(model_name);
    for (const auto& [name, tree] : enumerate_trees(model, order)) {
        std::cout << name << "  " << tree.serialize() << "  S=" << symmetry_factor(tree)
                  << "  integrals=" << tree.integral_count() << '\n';
        for (int v : tree.integral_vertices()) {
            std::cout << "    phase: " << phase_polynomial(tree, v).to_string() << '\n';
        }
        if (coproduct) {
            for (const auto& term : bck_coproduct(tree)) std::cout << "    " << term.to_string() << '\n';
        }
    }
    return 0;
}

std::vector<double> parse_taus(const std::string& list) {
    std::vector<double> taus;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            taus.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw InvalidArgument("bad tau value: " + item);
        }
    }
    return taus;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Resonance-based integrators for KdV and NLS: experiments and diagnostics"};
    app.require_subcommand(1);

    std::string config, out_dir;
    auto* converge = app.add_subcommand("converge", "Convergence study from a JSON config");
    converge->add_option("--config", config, "Experiment config (JSON)")->required();
    converge->add_option("--out", out_dir, "Directory for convergence.csv and report.json");

    long dump_every = 1;
    auto* evolve_cmd = app.add_subcommand("evolve", "Evolve with taus[0] and dump snapshots");
    evolve_cmd->add_option("--config", config, "Experiment config (JSON)")->required();
    evolve_cmd->add_option("--dump-every", dump_every, "Snapshot interval in steps")->required();
    evolve_cmd->add_option("--out", out_dir, "Directory for snapshots.jsonl and diagnostics.csv");

    std::string model = "kdv";
    int order = 2;
    bool coproduct = false;
    auto* trees = app.add_subcommand("trees", "Print the decorated tree catalog");
    trees->add_option("--model", model, "kdv or nls");
    trees->add_option("--order", order, "Maximal number of integrals (<= 2)");
    trees->add_flag("--coproduct", coproduct, "Also print the admissible-cut coproduct");

    std::string estimate, taus = "0.125,0.0625,0.03125,0.015625";
    int trials = 50;
    std::uint64_t seed = 7;
    auto* bourgain = app.add_subcommand("bourgain", "Empirical constants of the discrete Bourgain estimates");
    bourgain->add_option("--estimate", estimate, "Estimate id")->required();
    bourgain->add_option("--taus", taus, "Comma-separated step sizes");
    bourgain->add_option("--trials", trials, "Random inputs per tau (>= 10)");
    bourgain->add_option("--seed", seed, "Base seed");

    auto* info = app.add_subcommand("info", "Print the active SIMD kernel set");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*converge) return cmd_converge(config, out_dir);
        if (*evolve_cmd) return cmd_evolve(config, dump_every, out_dir);
        if (*trees) return cmd_trees(model, order, coproduct);
        if (*bourgain) {
            const ConstantReport rep = check_estimate(estimate, trials, parse_taus(taus), seed);
            std::cout << constant_report_to_json(rep).dump(2) << '\n';
            return 0;
        }
        if (*info) {
            std::cout << "kernels: " << kernels::isa_name(kernels::active().isa) << '\n';
            return 0;
        }
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
