#include "reslab/json_io.hpp"

#include <cmath>
#include <set>

#include "reslab/errors.hpp"

namespace reslab {

using nlohmann::json;

namespace {

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json field_to_json(const FourierField& u) {
    json coeffs = json::array();
    for (const cplx& c : u.coeffs()) coeffs.push_back({c.real(), c.imag()});
    return {{"n_modes", u.n_modes()}, {"real", u.real_valued()}, {"coeffs", coeffs}};
}

FourierField field_from_json(const json& j) {
    try {
        const auto n = j.at("n_modes").get<std::size_t>();
        const bool real = j.value("real", false);
        const auto& arr = j.at("coeffs");
        if (!arr.is_array() || arr.size() != n) throw InvalidArgument("coeffs must hold n_modes entries");
        std::vector<cplx> c;
        c.reserve(n);
        for (const auto& e : arr) {
            if (!e.is_array() || e.size() != 2) throw InvalidArgument("each coefficient is [re, im]");
            c.emplace_back(e[0].get<double>(), e[1].get<double>());
        }
        return FourierField(std::move(c), real);
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed field JSON: ") + e.what());
    }
}

json config_to_json(const ExperimentConfig& cfg) {
    json data;
    if (cfg.data.rough()) {
        data = {{"rough", {{"sigma", cfg.data.sigma}, {"seed", cfg.data.seed}}}};
    } else {
        data = {{"smooth", cfg.data.smooth}};
    }
    json j = {{"model", to_string(cfg.model)},
              {"scheme", cfg.scheme},
              {"n_modes", cfg.n_modes},
              {"data", data},
              {"t_end", cfg.t_end},
              {"taus", cfg.taus},
              {"norm", {{"space", cfg.norm_space == NormSpace::L2 ? "L2" : "Hs"}, {"s", cfg.norm_s}}},
              {"filter", cfg.filter},
              {"reference", {{"kind", "RK4Fourier"}, {"substep_factor", cfg.substep_factor}}}};
    if (!cfg.seeds.empty()) j["seeds"] = cfg.seeds;
    return j;
}

ExperimentConfig config_from_json(const json& j) {
    static const std::set<std::string> known = {"model", "scheme", "n_modes", "data", "t_end", "taus",
                                                "norm", "filter", "reference", "seeds"};
    if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) throw InvalidArgument("unknown config key: " + key);
    }
    ExperimentConfig cfg;
    try {
        cfg.model = model_from_string(j.at("model").get<std::string>());
        cfg.scheme = j.at("scheme").get<std::string>();
        cfg.n_modes = j.value("n_modes", cfg.n_modes);
        if (j.contains("data")) {
            const auto& d = j.at("data");
            if (d.contains("smooth")) {
                cfg.data.smooth = d.at("smooth").get<std::string>();
            } else if (d.contains("rough")) {
                cfg.data.smooth.clear();
                cfg.data.sigma = d.at("rough").at("sigma").get<double>();
                cfg.data.seed = d.at("rough").value("seed", std::uint64_t{1});
            } else {
                throw InvalidArgument("data needs a 'smooth' or 'rough' entry");
            }
        }
        cfg.t_end = j.value("t_end", cfg.t_end);
        cfg.taus = j.at("taus").get<std::vector<double>>();
        if (j.contains("norm")) {
            const auto space = j.at("norm").value("space", std::string("L2"));
            if (space == "L2") {
                cfg.norm_space = NormSpace::L2;
            } else if (space == "Hs") {
                cfg.norm_space = NormSpace::Hs;
            } else {
                throw InvalidArgument("norm.space must be L2 or Hs");
            }
            cfg.norm_s = j.at("norm").value("s", 0.0);
        }
        cfg.filter = j.value("filter", cfg.filter);
        if (j.contains("reference")) {
            const auto kind = j.at("reference").value("kind", std::string("RK4Fourier"));
            if (kind != "RK4Fourier") throw InvalidArgument("reference.kind must be RK4Fourier");
            cfg.substep_factor = j.at("reference").value("substep_factor", cfg.substep_factor);
        }
        if (j.contains("seeds")) cfg.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

json report_to_json(const ConvergenceReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows) {
        json row = {{"tau", r.tau}, {"error", number_or_null(r.error)}, {"steps", r.steps}};
        if (!r.failure.empty()) row["failure"] = r.failure;
        rows.push_back(row);
    }
    json j = {{"config", config_to_json(report.config)},
              {"rows", rows},
              {"fitted_order", report.fitted_order ? json(*report.fitted_order) : json(nullptr)},
              {"wall_time_s", report.wall_time_s},
              {"artifact_version", kArtifactVersion}};
    if (report.config.data.rough()) {
        json seeds = json::array();
        for (std::size_t i = 0; i < report.seed_orders.size(); ++i) {
            const auto& [seed, order] = report.seed_orders[i];
            json errs = json::array();
            for (const auto& r : report.seed_rows[i]) errs.push_back(number_or_null(r.error));
            seeds.push_back({{"seed", seed}, {"fitted_order", order ? json(*order) : json(nullptr)}, {"errors", errs}});
        }
        j["seeds"] = seeds;
    }
    return j;
}

json constant_report_to_json(const ConstantReport& report) {
    auto list = [](const std::vector<TauConstant>& v) {
        json a = json::array();
        for (const auto& c : v) a.push_back({{"tau", c.tau}, {"best_constant", number_or_null(c.best_constant)}});
        return a;
    };
    json params = json::object();
    for (const auto& [k, v] : report.parameters) params[k] = v;
    json j = {{"estimate", report.estimate},
              {"per_tau", list(report.per_tau)},
              {"uniformity_ratio", number_or_null(report.uniformity_ratio)},
              {"parameters", params}};
    if (!report.per_tau_no_cutoff.empty()) j["per_tau_no_cutoff"] = list(report.per_tau_no_cutoff);
    if (report.estimate == "embedding") j["scaling_exponent"] = report.scaling_exponent;
    return j;
}

}  // namespace reslab
