#pragma once

#include <json.hpp>

#include "reslab/bourgain.hpp"
#include "reslab/fourier_field.hpp"
#include "reslab/harness.hpp"

namespace reslab {

/// {"n_modes": N, "real": bool, "coeffs": [[re, im], ...]} ordered k = -N/2 .. N/2-1.
nlohmann::json field_to_json(const FourierField& u);
/// Throws InvalidArgument on a malformed object.
FourierField field_from_json(const nlohmann::json& j);

nlohmann::json config_to_json(const ExperimentConfig& cfg);
/// Missing optional keys take the ExperimentConfig defaults; unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json& j);

/// {config, rows, fitted_order, seeds?, wall_time_s, artifact_version}
nlohmann::json report_to_json(const ConvergenceReport& report);

nlohmann::json constant_report_to_json(const ConstantReport& report);

}  // namespace reslab
