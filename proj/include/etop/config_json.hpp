#pragma once

#include "json.hpp"

#include "etop/aco.hpp"
#include "etop/ga.hpp"
#include "etop/oracle.hpp"
#include "etop/pso.hpp"

namespace etop {

// JSON views of the solver configs, plus partial overrides (only the keys
// present in the JSON object are applied). Shared by the config-file layer
// and by report provenance blocks.

nlohmann::json ga_config_json(const GaConfig& config);
nlohmann::json aco_config_json(const AcoConfig& config);
nlohmann::json pso_config_json(const PsoConfig& config);
nlohmann::json oracle_limits_json(const OracleLimits& limits);

void apply_ga_overrides(GaConfig& config, const nlohmann::json& object);
void apply_aco_overrides(AcoConfig& config, const nlohmann::json& object);
void apply_pso_overrides(PsoConfig& config, const nlohmann::json& object);
void apply_oracle_overrides(OracleLimits& limits, const nlohmann::json& object);

}  // namespace etop
