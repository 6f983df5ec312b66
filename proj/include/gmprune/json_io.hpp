#pragma once

#include "gmprune/corrupt.hpp"
#include "gmprune/gm.hpp"
#include "gmprune/metrics.hpp"
#include "gmprune/select.hpp"

#include <json.hpp>

#include <string>

namespace gmprune {

// String forms used in JSON documents and on the command line.
std::string to_string(SelectMethod method);
std::string to_string(Replacement replacement);
std::string to_string(Theta0Mode mode);
std::string to_string(GmInit init);
std::string to_string(CorruptionMode mode);
std::string to_string(Estimator estimator);

SelectMethod select_method_from_string(const std::string& s);
Replacement replacement_from_string(const std::string& s);
Theta0Mode theta0_mode_from_string(const std::string& s);
GmInit gm_init_from_string(const std::string& s);
CorruptionMode corruption_mode_from_string(const std::string& s);

nlohmann::json to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GmConfig& cfg);
GmConfig gm_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GmResult& result, const GmConfig& cfg);
GmResult gm_result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SelectorConfig& cfg);
SelectorConfig selector_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SelectionResult& result, const SelectorConfig& cfg);
SelectionResult selection_result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CorruptionSpec& spec);
CorruptionSpec corruption_spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const LoglogFit& fit);

}  // namespace gmprune
