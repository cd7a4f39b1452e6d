#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "csb/bounds.hpp"
#include "csb/welfare.hpp"

namespace csb {

inline constexpr const char* kResultSchema = "csbounds-result/1";
inline constexpr const char* kVersion = "csbounds 0.1.0";

// JSON building blocks for the result document. Numbers serialize with
// shortest round-trip formatting, so identical inputs and flags reproduce
// byte-identical documents.
nlohmann::json step_to_json(const StepCdf& f);
nlohmann::json interval_to_json(const Interval& iv);
nlohmann::json crossings_to_json(const CrossingReport& r);
nlohmann::json support_to_json(const SupportReport& r);
nlohmann::json bounds_to_json(const BoundsPair& b);
nlohmann::json distdid_to_json(const DistDidEstimate& d);
nlohmann::json decomposition_to_json(const GiniDecomposition& d);

nlohmann::json make_metadata(const std::string& command,
                             const std::map<std::string, std::string>& flags);

// Two-column (y, value) export of a step function for plotting.
void write_step_csv(const StepCdf& f, const std::string& path);

void write_document(const nlohmann::json& doc, const std::string& out_path);

}  // namespace csb
