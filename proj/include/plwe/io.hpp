#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "plwe/experiment.hpp"
#include "plwe/forge.hpp"
#include "plwe/samplers.hpp"
#include "plwe/smallness.hpp"

// File formats: parameter sets and experiment configs/reports as JSON,
// samples as JSON-lines.  Residues and modulus coefficients travel as
// decimal strings so 64-bit values survive any JSON consumer.

namespace plwe {

nlohmann::json params_to_json(const ParameterSet& ps);
ParameterSet params_from_json(const nlohmann::json& j);

ParameterSet load_params_file(const std::string& path);
void save_params_file(const std::string& path, const ParameterSet& ps);

void write_samples(std::ostream& out, const std::vector<Sample>& samples);
// Validates lengths against N and residues against q; errors carry the
// offending line number.
std::vector<Sample> read_samples(std::istream& in, int N, std::uint64_t q);
std::vector<Sample> read_samples_file(const std::string& path, int N, std::uint64_t q);
void write_samples_file(const std::string& path, const std::vector<Sample>& samples);

nlohmann::json report_to_json(const ExperimentReport& rep);
ExperimentReport report_from_json(const nlohmann::json& j);

// Config: {"params": {...} | "params_file": "path", "ntests", "M", "seed",
// optional "theta", optional "mode": "direct"|"x0"}.  Relative params_file
// paths resolve against base_dir.
ExperimentConfig config_from_json(const nlohmann::json& j, const std::string& base_dir);
ExperimentConfig load_config_file(const std::string& path);

nlohmann::json scan_report_to_json(const VulnerabilityReport& rep);
std::string scan_report_text(const VulnerabilityReport& rep);

SmallnessRegion load_region_file(const std::string& path);
void save_region_file(const std::string& path, const SmallnessRegion& region);

}  // namespace plwe
