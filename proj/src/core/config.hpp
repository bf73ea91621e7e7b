#pragma once

#include <string>

#include "explore.hpp"
#include "verify.hpp"

namespace eocas {

inline constexpr int kSchemaVersion = 1;

// Strict-schema JSON ingestion: unknown keys are rejected, all errors are
// ConfigError with the offending field named.
SnnModel model_from_json(const std::string& text);
std::string model_to_json(const SnnModel& model);

ArchConfig arch_from_json(const std::string& text);
std::string arch_to_json(const ArchConfig& arch);

// Options blob shared by the CLI and the C API. Covers the dataflow
// assignment, custom nests, scope/tiling/oracle knobs and sweep settings.
struct RunOptions {
  PhaseAssignment assign;
  EvalOptions eval;
  // explore
  std::int64_t total_macs = 256;
  std::vector<std::string> templates;  // empty = all builtins
  bool locked = false;
  int jobs = 1;
  std::vector<ArraySpec> scheme_filter;
  // verify
  int seeds = 0;
  bool corrupt_ru = false;
};
RunOptions options_from_json(const std::string& text);

std::string report_to_json(const EnergyReport& r);
std::string breakdown_csv(const EnergyReport& r);

std::string sweep_to_json(const SweepResult& r);
std::string ranking_csv(const SweepResult& r);

std::string compare_to_json(const std::vector<std::pair<std::string, EnergyReport>>& rows);
std::string compare_csv(const std::vector<std::pair<std::string, EnergyReport>>& rows);

std::string verify_to_json(const VerifyResult& r);

}  // namespace eocas
