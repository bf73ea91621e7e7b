#pragma once

#include "energy.hpp"

namespace eocas {

struct Candidate {
  ArraySpec scheme;
  PhaseAssignment assign;
  std::string key;  // "ExF/FPname/BPname/WGname"
};

std::string candidate_key(const ArraySpec& scheme, const PhaseAssignment& assign);

struct SweepEntry {
  Candidate cand;
  EnergyReport report;
};

struct SkippedEntry {
  Candidate cand;
  std::string reason;
};

struct SweepResult {
  std::vector<SweepEntry> ranked;    // e_total ascending, ties by key
  std::vector<SkippedEntry> skipped;
  const SweepEntry& optimum() const;
};

struct SweepOptions {
  EvalOptions eval;
  bool locked = false;  // one template across all three phases
  int jobs = 1;
  std::vector<ArraySpec> scheme_filter;  // empty = all factor pairs
};

// Cartesian product of array schemes and per-phase template assignments,
// each candidate evaluated independently; infeasible candidates are
// recorded, not fatal. Parallel and serial runs produce identical results.
SweepResult sweep(const SnnModel& model, const ArchConfig& base_arch,
                  std::int64_t total_macs, const std::vector<std::string>& templates,
                  const SweepOptions& opts = {});

// One report per template with the scheme fixed to the base arch's arrays
// and the template locked across phases.
std::vector<std::pair<std::string, EnergyReport>> compare_dataflows(
    const SnnModel& model, const ArchConfig& arch,
    const std::vector<std::string>& templates, const EvalOptions& opts = {});

}  // namespace eocas
