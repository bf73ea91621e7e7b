#pragma once

#include "energy.hpp"

namespace eocas {

struct DiffRow {
  std::string item;  // "layer 2 FP / V2 reads" etc.
  double analytical = 0;
  double simulated = 0;
};

struct VerifyResult {
  bool ok = true;
  std::vector<DiffRow> diffs;
  std::string summary;
};

struct VerifyOptions {
  EvalOptions eval;
  PhaseAssignment assign;
  int seeds = 0;          // > 0 also runs the sparse Monte-Carlo check
  bool corrupt_ru = false;  // test fixture: perturbs one analytical RU
};

// Runs the analytical pipeline and the oracle on every workload of the
// model and diffs op counts plus per-memory tallies (exact). With seeds > 0
// the sparse add count is checked against a 3-standard-error bound.
VerifyResult verify(const SnnModel& model, const ArchConfig& arch,
                    const VerifyOptions& opts);

std::string render_diff_table(const VerifyResult& r);

}  // namespace eocas
