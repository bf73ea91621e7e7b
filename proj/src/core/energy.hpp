#pragma once

#include <map>
#include <string>

#include "oracle.hpp"

namespace eocas {

enum class Scope : uint8_t { ConvOnly, FullStep };
const char* scope_name(Scope s);
Scope scope_from_name(const std::string& s);

struct PhaseAssignment {
  std::string fp = "AdvancedWS";
  std::string bp = "AdvancedWS";
  std::string wg = "AdvancedWS";
  const std::string& for_phase(Phase p) const;
};

struct EvalOptions {
  Scope scope = Scope::FullStep;
  bool wg_bias_term = true;
  bool strict_tiling = false;  // reject mappings that underfill the array
  std::uint64_t oracle_cap = kDefaultOracleCap;
  bool use_oracle_tallies = false;  // replace analytical reuse with simulation
  std::vector<DataflowTemplate> custom_templates;
};

struct PhaseEnergy {
  double compute_pj = 0;
  double memory_pj = 0;
};

struct EnergyReport {
  std::string model;
  std::string arch;
  PhaseAssignment dataflow;
  Scope scope = Scope::FullStep;
  std::array<PhaseEnergy, kNumPhases> phases{};
  double soma_compute_pj = 0;
  double soma_traffic_pj = 0;
  double grad_compute_pj = 0;
  double grad_traffic_pj = 0;
  std::array<double, kNumMems> per_memory_pj{};  // for the selected scope
  std::array<std::array<double, kNumMems>, kNumPhases> phase_memory_pj{};
  std::array<double, kNumMems> soma_mem_pj{};
  std::array<double, kNumMems> grad_mem_pj{};
  double e_c_pj = 0;
  double e_m_pj = 0;
  double e_total_pj = 0;
  double conv_total_pj = 0;       // conv-only scope total
  double full_total_pj = 0;       // full-training-step total

  double soma_pj() const { return soma_compute_pj + soma_traffic_pj; }
  double grad_pj() const { return grad_compute_pj + grad_traffic_pj; }
  double phase_conv_pj(Phase p) const {
    const auto& ph = phases[static_cast<int>(p)];
    return ph.compute_pj + ph.memory_pj;
  }
};

// mux*o0 + add*o1 + mul*o2 + cmp*o3
double compute_energy(const OpCounts& counts, const OpEnergy& oe);

// Sum over memories of reads_bits*read_energy + writes_bits*write_energy,
// accumulated in fixed memory-id order. Also returns the per-memory split.
double memory_energy(const AccessTally& t, const ArchConfig& a,
                     std::array<double, kNumMems>* breakdown = nullptr);

struct SomaGradEnergy {
  double soma_compute = 0;
  double soma_traffic = 0;
  double grad_compute = 0;
  double grad_traffic = 0;
  AccessTally soma_tally;
  AccessTally grad_tally;
};
SomaGradEnergy soma_grad_energy(const SnnModel& model, const ArchConfig& a);

// Full pipeline: build workloads, map each phase's dataflow, derive reuse,
// tally accesses, and assemble the report. Deterministic.
EnergyReport evaluate(const SnnModel& model, const ArchConfig& a,
                      const PhaseAssignment& assign, const EvalOptions& opts = {});

}  // namespace eocas
