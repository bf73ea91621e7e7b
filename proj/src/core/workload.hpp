#pragma once

#include <string>
#include <vector>

#include "types.hpp"

namespace eocas {

// Soma parameters are carried for config round-trip only; the simulator
// never evaluates the neuron dynamics numerically.
struct SomaParams {
  double alpha = 0.5;
  double beta = 1.0;
  double th_f = 1.0;
  double th_l = 0.0;
  double th_r = 1.0;
};

struct LayerSpec {
  int index = 0;          // 1-based layer number
  std::int64_t c_in = 1;  // channels of the previous layer's feature map
  std::int64_t c_out = 1; // channels of this layer's feature map
  std::int64_t h_out = 1;
  std::int64_t w_out = 1;
  std::int64_t r = 1;     // kernel height of the weight producing this layer
  std::int64_t s = 1;     // kernel width
  double spar = 1.0;      // average spike sparsity of this layer's spikes
};

struct SnnModel {
  std::string name = "model";
  std::int64_t batch = 1;
  std::int64_t timesteps = 1;
  SomaParams soma;
  std::vector<LayerSpec> layers;
};

// Throws ConfigError naming the offending field/layer pair on violation.
void validate_model(const SnnModel& model);

// One convolution task. The eight extents share one layout across phases;
// their meaning is fixed by build_workloads (h/w are always the output map
// of the downstream layer of the connection, r/s the connecting kernel).
struct ConvWorkload {
  Phase phase = Phase::FP;
  int layer = 0;  // 1-based; FP: consuming layer, BP/WG: the weight's layer
  Dims dims{1, 1, 1, 1, 1, 1, 1, 1};
  int input_bits = 1;
  int weight_bits = 16;
  int output_bits = 16;
  double spar = 1.0;

  std::int64_t loop_space() const;  // product of all eight extents
};

struct OpCounts {
  double mux = 0;
  double add = 0;
  double mul = 0;
  double cmp = 0;
};

// Per-phase operand descriptors (input slot, weight slot, output slot).
struct OperandInfo {
  const char* role;  // variable name, for reports
  MemId mem;
  DimMask relevant;
  bool is_output;
};
inline constexpr int kNumOperands = 3;

constexpr DimMask kRelInput =
    mask_of(Dim::B) | mask_of(Dim::T) | mask_of(Dim::Ci) | mask_of(Dim::H) |
    mask_of(Dim::W) | mask_of(Dim::R) | mask_of(Dim::S);
constexpr DimMask kRelWeight =
    mask_of(Dim::Ci) | mask_of(Dim::Co) | mask_of(Dim::R) | mask_of(Dim::S);
constexpr DimMask kRelOutput =
    mask_of(Dim::B) | mask_of(Dim::T) | mask_of(Dim::Co) | mask_of(Dim::H) |
    mask_of(Dim::W);

// Returns the three operand slots of a workload: which SRAM each operand
// lives in, its index-relevance set and direction. WG swaps roles: the
// gradient input is output-shaped and the accumulated weight gradient is
// weight-shaped.
std::array<OperandInfo, kNumOperands> operands_of(const ConvWorkload& w);
int operand_bits(const ConvWorkload& w, int slot);

// Derives the FP/BP/WG workloads for every inter-layer connection,
// ordered (layer ascending, FP -> BP -> WG). Deterministic.
std::vector<ConvWorkload> build_workloads(const SnnModel& model);

// Analytical operation counts. Wrong-phase input -> UsageError.
OpCounts fp_counts(const ConvWorkload& w);
OpCounts bp_counts(const ConvWorkload& w);
// wg_counts' Add carries a per-filter constant term that can be disabled.
OpCounts wg_counts(const ConvWorkload& w, bool bias_term = true);
OpCounts conv_counts(const ConvWorkload& w, bool wg_bias_term = true);

// Soma/grad unit static model: invocations = B*T*C^l*H^l*W^l per layer.
struct SomaGradCounts {
  int layer = 0;
  double invocations = 0;
  OpCounts soma;
  OpCounts grad;
};
std::vector<SomaGradCounts> soma_grad_counts(const SnnModel& model);

struct TrafficItem {
  const char* var;
  MemId mem;
  bool is_read;  // from the unit's point of view
  int bits;      // per invocation
};
// Fixed per-invocation transfer lists of the soma and grad units.
const std::vector<TrafficItem>& soma_traffic_items();
const std::vector<TrafficItem>& grad_traffic_items();

struct SomaGradTraffic {
  int layer = 0;
  double invocations = 0;
};
std::vector<SomaGradTraffic> soma_grad_traffic(const SnnModel& model);

}  // namespace eocas
