#pragma once

#include <string>
#include <vector>

#include "arch.hpp"
#include "workload.hpp"

namespace eocas {

enum class LoopKind : uint8_t {
  TemporalDram,
  TemporalSram,
  TemporalReg,
  SpatialRow,
  SpatialCol,
};
const char* loop_kind_name(LoopKind k);
LoopKind loop_kind_from_name(const std::string& s);

struct Loop {
  Dim dim;
  std::int64_t trip = 1;
  LoopKind kind = LoopKind::TemporalDram;
};

// Loop-nest positions of an operand's residency boundaries. Loops at index
// >= the boundary are "inside": the operand stays resident across them.
// sram <= reg always (the SRAM region contains the register region).
struct OperandBounds {
  int sram = 0;
  int reg = 0;
};

// Operand shapes index shape_bounds: 0 = input-shaped (all dims but c_out),
// 1 = weight-shaped (c_in, c_out, r, s), 2 = output-shaped (b, t, c_out, h, w).
// For FP/BP the slot order matches; WG permutes (gradient in, spikes, dw out).
int operand_shape(DimMask relevant);

struct TemplateLoop {
  Dim dim;
  LoopKind kind;
};

// A dataflow recipe. A dim appearing twice is split (first = outer part,
// second = inner spatial part bounded by the array dimension). Dims listed
// in capacity_splits get an extra DRAM-level loop inserted at
// capacity_anchor when an SRAM tile has to shrink to fit.
struct DataflowTemplate {
  std::string name;
  std::vector<TemplateLoop> loops;
  std::array<OperandBounds, 3> shape_bounds;  // by operand shape
  std::vector<Dim> capacity_splits;
  int capacity_anchor = 0;
  bool builtin = true;
};

struct MappedDataflow {
  ConvWorkload workload;
  std::string dataflow;
  std::int64_t rows = 1;  // E of the array the phase runs on
  std::int64_t cols = 1;  // F
  std::vector<Loop> loops;                 // outermost first
  std::array<OperandBounds, 3> bounds;     // per workload operand slot

  std::int64_t trip_product() const;
  std::int64_t dim_cover(Dim d) const;     // product of trips of d's loops
};

// The five built-in dataflows, fixed order:
// AdvancedWS, WS1, WS2, OS, RS.
const std::vector<DataflowTemplate>& builtin_templates();
const DataflowTemplate& find_template(const std::vector<DataflowTemplate>& extra,
                                      const std::string& name);

// Binds a template to a workload and architecture: spatial tiling by the
// largest divisor that fits the array dimension, capacity-driven tiling of
// the declared split dims until every SRAM tile fits. Tilings are always
// exact covers. Throws InfeasibleError naming the memory when no tiling fits.
MappedDataflow instantiate(const DataflowTemplate& t, const ConvWorkload& w,
                           const ArchConfig& a);

// Extent coverage, spatial bounds, boundary sanity, SRAM footprints.
std::vector<std::string> validate_mapping(const MappedDataflow& m, const ArchConfig& a);

// Strict-tiling check: rejects mappings whose spatial split underuses the
// array because the extent has no divisor matching the array dimension.
void require_full_spatial_use(const MappedDataflow& m);

// Per-operand SRAM tile footprint in bits.
std::int64_t sram_footprint_bits(const MappedDataflow& m, int slot);

// Indented loop-nest text for docs/debugging.
std::string dump_dataflow(const MappedDataflow& m);

}  // namespace eocas
