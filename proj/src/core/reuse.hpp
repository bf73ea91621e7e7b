#pragma once

#include "dataflow.hpp"

namespace eocas {

// Reuse factors for one mapped convolution: per operand slot, the number of
// uses served per fetch across the register<->SRAM boundary (local) and the
// SRAM<->DRAM boundary (global). accesses at a boundary = op_count / RU.
struct OperandReuse {
  double ru_local = 1;
  double ru_global = 1;
};

struct ReuseProfile {
  std::array<OperandReuse, kNumOperands> operands;
  double op_count = 0;  // loop-space size of the mapping
};

struct MemTraffic {
  double reads_count = 0;
  double writes_count = 0;
  double reads_bits = 0;
  double writes_bits = 0;
};

struct AccessTally {
  std::array<MemTraffic, kNumMems> mems{};
  MemTraffic& at(MemId id) { return mems[static_cast<int>(id)]; }
  const MemTraffic& at(MemId id) const { return mems[static_cast<int>(id)]; }
  void add(const AccessTally& other);
};

// RU = product of trip counts of loops inside the boundary whose dimension
// is irrelevant to the operand's index set (for outputs: reduction loops
// accumulating in place).
ReuseProfile reuse_factors(const MappedDataflow& m);

// Converts operation counts into boundary-crossing access counts:
//   inputs:  reg writes = SRAM reads = op/ru_local; SRAM writes = DRAM reads = op/ru_global
//   outputs: reg reads  = SRAM writes = op/ru_local; SRAM reads = DRAM writes = op/ru_global
AccessTally access_counts(const ConvWorkload& w, const ReuseProfile& p,
                          const ArchConfig& a);

}  // namespace eocas
