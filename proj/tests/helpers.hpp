#pragma once

#include "core/energy.hpp"

namespace eocas::test {

inline SnnModel toy_model() {
  SnnModel m;
  m.name = "toy";
  m.batch = 2;
  m.timesteps = 2;
  m.layers = {
      {1, 1, 3, 8, 8, 1, 1, 0.5},
      {2, 3, 4, 8, 8, 3, 3, 0.5},
      {3, 4, 8, 6, 6, 3, 3, 0.25},
  };
  return m;
}

// Register:SRAM:DRAM per-bit energies in 1:10:100 proportion.
inline ArchConfig ref_arch(std::int64_t rows = 16, std::int64_t cols = 16) {
  ArchConfig a;
  a.name = "ref";
  a.fp_array = {rows, cols, UnitKind::MuxAdd};
  a.bp_array = {rows, cols, UnitKind::MulAdd};
  a.op_energy = {0.05, 0.4, 0.9, 0.05};
  auto set = [&](MemId id, MemLevel lvl, std::int64_t size, double e) {
    a.memories[static_cast<int>(id)] = MemorySpec{id, lvl, size, e, e};
  };
  set(MemId::DRAM, MemLevel::Dram, 0, 2.0);
  for (int i = static_cast<int>(MemId::V1); i <= static_cast<int>(MemId::V8); ++i)
    set(static_cast<MemId>(i), MemLevel::Sram, 1u << 26, 0.2);
  set(MemId::REG0, MemLevel::Register, 0, 0.02);
  set(MemId::REG1, MemLevel::Register, 0, 0.02);
  apply_defaults(a);
  return a;
}

inline ConvWorkload make_workload(Phase p, Dims d, double spar = 1.0) {
  ConvWorkload w;
  w.phase = p;
  w.layer = 1;
  w.dims = d;
  w.spar = spar;
  if (p == Phase::FP) {
    w.input_bits = 1;
  } else if (p == Phase::WG) {
    w.input_bits = 16;
    w.weight_bits = 1;
  } else {
    w.input_bits = 16;
  }
  return w;
}

}  // namespace eocas::test
