#include "reuse.hpp"

namespace eocas {

void AccessTally::add(const AccessTally& other) {
  for (int i = 0; i < kNumMems; ++i) {
    mems[i].reads_count += other.mems[i].reads_count;
    mems[i].writes_count += other.mems[i].writes_count;
    mems[i].reads_bits += other.mems[i].reads_bits;
    mems[i].writes_bits += other.mems[i].writes_bits;
  }
}

ReuseProfile reuse_factors(const MappedDataflow& m) {
  const auto ops = operands_of(m.workload);
  ReuseProfile p;
  p.op_count = static_cast<double>(m.trip_product());
  for (int slot = 0; slot < kNumOperands; ++slot) {
    double local = 1, global = 1;
    for (std::size_t i = 0; i < m.loops.size(); ++i) {
      if (mask_has(ops[slot].relevant, m.loops[i].dim)) continue;
      const double trip = static_cast<double>(m.loops[i].trip);
      if (static_cast<int>(i) >= m.bounds[slot].sram) global *= trip;
      if (static_cast<int>(i) >= m.bounds[slot].reg) local *= trip;
    }
    p.operands[slot] = {local, global};
  }
  return p;
}

AccessTally access_counts(const ConvWorkload& w, const ReuseProfile& p,
                          const ArchConfig& a) {
  if (p.op_count != static_cast<double>(w.loop_space()))
    throw UsageError("access_counts: reuse profile does not match the workload");
  const auto ops = operands_of(w);
  AccessTally t;
  for (int slot = 0; slot < kNumOperands; ++slot) {
    const int bits = operand_bits(w, slot);
    const MemId sram = ops[slot].mem;
    const MemId reg = a.reg_for_bits(bits);
    const double n_local = p.op_count / p.operands[slot].ru_local;
    const double n_global = p.op_count / p.operands[slot].ru_global;
    if (ops[slot].is_output) {
      t.at(reg).reads_count += n_local;
      t.at(reg).reads_bits += n_local * bits;
      t.at(sram).writes_count += n_local;
      t.at(sram).writes_bits += n_local * bits;
      t.at(sram).reads_count += n_global;
      t.at(sram).reads_bits += n_global * bits;
      t.at(MemId::DRAM).writes_count += n_global;
      t.at(MemId::DRAM).writes_bits += n_global * bits;
    } else {
      t.at(reg).writes_count += n_local;
      t.at(reg).writes_bits += n_local * bits;
      t.at(sram).reads_count += n_local;
      t.at(sram).reads_bits += n_local * bits;
      t.at(sram).writes_count += n_global;
      t.at(sram).writes_bits += n_global * bits;
      t.at(MemId::DRAM).reads_count += n_global;
      t.at(MemId::DRAM).reads_bits += n_global * bits;
    }
  }
  return t;
}

}  // namespace eocas
