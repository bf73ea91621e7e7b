#include "arch.hpp"

namespace eocas {

const MemorySpec& ArchConfig::mem(MemId id) const {
  const auto& slot = memories[static_cast<int>(id)];
  if (!slot) throw ConfigError(std::string("memory pool is missing ") + mem_name(id));
  return *slot;
}

MemorySpec& ArchConfig::mem_or_create(MemId id) {
  auto& slot = memories[static_cast<int>(id)];
  if (!slot) {
    MemorySpec m;
    m.id = id;
    slot = m;
  }
  return *slot;
}

std::vector<std::string> validate_arch(const ArchConfig& a) {
  std::vector<std::string> v;
  if (a.fp_array.rows < 1 || a.fp_array.cols < 1) v.push_back("fp_array: E and F must be >= 1");
  if (a.bp_array.rows < 1 || a.bp_array.cols < 1) v.push_back("bp_array: E and F must be >= 1");
  if (a.op_energy.mux < 0) v.push_back("op_energy.mux must be >= 0");
  if (a.op_energy.add < 0) v.push_back("op_energy.add must be >= 0");
  if (a.op_energy.mul < 0) v.push_back("op_energy.mul must be >= 0");
  if (a.op_energy.cmp < 0) v.push_back("op_energy.cmp must be >= 0");
  // U_MEM/DU_MEM are defaulted, everything else must be declared.
  for (int i = 0; i < kNumMems; ++i) {
    const MemId id = static_cast<MemId>(i);
    if (id == MemId::U_MEM || id == MemId::DU_MEM) continue;
    const auto& slot = a.memories[i];
    if (!slot) {
      v.push_back(std::string("memory pool is missing ") + mem_name(id));
      continue;
    }
    if (slot->read_energy < 0) v.push_back(std::string(mem_name(id)) + ": read_energy must be >= 0");
    if (slot->write_energy < 0) v.push_back(std::string(mem_name(id)) + ": write_energy must be >= 0");
    if (slot->level == MemLevel::Sram && slot->size_bits < 1)
      v.push_back(std::string(mem_name(id)) + ": SRAM size_bits must be >= 1");
  }
  return v;
}

void require_valid_arch(const ArchConfig& a) {
  auto v = validate_arch(a);
  if (!v.empty()) {
    std::string msg = "invalid architecture:";
    for (const auto& s : v) msg += "\n  " + s;
    throw ConfigError(msg);
  }
}

void apply_defaults(ArchConfig& a) {
  auto fill = [&](MemId id, MemId from) {
    if (!a.memories[static_cast<int>(id)] && a.memories[static_cast<int>(from)]) {
      MemorySpec m = *a.memories[static_cast<int>(from)];
      m.id = id;
      a.memories[static_cast<int>(id)] = m;
    }
  };
  fill(MemId::U_MEM, MemId::V3);
  fill(MemId::DU_MEM, MemId::V6);
}

std::vector<ArraySpec> enumerate_schemes(std::int64_t total_macs) {
  if (total_macs < 1) throw UsageError("total_macs must be >= 1");
  std::vector<ArraySpec> out;
  for (std::int64_t e = 1; e <= total_macs; ++e) {
    if (total_macs % e == 0) out.push_back({e, total_macs / e, UnitKind::MuxAdd});
  }
  return out;
}

void scale_energies(ArchConfig& a, double k) {
  a.op_energy.mux *= k;
  a.op_energy.add *= k;
  a.op_energy.mul *= k;
  a.op_energy.cmp *= k;
  for (auto& slot : a.memories) {
    if (slot) {
      slot->read_energy *= k;
      slot->write_energy *= k;
    }
  }
}

}  // namespace eocas
