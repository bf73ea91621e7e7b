#include "oracle.hpp"

#include <unordered_set>
#include <vector>

namespace eocas {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

double unit_double(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

struct BoundaryState {
  int pos = 0;
  std::unordered_set<std::uint64_t> seen;
};

SimTally run(const MappedDataflow& m, std::uint64_t cap, bool sparse,
             std::uint64_t seed, double spar) {
  const std::uint64_t space = static_cast<std::uint64_t>(m.trip_product());
  if (space > cap)
    throw ResourceError("oracle loop space " + std::to_string(space) +
                        " exceeds the cap " + std::to_string(cap) +
                        "; shrink the workload or raise --oracle-cap");

  const auto ops = operands_of(m.workload);
  const int n = static_cast<int>(m.loops.size());
  const ConvWorkload& w = m.workload;

  int spike_slot = -1;
  if (sparse) {
    if (w.phase == Phase::FP) spike_slot = 0;
    if (w.phase == Phase::WG) spike_slot = 1;
  }

  SimTally out;
  std::array<BoundaryState, kNumOperands> reg_b, sram_b;
  std::array<std::unordered_set<std::uint64_t>, kNumOperands> all_seen;
  std::array<MemId, kNumOperands> reg_mem, sram_mem;
  std::array<int, kNumOperands> bits;
  for (int slot = 0; slot < kNumOperands; ++slot) {
    reg_b[slot].pos = m.bounds[slot].reg;
    sram_b[slot].pos = m.bounds[slot].sram;
    bits[slot] = operand_bits(w, slot);
    reg_mem[slot] = bits[slot] == 1 ? MemId::REG0 : MemId::REG1;
    sram_mem[slot] = ops[slot].mem;
  }

  auto flush_output = [&](int slot, bool reg_level, std::size_t count) {
    const double c = static_cast<double>(count);
    const double cb = c * bits[slot];
    if (reg_level) {
      out.tally.at(reg_mem[slot]).reads_count += c;
      out.tally.at(reg_mem[slot]).reads_bits += cb;
      out.tally.at(sram_mem[slot]).writes_count += c;
      out.tally.at(sram_mem[slot]).writes_bits += cb;
    } else {
      out.tally.at(sram_mem[slot]).reads_count += c;
      out.tally.at(sram_mem[slot]).reads_bits += cb;
      out.tally.at(MemId::DRAM).writes_count += c;
      out.tally.at(MemId::DRAM).writes_bits += cb;
    }
  };

  std::vector<std::int64_t> digit(n, 0);
  std::array<std::int64_t, kNumDims> val{};

  for (std::uint64_t it = 0; it < space; ++it) {
    int changed = -1;  // outermost changed digit; -1 = everything (first point)
    if (it > 0) {
      int i = n - 1;
      for (; i >= 0; --i) {
        if (++digit[i] < m.loops[i].trip) break;
        digit[i] = 0;
      }
      changed = i;
    }

    val.fill(0);
    for (int i = 0; i < n; ++i) {
      auto& v = val[static_cast<int>(m.loops[i].dim)];
      v = v * m.loops[i].trip + digit[i];
    }

    double spike = 1.0;
    for (int slot = 0; slot < kNumOperands; ++slot) {
      std::uint64_t key = 0;
      for (int d = 0; d < kNumDims; ++d) {
        if (mask_has(ops[slot].relevant, static_cast<Dim>(d)))
          key = key * static_cast<std::uint64_t>(w.dims[d]) +
                static_cast<std::uint64_t>(val[d]);
      }
      all_seen[slot].insert(key);
      if (slot == spike_slot) {
        spike = unit_double(splitmix64(seed ^ splitmix64(key))) < spar ? 1.0 : 0.0;
      }

      auto& rb = reg_b[slot];
      auto& sb = sram_b[slot];
      if (changed < sb.pos && !sb.seen.empty()) {
        if (ops[slot].is_output) flush_output(slot, false, sb.seen.size());
        sb.seen.clear();
      }
      if (changed < rb.pos && !rb.seen.empty()) {
        if (ops[slot].is_output) flush_output(slot, true, rb.seen.size());
        rb.seen.clear();
      }
      const bool new_sram = sb.seen.insert(key).second;
      const bool new_reg = rb.seen.insert(key).second;
      if (!ops[slot].is_output) {
        const double b = bits[slot];
        if (new_sram) {
          out.tally.at(MemId::DRAM).reads_count += 1;
          out.tally.at(MemId::DRAM).reads_bits += b;
          out.tally.at(sram_mem[slot]).writes_count += 1;
          out.tally.at(sram_mem[slot]).writes_bits += b;
        }
        if (new_reg) {
          out.tally.at(sram_mem[slot]).reads_count += 1;
          out.tally.at(sram_mem[slot]).reads_bits += b;
          out.tally.at(reg_mem[slot]).writes_count += 1;
          out.tally.at(reg_mem[slot]).writes_bits += b;
        }
      }
    }

    out.ops += 1;
    out.adds += sparse && spike_slot >= 0 ? spike : 1.0;
  }

  for (int slot = 0; slot < kNumOperands; ++slot) {
    if (ops[slot].is_output) {
      if (!reg_b[slot].seen.empty()) flush_output(slot, true, reg_b[slot].seen.size());
      if (!sram_b[slot].seen.empty()) flush_output(slot, false, sram_b[slot].seen.size());
    }
    out.distinct[slot] = static_cast<double>(all_seen[slot].size());
  }
  return out;
}

}  // namespace

SimTally simulate(const MappedDataflow& m, std::uint64_t cap, const ArchConfig*) {
  return run(m, cap, false, 0, 1.0);
}

SimTally simulate_sparse(const MappedDataflow& m, std::uint64_t seed, double spar,
                         std::uint64_t cap, const ArchConfig*) {
  return run(m, cap, true, seed, spar);
}

}  // namespace eocas
