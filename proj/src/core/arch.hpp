#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "types.hpp"

namespace eocas {

enum class MemLevel : uint8_t { Register, Sram, Dram };

struct MemorySpec {
  MemId id = MemId::DRAM;
  MemLevel level = MemLevel::Dram;
  std::int64_t size_bits = 0;  // 0 = unbounded (DRAM, registers)
  double read_energy = 0;      // pJ per bit
  double write_energy = 0;
};

enum class UnitKind : uint8_t { MuxAdd, MulAdd };

struct ArraySpec {
  std::int64_t rows = 1;  // E
  std::int64_t cols = 1;  // F
  UnitKind unit = UnitKind::MuxAdd;
};

struct OpEnergy {
  double mux = 0;  // o_0
  double add = 0;  // o_1
  double mul = 0;  // o_2
  double cmp = 0;  // o_3 (extension; defaults to o_0 in the reference set)
};

struct ArchConfig {
  std::string name = "arch";
  ArraySpec fp_array{1, 1, UnitKind::MuxAdd};
  ArraySpec bp_array{1, 1, UnitKind::MulAdd};
  OpEnergy op_energy;
  std::array<std::optional<MemorySpec>, kNumMems> memories;

  const MemorySpec& mem(MemId id) const;
  MemorySpec& mem_or_create(MemId id);
  // Registers are selected by operand bitwidth: 1-bit -> REG0, else REG1.
  MemId reg_for_bits(int bits) const { return bits == 1 ? MemId::REG0 : MemId::REG1; }
};

// Returns the list of invariant violations (empty = valid).
std::vector<std::string> validate_arch(const ArchConfig& a);
void require_valid_arch(const ArchConfig& a);  // throws ConfigError if invalid

// Fills U_MEM/DU_MEM from V3/V6 coefficients when absent.
void apply_defaults(ArchConfig& a);

// All ordered factor pairs (E, F) with E*F == total_macs, E ascending.
std::vector<ArraySpec> enumerate_schemes(std::int64_t total_macs);

// Multiplies every energy coefficient (memory and operation) by k.
void scale_energies(ArchConfig& a, double k);

}  // namespace eocas
