#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace eocas {

// The eight convolution loop dimensions. Their concrete meaning depends on
// the training phase that owns the workload (see workload.hpp).
enum class Dim : uint8_t { B = 0, T, Ci, Co, H, W, R, S };
inline constexpr int kNumDims = 8;

const char* dim_name(Dim d);
Dim dim_from_name(const std::string& s);

using Dims = std::array<std::int64_t, kNumDims>;

inline std::int64_t& dim_of(Dims& d, Dim i) { return d[static_cast<int>(i)]; }
inline std::int64_t dim_of(const Dims& d, Dim i) { return d[static_cast<int>(i)]; }

// Bitmask over Dim, used for operand index-relevance sets.
using DimMask = std::uint16_t;
constexpr DimMask mask_of(Dim d) { return static_cast<DimMask>(1u << static_cast<int>(d)); }
constexpr bool mask_has(DimMask m, Dim d) { return (m & mask_of(d)) != 0; }

enum class Phase : uint8_t { FP = 0, BP, WG };
inline constexpr int kNumPhases = 3;
const char* phase_name(Phase p);
Phase phase_from_name(const std::string& s);

// Memory pool identifiers. V1..V8 follow the roles of the general training
// architecture; U_MEM/DU_MEM hold the membrane potential and its gradient
// for the soma/grad units.
enum class MemId : uint8_t {
  DRAM = 0,
  V1, V2, V3, V4, V5, V6, V7, V8,
  REG0,   // 1-bit registers
  REG1,   // 16-bit registers
  U_MEM,
  DU_MEM,
};
inline constexpr int kNumMems = 13;

const char* mem_name(MemId m);
MemId mem_from_name(const std::string& s);

// Errors. The C API and the CLI map these onto stable exit codes.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InfeasibleError : std::runtime_error {
  InfeasibleError(const std::string& msg, std::string memory_)
      : std::runtime_error(msg), memory(std::move(memory_)) {}
  std::string memory;
};

struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace eocas
