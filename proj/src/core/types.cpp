#include "types.hpp"

namespace eocas {

namespace {
constexpr const char* kDimNames[kNumDims] = {"b", "t", "c_in", "c_out", "h", "w", "r", "s"};
constexpr const char* kPhaseNames[kNumPhases] = {"FP", "BP", "WG"};
constexpr const char* kMemNames[kNumMems] = {"DRAM", "V1", "V2", "V3", "V4", "V5",
                                             "V6",   "V7", "V8", "REG0", "REG1",
                                             "U_MEM", "DU_MEM"};
}  // namespace

const char* dim_name(Dim d) { return kDimNames[static_cast<int>(d)]; }

Dim dim_from_name(const std::string& s) {
  for (int i = 0; i < kNumDims; ++i) {
    if (s == kDimNames[i]) return static_cast<Dim>(i);
  }
  throw ConfigError("unknown loop dimension: " + s);
}

const char* phase_name(Phase p) { return kPhaseNames[static_cast<int>(p)]; }

Phase phase_from_name(const std::string& s) {
  for (int i = 0; i < kNumPhases; ++i) {
    if (s == kPhaseNames[i]) return static_cast<Phase>(i);
  }
  throw ConfigError("unknown phase: " + s);
}

const char* mem_name(MemId m) { return kMemNames[static_cast<int>(m)]; }

MemId mem_from_name(const std::string& s) {
  for (int i = 0; i < kNumMems; ++i) {
    if (s == kMemNames[i]) return static_cast<MemId>(i);
  }
  throw ConfigError("unknown memory id: " + s);
}

}  // namespace eocas
