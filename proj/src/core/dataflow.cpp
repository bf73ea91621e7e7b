#include "dataflow.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace eocas {

namespace {
constexpr const char* kKindNames[] = {"dram", "sram", "reg", "spatial_row", "spatial_col"};
}

const char* loop_kind_name(LoopKind k) { return kKindNames[static_cast<int>(k)]; }

LoopKind loop_kind_from_name(const std::string& s) {
  for (int i = 0; i < 5; ++i) {
    if (s == kKindNames[i]) return static_cast<LoopKind>(i);
  }
  throw ConfigError("unknown loop kind: " + s);
}

int operand_shape(DimMask relevant) {
  if (relevant == kRelInput) return 0;
  if (relevant == kRelWeight) return 1;
  return 2;
}

std::int64_t MappedDataflow::trip_product() const {
  std::int64_t p = 1;
  for (const auto& l : loops) p *= l.trip;
  return p;
}

std::int64_t MappedDataflow::dim_cover(Dim d) const {
  std::int64_t p = 1;
  for (const auto& l : loops) {
    if (l.dim == d) p *= l.trip;
  }
  return p;
}

namespace {

std::int64_t largest_divisor_leq(std::int64_t n, std::int64_t cap) {
  if (cap >= n) return n;
  for (std::int64_t d = cap; d >= 1; --d) {
    if (n % d == 0) return d;
  }
  return 1;
}

std::int64_t next_smaller_divisor(std::int64_t n, std::int64_t below) {
  for (std::int64_t d = below - 1; d >= 1; --d) {
    if (n % d == 0) return d;
  }
  return 0;
}

DataflowTemplate make_advanced_ws() {
  DataflowTemplate t;
  t.name = "AdvancedWS";
  t.loops = {{Dim::B, LoopKind::TemporalDram},  {Dim::T, LoopKind::TemporalDram},
             {Dim::Co, LoopKind::TemporalSram}, {Dim::Ci, LoopKind::TemporalSram},
             {Dim::Co, LoopKind::SpatialRow},   {Dim::Ci, LoopKind::SpatialCol},
             {Dim::H, LoopKind::TemporalReg},   {Dim::W, LoopKind::TemporalReg},
             {Dim::R, LoopKind::TemporalReg},   {Dim::S, LoopKind::TemporalReg}};
  t.shape_bounds = {{{2, 4}, {0, 6}, {2, 8}}};
  t.capacity_splits = {Dim::H, Dim::W};
  t.capacity_anchor = 2;
  return t;
}

DataflowTemplate make_ws1() {
  DataflowTemplate t;
  t.name = "WS1";
  t.loops = {{Dim::B, LoopKind::TemporalDram},  {Dim::T, LoopKind::TemporalDram},
             {Dim::Co, LoopKind::TemporalDram}, {Dim::Ci, LoopKind::TemporalDram},
             {Dim::R, LoopKind::TemporalSram},  {Dim::S, LoopKind::TemporalSram},
             {Dim::Co, LoopKind::SpatialRow},   {Dim::Ci, LoopKind::SpatialCol},
             {Dim::H, LoopKind::TemporalReg},   {Dim::W, LoopKind::TemporalReg}};
  t.shape_bounds = {{{4, 8}, {0, 8}, {2, 8}}};
  t.capacity_splits = {Dim::H, Dim::W};
  t.capacity_anchor = 2;
  return t;
}

DataflowTemplate make_ws2() {
  DataflowTemplate t;
  t.name = "WS2";
  t.loops = {{Dim::B, LoopKind::TemporalDram},  {Dim::T, LoopKind::TemporalDram},
             {Dim::H, LoopKind::TemporalDram},  {Dim::W, LoopKind::TemporalDram},
             {Dim::Co, LoopKind::TemporalSram}, {Dim::Ci, LoopKind::TemporalSram},
             {Dim::Co, LoopKind::SpatialRow},   {Dim::Ci, LoopKind::SpatialCol},
             {Dim::R, LoopKind::TemporalReg},   {Dim::S, LoopKind::TemporalReg}};
  t.shape_bounds = {{{4, 6}, {0, 8}, {4, 8}}};
  t.capacity_anchor = 2;
  return t;
}

DataflowTemplate make_os() {
  DataflowTemplate t;
  t.name = "OS";
  t.loops = {{Dim::B, LoopKind::TemporalDram},  {Dim::T, LoopKind::TemporalDram},
             {Dim::H, LoopKind::TemporalDram},  {Dim::W, LoopKind::TemporalDram},
             {Dim::Co, LoopKind::TemporalSram}, {Dim::H, LoopKind::SpatialRow},
             {Dim::W, LoopKind::SpatialCol},    {Dim::Ci, LoopKind::TemporalReg},
             {Dim::R, LoopKind::TemporalReg},   {Dim::S, LoopKind::TemporalReg}};
  t.shape_bounds = {{{4, 7}, {0, 7}, {4, 7}}};
  t.capacity_splits = {Dim::Ci};
  t.capacity_anchor = 2;
  return t;
}

DataflowTemplate make_rs() {
  DataflowTemplate t;
  t.name = "RS";
  t.loops = {{Dim::B, LoopKind::TemporalDram},  {Dim::T, LoopKind::TemporalDram},
             {Dim::H, LoopKind::TemporalDram},  {Dim::Co, LoopKind::TemporalSram},
             {Dim::Ci, LoopKind::TemporalSram}, {Dim::H, LoopKind::SpatialRow},
             {Dim::Co, LoopKind::SpatialCol},   {Dim::W, LoopKind::TemporalReg},
             {Dim::R, LoopKind::TemporalReg},   {Dim::S, LoopKind::TemporalReg}};
  t.shape_bounds = {{{3, 6}, {0, 7}, {3, 8}}};
  t.capacity_splits = {Dim::W, Dim::Ci};
  t.capacity_anchor = 2;
  return t;
}

}  // namespace

const std::vector<DataflowTemplate>& builtin_templates() {
  static const std::vector<DataflowTemplate> all = {
      make_advanced_ws(), make_ws1(), make_ws2(), make_os(), make_rs()};
  return all;
}

const DataflowTemplate& find_template(const std::vector<DataflowTemplate>& extra,
                                      const std::string& name) {
  for (const auto& t : extra) {
    if (t.name == name) return t;
  }
  for (const auto& t : builtin_templates()) {
    if (t.name == name) return t;
  }
  throw UsageError("unknown dataflow template: " + name);
}

MappedDataflow instantiate(const DataflowTemplate& t, const ConvWorkload& w,
                           const ArchConfig& a) {
  const ArraySpec& arr = (w.phase == Phase::FP) ? a.fp_array : a.bp_array;
  const auto ops = operands_of(w);

  // Spatial inner trips: largest divisor of the extent fitting the array dim.
  std::array<std::int64_t, kNumDims> spatial_inner;
  std::array<bool, kNumDims> is_split;
  spatial_inner.fill(0);
  is_split.fill(false);
  {
    std::array<int, kNumDims> seen{};
    for (const auto& tl : t.loops) {
      const int di = static_cast<int>(tl.dim);
      if (++seen[di] == 2) {
        is_split[di] = true;
        const std::int64_t cap =
            (tl.kind == LoopKind::SpatialRow) ? arr.rows
            : (tl.kind == LoopKind::SpatialCol) ? arr.cols
                                                : dim_of(w.dims, tl.dim);
        spatial_inner[di] = largest_divisor_leq(dim_of(w.dims, tl.dim), cap);
      }
    }
  }

  // Capacity tiles start at the full extent and shrink until SRAM tiles fit.
  std::array<std::int64_t, kNumDims> tile;
  for (int i = 0; i < kNumDims; ++i) tile[i] = w.dims[i];

  for (int attempt = 0;; ++attempt) {
    if (attempt > 4096) throw InfeasibleError("capacity tiling did not converge", "");
    MappedDataflow m;
    m.workload = w;
    m.dataflow = t.name;
    m.rows = arr.rows;
    m.cols = arr.cols;

    int n_cap = 0;
    for (Dim d : t.capacity_splits) {
      if (tile[static_cast<int>(d)] < dim_of(w.dims, d)) ++n_cap;
    }
    std::array<int, kNumDims> occurrence{};
    for (std::size_t ti = 0; ti <= t.loops.size(); ++ti) {
      if (static_cast<int>(ti) == t.capacity_anchor) {
        for (Dim d : t.capacity_splits) {
          const std::int64_t full = dim_of(w.dims, d);
          const std::int64_t tl = tile[static_cast<int>(d)];
          if (tl < full) m.loops.push_back({d, full / tl, LoopKind::TemporalDram});
        }
      }
      if (ti == t.loops.size()) break;
      const auto& tl = t.loops[ti];
      const int di = static_cast<int>(tl.dim);
      std::int64_t trip;
      if (is_split[di]) {
        trip = (++occurrence[di] == 1) ? dim_of(w.dims, tl.dim) / spatial_inner[di]
                                       : spatial_inner[di];
      } else {
        trip = tile[di];
      }
      m.loops.push_back({tl.dim, trip, tl.kind});
    }

    for (int slot = 0; slot < kNumOperands; ++slot) {
      const OperandBounds& sb = t.shape_bounds[operand_shape(ops[slot].relevant)];
      m.bounds[slot].sram = sb.sram < t.capacity_anchor ? sb.sram : sb.sram + n_cap;
      m.bounds[slot].reg = sb.reg < t.capacity_anchor ? sb.reg : sb.reg + n_cap;
    }

    // SRAM capacity check; shrink the first helpful capacity dim on overflow.
    int offending = -1;
    for (int slot = 0; slot < kNumOperands; ++slot) {
      const MemorySpec& spec = a.mem(ops[slot].mem);
      if (spec.size_bits > 0 && sram_footprint_bits(m, slot) > spec.size_bits) {
        offending = slot;
        break;
      }
    }
    if (offending < 0) return m;

    bool shrunk = false;
    for (Dim d : t.capacity_splits) {
      if (!mask_has(ops[offending].relevant, d)) continue;
      auto& tl = tile[static_cast<int>(d)];
      if (tl > 1) {
        tl = next_smaller_divisor(dim_of(w.dims, d), tl);
        shrunk = true;
        break;
      }
    }
    if (!shrunk) {
      throw InfeasibleError(
          std::string("operand ") + ops[offending].role + " of layer " +
              std::to_string(w.layer) + " phase " + phase_name(w.phase) +
              " does not fit " + mem_name(ops[offending].mem) + " under dataflow " +
              t.name,
          mem_name(ops[offending].mem));
    }
  }
}

std::int64_t sram_footprint_bits(const MappedDataflow& m, int slot) {
  const auto ops = operands_of(m.workload);
  std::int64_t p = 1;
  for (std::size_t i = m.bounds[slot].sram; i < m.loops.size(); ++i) {
    if (mask_has(ops[slot].relevant, m.loops[i].dim)) p *= m.loops[i].trip;
  }
  return p * operand_bits(m.workload, slot);
}

std::vector<std::string> validate_mapping(const MappedDataflow& m, const ArchConfig& a) {
  std::vector<std::string> v;
  for (int i = 0; i < kNumDims; ++i) {
    const Dim d = static_cast<Dim>(i);
    if (m.dim_cover(d) != m.workload.dims[i]) {
      v.push_back(std::string("dim ") + dim_name(d) + ": trip product " +
                  std::to_string(m.dim_cover(d)) + " does not cover extent " +
                  std::to_string(m.workload.dims[i]));
    }
  }
  std::int64_t row_p = 1, col_p = 1;
  for (const auto& l : m.loops) {
    if (l.trip < 1) v.push_back(std::string("loop ") + dim_name(l.dim) + ": trip < 1");
    if (l.kind == LoopKind::SpatialRow) row_p *= l.trip;
    if (l.kind == LoopKind::SpatialCol) col_p *= l.trip;
  }
  if (row_p > m.rows)
    v.push_back("spatial row product " + std::to_string(row_p) + " exceeds E=" +
                std::to_string(m.rows));
  if (col_p > m.cols)
    v.push_back("spatial col product " + std::to_string(col_p) + " exceeds F=" +
                std::to_string(m.cols));
  const auto ops = operands_of(m.workload);
  const int n = static_cast<int>(m.loops.size());
  for (int slot = 0; slot < kNumOperands; ++slot) {
    const auto& b = m.bounds[slot];
    if (b.sram < 0 || b.reg < b.sram || b.reg > n) {
      v.push_back(std::string("operand ") + ops[slot].role + ": invalid boundaries");
      continue;
    }
    const MemorySpec& spec = a.mem(ops[slot].mem);
    if (spec.size_bits > 0) {
      const std::int64_t fp = sram_footprint_bits(m, slot);
      if (fp > spec.size_bits)
        v.push_back(std::string("operand ") + ops[slot].role + ": SRAM tile of " +
                    std::to_string(fp) + " bits exceeds " + mem_name(ops[slot].mem) +
                    " capacity " + std::to_string(spec.size_bits));
    }
  }
  return v;
}

void require_full_spatial_use(const MappedDataflow& m) {
  for (const auto& l : m.loops) {
    if (l.kind != LoopKind::SpatialRow && l.kind != LoopKind::SpatialCol) continue;
    const std::int64_t cap = l.kind == LoopKind::SpatialRow ? m.rows : m.cols;
    const std::int64_t extent = m.dim_cover(l.dim);
    if (l.trip < std::min(cap, extent)) {
      throw InfeasibleError(
          std::string("strict tiling: extent ") + std::to_string(extent) + " of dim " +
              dim_name(l.dim) + " has no divisor filling the " +
              std::to_string(cap) + "-wide array dimension under dataflow " +
              m.dataflow,
          "");
    }
  }
}

std::string dump_dataflow(const MappedDataflow& m) {
  std::ostringstream os;
  const auto ops = operands_of(m.workload);
  os << "dataflow " << m.dataflow << " phase " << phase_name(m.workload.phase)
     << " layer " << m.workload.layer << " array " << m.rows << "x" << m.cols << "\n";
  for (std::size_t i = 0; i < m.loops.size(); ++i) {
    for (int slot = 0; slot < kNumOperands; ++slot) {
      if (m.bounds[slot].sram == static_cast<int>(i))
        os << std::string(2 + i, ' ') << "# " << ops[slot].role << " sram tile\n";
      if (m.bounds[slot].reg == static_cast<int>(i))
        os << std::string(2 + i, ' ') << "# " << ops[slot].role << " register tile\n";
    }
    const auto& l = m.loops[i];
    os << std::string(2 + i, ' ') << "for " << dim_name(l.dim) << " in [0, " << l.trip
       << ") " << loop_kind_name(l.kind) << "\n";
  }
  return os.str();
}

}  // namespace eocas
