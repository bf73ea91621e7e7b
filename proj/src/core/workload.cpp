#include "workload.hpp"

#include <array>

namespace eocas {

std::int64_t ConvWorkload::loop_space() const {
  std::int64_t p = 1;
  for (auto e : dims) p *= e;
  return p;
}

void validate_model(const SnnModel& model) {
  if (model.batch < 1) throw ConfigError("batch must be >= 1");
  if (model.timesteps < 1) throw ConfigError("timesteps must be >= 1");
  if (model.soma.th_l > model.soma.th_r) throw ConfigError("soma: th_l must be <= th_r");
  for (std::size_t i = 0; i < model.layers.size(); ++i) {
    const LayerSpec& l = model.layers[i];
    auto idx = std::to_string(i + 1);
    if (l.c_in < 1 || l.c_out < 1 || l.h_out < 1 || l.w_out < 1 || l.r < 1 || l.s < 1)
      throw ConfigError("layer " + idx + ": all dimensions must be >= 1");
    if (l.spar < 0.0 || l.spar > 1.0)
      throw ConfigError("layer " + idx + ": spar must be in [0, 1]");
    if (i > 0 && model.layers[i - 1].c_out != l.c_in)
      throw ConfigError("channel mismatch between layers " + std::to_string(i) + " and " +
                        idx + ": c_out=" + std::to_string(model.layers[i - 1].c_out) +
                        " vs c_in=" + std::to_string(l.c_in));
  }
}

std::array<OperandInfo, kNumOperands> operands_of(const ConvWorkload& w) {
  switch (w.phase) {
    case Phase::FP:
      return {{{"s^{l-1}", MemId::V1, kRelInput, false},
               {"w^{l-1}", MemId::V2, kRelWeight, false},
               {"ConvFP^l", MemId::V3, kRelOutput, true}}};
    case Phase::BP:
      return {{{"du^{l+1}", MemId::V4, kRelInput, false},
               {"w^l", MemId::V5, kRelWeight, false},
               {"ConvBP^l", MemId::V6, kRelOutput, true}}};
    case Phase::WG:
    default:
      // WG convolves the upstream gradient (output-shaped) with the stored
      // spikes (input-shaped) and accumulates a weight-shaped result.
      return {{{"du^{l+1}", MemId::V4, kRelOutput, false},
               {"s^l", MemId::V7, kRelInput, false},
               {"dw^l", MemId::V8, kRelWeight, true}}};
  }
}

int operand_bits(const ConvWorkload& w, int slot) {
  switch (slot) {
    case 0: return w.input_bits;
    case 1: return w.weight_bits;
    default: return w.output_bits;
  }
}

std::vector<ConvWorkload> build_workloads(const SnnModel& model) {
  validate_model(model);
  std::vector<ConvWorkload> out;
  // Connection c links layer c to layer c+1 through weight w^c; the first
  // layer's input encoding has no inter-layer convolution.
  for (std::size_t c = 1; c < model.layers.size(); ++c) {
    const LayerSpec& lo = model.layers[c - 1];  // layer c (1-based)
    const LayerSpec& hi = model.layers[c];      // layer c+1
    Dims d;
    dim_of(d, Dim::B) = model.batch;
    dim_of(d, Dim::T) = model.timesteps;
    dim_of(d, Dim::Ci) = lo.c_out;
    dim_of(d, Dim::Co) = hi.c_out;
    dim_of(d, Dim::H) = hi.h_out;
    dim_of(d, Dim::W) = hi.w_out;
    dim_of(d, Dim::R) = hi.r;
    dim_of(d, Dim::S) = hi.s;

    ConvWorkload fp;
    fp.phase = Phase::FP;
    fp.layer = static_cast<int>(c) + 1;
    fp.dims = d;
    fp.input_bits = 1;
    fp.spar = hi.spar;
    out.push_back(fp);

    ConvWorkload bp;
    bp.phase = Phase::BP;
    bp.layer = static_cast<int>(c);
    bp.dims = d;
    bp.input_bits = 16;
    bp.spar = 1.0;
    out.push_back(bp);

    ConvWorkload wg;
    wg.phase = Phase::WG;
    wg.layer = static_cast<int>(c);
    wg.dims = d;
    wg.input_bits = 16;  // upstream potential gradient
    wg.weight_bits = 1;  // stored spikes
    wg.spar = lo.spar;
    out.push_back(wg);
  }
  return out;
}

OpCounts fp_counts(const ConvWorkload& w) {
  if (w.phase != Phase::FP) throw UsageError("fp_counts: workload phase is not FP");
  OpCounts c;
  c.mux = static_cast<double>(w.loop_space());
  c.add = c.mux * w.spar;
  return c;
}

OpCounts bp_counts(const ConvWorkload& w) {
  if (w.phase != Phase::BP) throw UsageError("bp_counts: workload phase is not BP");
  OpCounts c;
  c.mul = static_cast<double>(w.loop_space());
  c.add = c.mul;
  return c;
}

OpCounts wg_counts(const ConvWorkload& w, bool bias_term) {
  if (w.phase != Phase::WG) throw UsageError("wg_counts: workload phase is not WG");
  OpCounts c;
  c.mux = static_cast<double>(w.loop_space());
  const double outer = static_cast<double>(dim_of(w.dims, Dim::B)) *
                       static_cast<double>(dim_of(w.dims, Dim::T)) *
                       static_cast<double>(dim_of(w.dims, Dim::R)) *
                       static_cast<double>(dim_of(w.dims, Dim::S)) *
                       static_cast<double>(dim_of(w.dims, Dim::Co));
  const double inner = static_cast<double>(dim_of(w.dims, Dim::Ci)) *
                       static_cast<double>(dim_of(w.dims, Dim::H)) * w.spar *
                       static_cast<double>(dim_of(w.dims, Dim::W));
  c.add = outer * (inner + (bias_term ? 1.0 : 0.0));
  return c;
}

OpCounts conv_counts(const ConvWorkload& w, bool wg_bias_term) {
  switch (w.phase) {
    case Phase::FP: return fp_counts(w);
    case Phase::BP: return bp_counts(w);
    default: return wg_counts(w, wg_bias_term);
  }
}

std::vector<SomaGradCounts> soma_grad_counts(const SnnModel& model) {
  validate_model(model);
  std::vector<SomaGradCounts> out;
  for (std::size_t i = 0; i < model.layers.size(); ++i) {
    const LayerSpec& l = model.layers[i];
    SomaGradCounts sg;
    sg.layer = static_cast<int>(i) + 1;
    sg.invocations = static_cast<double>(model.batch) * model.timesteps * l.c_out *
                     l.h_out * l.w_out;
    sg.soma.mux = 3 * sg.invocations;
    sg.soma.add = 1 * sg.invocations;
    sg.soma.mul = 1 * sg.invocations;
    sg.soma.cmp = 3 * sg.invocations;
    sg.grad.mux = 2 * sg.invocations;
    sg.grad.add = 2 * sg.invocations;
    sg.grad.mul = 2 * sg.invocations;
    sg.grad.cmp = 0;
    out.push_back(sg);
  }
  return out;
}

const std::vector<TrafficItem>& soma_traffic_items() {
  static const std::vector<TrafficItem> items = {
      {"ConvFP", MemId::V3, true, 16},
      {"u_{t-1}", MemId::U_MEM, true, 16},
      {"s_{t-1}", MemId::V1, true, 1},
      {"s_t", MemId::V1, false, 1},
      {"u_t", MemId::U_MEM, false, 16},
      {"step", MemId::V7, false, 1},
  };
  return items;
}

const std::vector<TrafficItem>& grad_traffic_items() {
  static const std::vector<TrafficItem> items = {
      {"ConvBP", MemId::V6, true, 16},
      {"du_{t+1}", MemId::DU_MEM, true, 16},
      {"u_t", MemId::U_MEM, true, 16},
      {"step", MemId::V7, true, 1},
      {"du_t", MemId::DU_MEM, false, 16},
  };
  return items;
}

std::vector<SomaGradTraffic> soma_grad_traffic(const SnnModel& model) {
  validate_model(model);
  std::vector<SomaGradTraffic> out;
  for (std::size_t i = 0; i < model.layers.size(); ++i) {
    const LayerSpec& l = model.layers[i];
    out.push_back({static_cast<int>(i) + 1,
                   static_cast<double>(model.batch) * model.timesteps * l.c_out *
                       l.h_out * l.w_out});
  }
  return out;
}

}  // namespace eocas
