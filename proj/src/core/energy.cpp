#include "energy.hpp"

namespace eocas {

const char* scope_name(Scope s) {
  return s == Scope::ConvOnly ? "conv-only" : "full-step";
}

Scope scope_from_name(const std::string& s) {
  if (s == "conv-only") return Scope::ConvOnly;
  if (s == "full-step") return Scope::FullStep;
  throw ConfigError("unknown scope: " + s + " (expected conv-only or full-step)");
}

const std::string& PhaseAssignment::for_phase(Phase p) const {
  switch (p) {
    case Phase::FP: return fp;
    case Phase::BP: return bp;
    default: return wg;
  }
}

double compute_energy(const OpCounts& counts, const OpEnergy& oe) {
  return counts.mux * oe.mux + counts.add * oe.add + counts.mul * oe.mul +
         counts.cmp * oe.cmp;
}

double memory_energy(const AccessTally& t, const ArchConfig& a,
                     std::array<double, kNumMems>* breakdown) {
  double total = 0;
  for (int i = 0; i < kNumMems; ++i) {
    const auto& tr = t.mems[i];
    if (tr.reads_bits == 0 && tr.writes_bits == 0) {
      if (breakdown) (*breakdown)[i] += 0;
      continue;
    }
    const MemorySpec& spec = a.mem(static_cast<MemId>(i));
    const double pj = tr.reads_bits * spec.read_energy + tr.writes_bits * spec.write_energy;
    if (breakdown) (*breakdown)[i] += pj;
    total += pj;
  }
  return total;
}

SomaGradEnergy soma_grad_energy(const SnnModel& model, const ArchConfig& a) {
  SomaGradEnergy e;
  const auto counts = soma_grad_counts(model);
  for (const auto& sg : counts) {
    e.soma_compute += compute_energy(sg.soma, a.op_energy);
    e.grad_compute += compute_energy(sg.grad, a.op_energy);
  }
  AccessTally soma_t, grad_t;
  for (const auto& tr : soma_grad_traffic(model)) {
    for (const auto& item : soma_traffic_items()) {
      auto& mt = soma_t.at(item.mem);
      (item.is_read ? mt.reads_count : mt.writes_count) += tr.invocations;
      (item.is_read ? mt.reads_bits : mt.writes_bits) += tr.invocations * item.bits;
    }
    for (const auto& item : grad_traffic_items()) {
      auto& mt = grad_t.at(item.mem);
      (item.is_read ? mt.reads_count : mt.writes_count) += tr.invocations;
      (item.is_read ? mt.reads_bits : mt.writes_bits) += tr.invocations * item.bits;
    }
  }
  e.soma_traffic = memory_energy(soma_t, a);
  e.grad_traffic = memory_energy(grad_t, a);
  e.soma_tally = soma_t;
  e.grad_tally = grad_t;
  return e;
}

EnergyReport evaluate(const SnnModel& model, const ArchConfig& a,
                      const PhaseAssignment& assign, const EvalOptions& opts) {
  validate_model(model);
  require_valid_arch(a);

  EnergyReport rep;
  rep.model = model.name;
  rep.arch = a.name;
  rep.dataflow = assign;
  rep.scope = opts.scope;

  std::array<AccessTally, kNumPhases> phase_tallies{};
  // Fixed accumulation order: layer ascending, FP -> BP -> WG.
  for (const ConvWorkload& w : build_workloads(model)) {
    const int pi = static_cast<int>(w.phase);
    const DataflowTemplate& tmpl =
        find_template(opts.custom_templates, assign.for_phase(w.phase));
    const MappedDataflow m = instantiate(tmpl, w, a);
    if (opts.strict_tiling) require_full_spatial_use(m);

    rep.phases[pi].compute_pj +=
        compute_energy(conv_counts(w, opts.wg_bias_term), a.op_energy);

    AccessTally t;
    if (opts.use_oracle_tallies) {
      t = simulate(m, opts.oracle_cap).tally;
    } else {
      t = access_counts(w, reuse_factors(m), a);
    }
    phase_tallies[pi].add(t);
  }

  for (int pi = 0; pi < kNumPhases; ++pi) {
    rep.phases[pi].memory_pj = memory_energy(phase_tallies[pi], a, &rep.phase_memory_pj[pi]);
    memory_energy(phase_tallies[pi], a, &rep.per_memory_pj);
  }

  const SomaGradEnergy sg = soma_grad_energy(model, a);
  rep.soma_compute_pj = sg.soma_compute;
  rep.soma_traffic_pj = sg.soma_traffic;
  rep.grad_compute_pj = sg.grad_compute;
  rep.grad_traffic_pj = sg.grad_traffic;

  const double conv_c =
      rep.phases[0].compute_pj + rep.phases[1].compute_pj + rep.phases[2].compute_pj;
  const double conv_m =
      rep.phases[0].memory_pj + rep.phases[1].memory_pj + rep.phases[2].memory_pj;
  rep.conv_total_pj = conv_c + conv_m;
  rep.full_total_pj = conv_c + sg.soma_compute + sg.grad_compute + conv_m +
                      sg.soma_traffic + sg.grad_traffic;

  if (opts.scope == Scope::ConvOnly) {
    rep.e_c_pj = conv_c;
    rep.e_m_pj = conv_m;
  } else {
    rep.e_c_pj = conv_c + sg.soma_compute + sg.grad_compute;
    rep.e_m_pj = conv_m + sg.soma_traffic + sg.grad_traffic;
    memory_energy(sg.soma_tally, a, &rep.per_memory_pj);
    memory_energy(sg.grad_tally, a, &rep.per_memory_pj);
  }
  memory_energy(sg.soma_tally, a, &rep.soma_mem_pj);
  memory_energy(sg.grad_tally, a, &rep.grad_mem_pj);
  rep.e_total_pj = rep.e_c_pj + rep.e_m_pj;
  return rep;
}

}  // namespace eocas
