#include "verify.hpp"

#include <cmath>
#include <sstream>

namespace eocas {

VerifyResult verify(const SnnModel& model, const ArchConfig& arch,
                    const VerifyOptions& opts) {
  validate_model(model);
  require_valid_arch(arch);
  VerifyResult res;
  int workloads = 0;

  for (const ConvWorkload& w : build_workloads(model)) {
    ++workloads;
    const DataflowTemplate& tmpl =
        find_template(opts.eval.custom_templates, opts.assign.for_phase(w.phase));
    const MappedDataflow m = instantiate(tmpl, w, arch);
    if (opts.eval.strict_tiling) require_full_spatial_use(m);
    const std::string tag =
        "layer " + std::to_string(w.layer) + " " + phase_name(w.phase);

    ReuseProfile prof = reuse_factors(m);
    if (opts.corrupt_ru) prof.operands[0].ru_local *= 2;  // deliberate mismatch
    const AccessTally analytical = access_counts(w, prof, arch);
    const SimTally sim = simulate(m, opts.eval.oracle_cap);

    const OpCounts oc = conv_counts(w, opts.eval.wg_bias_term);
    const double an_ops = w.phase == Phase::BP ? oc.mul : oc.mux;
    if (an_ops != sim.ops)
      res.diffs.push_back({tag + " / op visits", an_ops, sim.ops});

    for (int i = 0; i < kNumMems; ++i) {
      const auto& a = analytical.mems[i];
      const auto& s = sim.tally.mems[i];
      const std::string mem = mem_name(static_cast<MemId>(i));
      if (a.reads_count != s.reads_count)
        res.diffs.push_back({tag + " / " + mem + " reads", a.reads_count, s.reads_count});
      if (a.writes_count != s.writes_count)
        res.diffs.push_back({tag + " / " + mem + " writes", a.writes_count, s.writes_count});
      if (a.reads_bits != s.reads_bits)
        res.diffs.push_back({tag + " / " + mem + " read bits", a.reads_bits, s.reads_bits});
      if (a.writes_bits != s.writes_bits)
        res.diffs.push_back({tag + " / " + mem + " write bits", a.writes_bits, s.writes_bits});
    }

    if (opts.seeds > 0 && w.phase != Phase::BP && w.spar < 1.0) {
      double mean = 0;
      std::vector<double> vals;
      for (int seed = 0; seed < opts.seeds; ++seed) {
        const SimTally st = simulate_sparse(m, static_cast<std::uint64_t>(seed) + 1,
                                            w.spar, opts.eval.oracle_cap);
        vals.push_back(st.adds);
        mean += st.adds;
      }
      mean /= opts.seeds;
      double var = 0;
      for (double v : vals) var += (v - mean) * (v - mean);
      var /= std::max(1, opts.seeds - 1);
      const double se = std::sqrt(var / opts.seeds);
      // Sparse adds the oracle can observe exclude the WG constant term.
      const double expected = static_cast<double>(w.loop_space()) * w.spar;
      if (std::abs(mean - expected) > 3.0 * std::max(se, 1e-9))
        res.diffs.push_back({tag + " / sparse mean adds (3 SE)", expected, mean});
    }
  }

  res.ok = res.diffs.empty();
  std::ostringstream os;
  os << (res.ok ? "OK" : "MISMATCH") << ": " << workloads << " workloads checked, "
     << res.diffs.size() << " diffs";
  res.summary = os.str();
  return res;
}

std::string render_diff_table(const VerifyResult& r) {
  std::ostringstream os;
  os << r.summary << "\n";
  if (!r.diffs.empty()) {
    os << "item\tanalytical\tsimulated\n";
    for (const auto& d : r.diffs)
      os << d.item << "\t" << d.analytical << "\t" << d.simulated << "\n";
  }
  return os.str();
}

}  // namespace eocas
