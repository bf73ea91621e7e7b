#include "explore.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace eocas {

std::string candidate_key(const ArraySpec& scheme, const PhaseAssignment& assign) {
  return std::to_string(scheme.rows) + "x" + std::to_string(scheme.cols) + "/" +
         assign.fp + "/" + assign.bp + "/" + assign.wg;
}

const SweepEntry& SweepResult::optimum() const {
  if (ranked.empty()) throw UsageError("sweep produced no feasible candidate");
  return ranked.front();
}

SweepResult sweep(const SnnModel& model, const ArchConfig& base_arch,
                  std::int64_t total_macs, const std::vector<std::string>& templates,
                  const SweepOptions& opts) {
  if (templates.empty()) throw UsageError("sweep: template set is empty");
  validate_model(model);
  require_valid_arch(base_arch);

  std::vector<ArraySpec> schemes = opts.scheme_filter.empty()
                                       ? enumerate_schemes(total_macs)
                                       : opts.scheme_filter;

  std::vector<Candidate> cands;
  for (const ArraySpec& sc : schemes) {
    if (opts.locked) {
      for (const auto& t : templates)
        cands.push_back({sc, {t, t, t}, candidate_key(sc, {t, t, t})});
    } else {
      for (const auto& f : templates)
        for (const auto& b : templates)
          for (const auto& g : templates)
            cands.push_back({sc, {f, b, g}, candidate_key(sc, {f, b, g})});
    }
  }

  struct Slot {
    bool feasible = false;
    EnergyReport report;
    std::string reason;
  };
  std::vector<Slot> slots(cands.size());

  auto eval_one = [&](std::size_t i) {
    ArchConfig a = base_arch;
    a.name = base_arch.name;
    a.fp_array = {cands[i].scheme.rows, cands[i].scheme.cols, UnitKind::MuxAdd};
    a.bp_array = {cands[i].scheme.rows, cands[i].scheme.cols, UnitKind::MulAdd};
    try {
      slots[i].report = evaluate(model, a, cands[i].assign, opts.eval);
      slots[i].feasible = true;
    } catch (const InfeasibleError& e) {
      slots[i].reason = e.what();
    }
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || cands.size() < 2) {
    for (std::size_t i = 0; i < cands.size(); ++i) eval_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < cands.size(); i = next.fetch_add(1))
          eval_one(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  SweepResult res;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (slots[i].feasible)
      res.ranked.push_back({cands[i], std::move(slots[i].report)});
    else
      res.skipped.push_back({cands[i], std::move(slots[i].reason)});
  }
  if (res.ranked.empty()) throw InfeasibleError("sweep: every candidate infeasible", "");
  std::stable_sort(res.ranked.begin(), res.ranked.end(),
                   [](const SweepEntry& a, const SweepEntry& b) {
                     if (a.report.e_total_pj != b.report.e_total_pj)
                       return a.report.e_total_pj < b.report.e_total_pj;
                     return a.cand.key < b.cand.key;
                   });
  std::stable_sort(res.skipped.begin(), res.skipped.end(),
                   [](const SkippedEntry& a, const SkippedEntry& b) {
                     return a.cand.key < b.cand.key;
                   });
  return res;
}

std::vector<std::pair<std::string, EnergyReport>> compare_dataflows(
    const SnnModel& model, const ArchConfig& arch,
    const std::vector<std::string>& templates, const EvalOptions& opts) {
  if (templates.empty()) throw UsageError("compare_dataflows: template set is empty");
  std::vector<std::pair<std::string, EnergyReport>> out;
  for (const auto& t : templates) {
    out.emplace_back(t, evaluate(model, arch, {t, t, t}, opts));
  }
  return out;
}

}  // namespace eocas
