#include <doctest.h>

#include <cmath>
#include <numeric>

#include "helpers.hpp"

using namespace eocas;
using eocas::test::ref_arch;
using eocas::test::toy_model;

TEST_CASE("operation energy is a weighted op-count sum") {
  OpCounts c;
  c.mux = 10;
  c.add = 20;
  c.mul = 30;
  c.cmp = 40;
  const OpEnergy oe{0.05, 0.4, 0.9, 0.05};
  CHECK(compute_energy(c, oe) == doctest::Approx(0.5 + 8.0 + 27.0 + 2.0));
}

TEST_CASE("memory energy sums bit traffic times per-bit coefficients") {
  const ArchConfig a = ref_arch();
  AccessTally t;
  t.at(MemId::V1).reads_bits = 100;
  t.at(MemId::V1).writes_bits = 50;
  t.at(MemId::DRAM).reads_bits = 10;
  std::array<double, kNumMems> split{};
  const double e = memory_energy(t, a, &split);
  CHECK(e == doctest::Approx(150 * 0.2 + 10 * 2.0));
  CHECK(split[static_cast<int>(MemId::V1)] == doctest::Approx(30.0));
  CHECK(split[static_cast<int>(MemId::DRAM)] == doctest::Approx(20.0));
}

TEST_CASE("report identities hold for both scopes and all dataflows") {
  const SnnModel m = toy_model();
  const ArchConfig a = ref_arch();
  for (const auto& t : builtin_templates()) {
    for (Scope sc : {Scope::ConvOnly, Scope::FullStep}) {
      EvalOptions opts;
      opts.scope = sc;
      const PhaseAssignment assign{t.name, t.name, t.name};
      const EnergyReport r = evaluate(m, a, assign, opts);

      CHECK(r.e_total_pj == r.e_c_pj + r.e_m_pj);

      const double conv =
          r.phase_conv_pj(Phase::FP) + r.phase_conv_pj(Phase::BP) + r.phase_conv_pj(Phase::WG);
      CHECK(r.conv_total_pj == doctest::Approx(conv).epsilon(1e-12));
      CHECK(r.full_total_pj ==
            doctest::Approx(conv + r.soma_pj() + r.grad_pj()).epsilon(1e-12));
      CHECK(r.e_total_pj ==
            doctest::Approx(sc == Scope::ConvOnly ? r.conv_total_pj : r.full_total_pj)
                .epsilon(1e-12));

      // Per-memory splits re-sum to the aggregate memory energy.
      const double mem_sum =
          std::accumulate(r.per_memory_pj.begin(), r.per_memory_pj.end(), 0.0);
      CHECK(std::abs(mem_sum - r.e_m_pj) <= 1e-9 * std::max(1.0, r.e_m_pj));
      for (int pi = 0; pi < kNumPhases; ++pi) {
        const double ps = std::accumulate(r.phase_memory_pj[pi].begin(),
                                          r.phase_memory_pj[pi].end(), 0.0);
        CHECK(ps == doctest::Approx(r.phases[pi].memory_pj).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("scaling every coefficient scales the total linearly") {
  const SnnModel m = toy_model();
  ArchConfig a = ref_arch();
  const EnergyReport base = evaluate(m, a, {});
  scale_energies(a, 7.3);
  const EnergyReport scaled = evaluate(m, a, {});
  CHECK(std::abs(scaled.e_total_pj - 7.3 * base.e_total_pj) <=
        1e-12 * scaled.e_total_pj);
}

TEST_CASE("oracle-backed traffic reproduces the analytical report") {
  const SnnModel m = toy_model();
  const ArchConfig a = ref_arch();
  EvalOptions opts;
  const EnergyReport an = evaluate(m, a, {}, opts);
  opts.use_oracle_tallies = true;
  const EnergyReport sim = evaluate(m, a, {}, opts);
  CHECK(sim.e_total_pj == doctest::Approx(an.e_total_pj).epsilon(1e-12));
}

TEST_CASE("the per-filter constant add only moves the WG compute term") {
  const SnnModel m = toy_model();
  const ArchConfig a = ref_arch();
  EvalOptions with, without;
  without.wg_bias_term = false;
  const EnergyReport r1 = evaluate(m, a, {}, with);
  const EnergyReport r0 = evaluate(m, a, {}, without);
  CHECK(r1.phases[2].compute_pj > r0.phases[2].compute_pj);
  CHECK(r1.phases[2].memory_pj == r0.phases[2].memory_pj);
  CHECK(r1.phases[0].compute_pj == r0.phases[0].compute_pj);
}

TEST_CASE("strict tiling turns underfilled arrays into infeasibilities") {
  SnnModel m = toy_model();
  m.layers[1].c_out = 7;  // no divisor fills a 4-wide array row
  m.layers[2].c_in = 7;
  const ArchConfig a = ref_arch(4, 4);
  EvalOptions strict;
  strict.strict_tiling = true;
  CHECK_NOTHROW(evaluate(m, a, {}));
  CHECK_THROWS_AS(evaluate(m, a, {}, strict), InfeasibleError);
  CHECK_NOTHROW(evaluate(toy_model(), a, {}, strict));
}

TEST_CASE("scope names round-trip") {
  CHECK(scope_from_name("conv-only") == Scope::ConvOnly);
  CHECK(scope_from_name(scope_name(Scope::FullStep)) == Scope::FullStep);
  CHECK_THROWS_AS(scope_from_name("everything"), ConfigError);
}
