#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "core/oracle.hpp"

using namespace eocas;
using eocas::test::make_workload;
using eocas::test::ref_arch;

namespace {

void check_exact(const ConvWorkload& w, const DataflowTemplate& t, const ArchConfig& a) {
  const MappedDataflow m = instantiate(t, w, a);
  const SimTally sim = simulate(m);
  const AccessTally an = access_counts(w, reuse_factors(m), a);
  CHECK(sim.ops == static_cast<double>(w.loop_space()));
  for (int i = 0; i < kNumMems; ++i) {
    INFO(t.name, " ", phase_name(w.phase), " mem ", mem_name(static_cast<MemId>(i)));
    CHECK(sim.tally.mems[i].reads_count == an.mems[i].reads_count);
    CHECK(sim.tally.mems[i].writes_count == an.mems[i].writes_count);
    CHECK(sim.tally.mems[i].reads_bits == an.mems[i].reads_bits);
    CHECK(sim.tally.mems[i].writes_bits == an.mems[i].writes_bits);
  }
}

}  // namespace

TEST_CASE("simulated tallies equal the closed form for every builtin nest") {
  const ArchConfig a = ref_arch();
  const Dims d{2, 2, 3, 4, 8, 8, 3, 3};
  for (Phase p : {Phase::FP, Phase::BP, Phase::WG}) {
    for (const auto& t : builtin_templates()) check_exact(make_workload(p, d), t, a);
  }
}

TEST_CASE("equivalence survives capacity tiling") {
  ArchConfig a = ref_arch();
  a.memories[static_cast<int>(MemId::V1)]->size_bits = 600;
  a.memories[static_cast<int>(MemId::V4)]->size_bits = 50000;
  const Dims d{2, 2, 3, 4, 8, 8, 3, 3};
  for (Phase p : {Phase::FP, Phase::BP, Phase::WG}) {
    for (const auto& t : builtin_templates()) check_exact(make_workload(p, d), t, a);
  }
}

TEST_CASE("equivalence on awkward extents, including non-square maps") {
  const ArchConfig a = ref_arch(4, 4);
  for (Dims d : {Dims{1, 3, 2, 5, 6, 4, 2, 3}, Dims{2, 1, 5, 3, 4, 6, 3, 1},
                 Dims{1, 1, 1, 1, 7, 5, 1, 1}}) {
    for (Phase p : {Phase::FP, Phase::BP, Phase::WG}) {
      for (const auto& t : builtin_templates()) check_exact(make_workload(p, d), t, a);
    }
  }
}

TEST_CASE("distinct elements touched match the operand sizes") {
  const ArchConfig a = ref_arch();
  const auto w = make_workload(Phase::FP, {2, 2, 3, 4, 8, 8, 3, 3});
  const SimTally sim = simulate(instantiate(builtin_templates()[0], w, a));
  // Input positions are indexed through h+r and w+s jointly, so the distinct
  // count folds every relevant dim: b*t*ci*h*w*r*s.
  CHECK(sim.distinct[1] == 3.0 * 4 * 3 * 3);       // ci*co*r*s weights
  CHECK(sim.distinct[2] == 2.0 * 2 * 4 * 8 * 8);   // b*t*co*h*w outputs
  CHECK(sim.distinct[0] <= 2.0 * 2 * 3 * 8 * 8 * 3 * 3);
}

TEST_CASE("sparse simulation gates adds and is seed-deterministic") {
  const ArchConfig a = ref_arch();
  const auto w = make_workload(Phase::FP, {1, 2, 3, 4, 6, 6, 3, 3}, 0.5);
  const MappedDataflow m = instantiate(builtin_templates()[0], w, a);

  const SimTally s1 = simulate_sparse(m, 42, 0.5);
  const SimTally s2 = simulate_sparse(m, 42, 0.5);
  CHECK(s1.adds == s2.adds);
  CHECK(s1.adds < s1.ops);
  CHECK(s1.adds > 0);

  double mean = 0;
  const int seeds = 32;
  for (int s = 1; s <= seeds; ++s) mean += simulate_sparse(m, s, 0.5).adds;
  mean /= seeds;
  const double expected = static_cast<double>(w.loop_space()) * 0.5;
  CHECK(std::abs(mean - expected) / expected < 0.05);

  CHECK(simulate_sparse(m, 7, 0.0).adds == 0.0);
  CHECK(simulate_sparse(m, 7, 1.0).adds == simulate(m).ops);
}

TEST_CASE("the loop-space cap aborts oversized simulations") {
  const ArchConfig a = ref_arch();
  const auto w = make_workload(Phase::BP, {2, 2, 3, 4, 8, 8, 3, 3});
  const MappedDataflow m = instantiate(builtin_templates()[0], w, a);
  CHECK_THROWS_AS(simulate(m, 1000), ResourceError);
  CHECK_NOTHROW(simulate(m, static_cast<std::uint64_t>(w.loop_space())));
}
