#include <doctest.h>

#include "helpers.hpp"
#include "core/explore.hpp"

using namespace eocas;
using eocas::test::ref_arch;
using eocas::test::toy_model;

namespace {
const std::vector<std::string> kAll = {"AdvancedWS", "WS1", "WS2", "OS", "RS"};
}

TEST_CASE("the sweep covers schemes x per-phase assignments") {
  SweepOptions o;
  const SweepResult r = sweep(toy_model(), ref_arch(), 16, kAll, o);
  // 5 factor pairs of 16, 125 assignments each.
  CHECK(r.ranked.size() + r.skipped.size() == 5 * 125);
  CHECK(r.optimum().cand.key == r.ranked.front().cand.key);
  // Ranking is non-decreasing with keyed tie-breaks.
  for (std::size_t i = 1; i < r.ranked.size(); ++i) {
    const auto& a = r.ranked[i - 1];
    const auto& b = r.ranked[i];
    CHECK((a.report.e_total_pj < b.report.e_total_pj ||
           (a.report.e_total_pj == b.report.e_total_pj && a.cand.key < b.cand.key)));
  }
}

TEST_CASE("the optimum is the exhaustive minimum over the same candidates") {
  SweepOptions o;
  const SweepResult r = sweep(toy_model(), ref_arch(), 16, kAll, o);
  double best = r.ranked.front().report.e_total_pj;
  for (const auto& e : r.ranked) CHECK(e.report.e_total_pj >= best);
}

TEST_CASE("parallel and serial sweeps rank identically") {
  SweepOptions serial, parallel;
  parallel.jobs = 8;
  const SweepResult a = sweep(toy_model(), ref_arch(), 16, kAll, serial);
  const SweepResult b = sweep(toy_model(), ref_arch(), 16, kAll, parallel);
  REQUIRE(a.ranked.size() == b.ranked.size());
  for (std::size_t i = 0; i < a.ranked.size(); ++i) {
    CHECK(a.ranked[i].cand.key == b.ranked[i].cand.key);
    CHECK(a.ranked[i].report.e_total_pj == b.ranked[i].report.e_total_pj);
  }
}

TEST_CASE("locked mode assigns one dataflow across all phases") {
  SweepOptions o;
  o.locked = true;
  const SweepResult r = sweep(toy_model(), ref_arch(), 16, kAll, o);
  CHECK(r.ranked.size() + r.skipped.size() == 5 * 5);
  for (const auto& e : r.ranked) {
    CHECK(e.cand.assign.fp == e.cand.assign.bp);
    CHECK(e.cand.assign.bp == e.cand.assign.wg);
  }
}

TEST_CASE("a scheme filter restricts the candidate arrays") {
  SweepOptions o;
  o.locked = true;
  o.scheme_filter = {{2, 8, UnitKind::MuxAdd}, {4, 4, UnitKind::MuxAdd}};
  const SweepResult r = sweep(toy_model(), ref_arch(), 16, kAll, o);
  CHECK(r.ranked.size() + r.skipped.size() == 2 * 5);
  for (const auto& e : r.ranked) CHECK(e.cand.scheme.rows * e.cand.scheme.cols == 16);
}

TEST_CASE("infeasible candidates are reported, not fatal") {
  ArchConfig a = ref_arch();
  // A conv-result pool too small for the output-stationary tile. Only OS has
  // no map-relevant capacity split to shrink it with.
  a.memories[static_cast<int>(MemId::V3)]->size_bits = 2048;
  SweepOptions o;
  o.locked = true;
  o.scheme_filter = {{16, 16, UnitKind::MuxAdd}};
  const SweepResult r = sweep(toy_model(), a, 256, kAll, o);
  REQUIRE(r.skipped.size() == 1);
  CHECK(r.skipped[0].cand.assign.fp == "OS");
  CHECK(r.skipped[0].reason.find("V3") != std::string::npos);
  CHECK(r.ranked.size() == 4);
}

TEST_CASE("a fully infeasible sweep raises an infeasibility") {
  ArchConfig a = ref_arch();
  a.memories[static_cast<int>(MemId::V8)]->size_bits = 16;  // WG result never fits
  SweepOptions o;
  o.locked = true;
  CHECK_THROWS_AS(sweep(toy_model(), a, 16, kAll, o), InfeasibleError);
}

TEST_CASE("empty template set is a usage error") {
  CHECK_THROWS_AS(sweep(toy_model(), ref_arch(), 16, {}, {}), UsageError);
  CHECK_THROWS_AS(compare_dataflows(toy_model(), ref_arch(), {}), UsageError);
}

TEST_CASE("dataflow comparison keeps the arch's arrays and locks templates") {
  const auto rows = compare_dataflows(toy_model(), ref_arch(), kAll);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].first == "AdvancedWS");
  for (const auto& [name, rep] : rows) {
    CHECK(rep.dataflow.fp == name);
    CHECK(rep.dataflow.wg == name);
  }
}
