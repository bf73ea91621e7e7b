#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "core/config.hpp"
#include "core/explore.hpp"
#include "core/verify.hpp"

using namespace eocas;
using eocas::test::ref_arch;
using eocas::test::toy_model;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("model JSON round-trips to an identical serialization") {
  const std::string once = model_to_json(toy_model());
  const std::string twice = model_to_json(model_from_json(once));
  CHECK(once == twice);
  const SnnModel m = model_from_json(once);
  CHECK(m.batch == 2);
  CHECK(m.layers.size() == 3);
  CHECK(m.layers[2].spar == 0.25);
}

TEST_CASE("arch JSON round-trips to an identical serialization") {
  const std::string once = arch_to_json(ref_arch());
  const std::string twice = arch_to_json(arch_from_json(once));
  CHECK(once == twice);
  const ArchConfig a = arch_from_json(once);
  CHECK(a.fp_array.rows == 16);
  CHECK(a.mem(MemId::DRAM).read_energy == 2.0);
  CHECK(a.mem(MemId::U_MEM).read_energy == a.mem(MemId::V3).read_energy);
}

TEST_CASE("unknown keys and missing fields are named in the error") {
  CHECK_THROWS_WITH_AS(model_from_json(R"({"eocas_schema":1,"bogus":1,"batch":1,"timesteps":1,"layers":[]})"),
                       doctest::Contains("bogus"), ConfigError);
  CHECK_THROWS_WITH_AS(model_from_json(R"({"batch":1,"timesteps":1,"layers":[]})"),
                       doctest::Contains("eocas_schema"), ConfigError);
  CHECK_THROWS_AS(model_from_json("{not json"), ConfigError);
  CHECK_THROWS_WITH_AS(
      model_from_json(R"({"eocas_schema":1,"batch":1,"timesteps":1,"layers":[{"c_in":1}]})"),
      doctest::Contains("c_out"), ConfigError);
  CHECK_THROWS_WITH_AS(arch_from_json(R"({"eocas_schema":1,"fp_array":{"rows":1,"cols":1}})"),
                       doctest::Contains("bp_array"), ConfigError);
}

TEST_CASE("a duplicate memory pool declaration is rejected") {
  std::string text = arch_to_json(ref_arch());
  const auto pos = text.find("\"id\": \"V2\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 10, "\"id\": \"V1\"");
  CHECK_THROWS_WITH_AS(arch_from_json(text), doctest::Contains("duplicate"), ConfigError);
}

TEST_CASE("bundled configs parse and agree with the in-code fixtures") {
  const SnnModel m = model_from_json(slurp(std::string(TEST_CONFIG_DIR) + "/toy_model.json"));
  CHECK(model_to_json(m) == model_to_json(toy_model()));
  const ArchConfig a = arch_from_json(slurp(std::string(TEST_CONFIG_DIR) + "/ref_arch.json"));
  CHECK(a.op_energy.mul == 0.9);
  CHECK(a.mem(MemId::V5).size_bits == 67108864);
  const SnnModel vgg =
      model_from_json(slurp(std::string(TEST_CONFIG_DIR) + "/vgg_cifar100.json"));
  CHECK(vgg.layers.size() == 8);
}

TEST_CASE("options parse covers every knob") {
  const RunOptions o = options_from_json(R"({
    "dataflow": {"fp": "OS", "wg": "RS"},
    "scope": "conv-only",
    "wg_bias_term": false,
    "oracle_cap": 1234,
    "use_oracle_tallies": true,
    "total_macs": 64,
    "templates": ["OS", "RS"],
    "locked": true,
    "jobs": 4,
    "schemes": ["2x128", "16x16"],
    "seeds": 8,
    "corrupt_ru": true
  })");
  CHECK(o.assign.fp == "OS");
  CHECK(o.assign.bp == "AdvancedWS");
  CHECK(o.assign.wg == "RS");
  CHECK(o.eval.scope == Scope::ConvOnly);
  CHECK(o.eval.wg_bias_term == false);
  CHECK(options_from_json(R"({"strict_tiling": true})").eval.strict_tiling);
  CHECK_FALSE(options_from_json("{}").eval.strict_tiling);
  CHECK(o.eval.oracle_cap == 1234);
  CHECK(o.eval.use_oracle_tallies);
  CHECK(o.total_macs == 64);
  CHECK(o.templates.size() == 2);
  CHECK(o.locked);
  CHECK(o.jobs == 4);
  REQUIRE(o.scheme_filter.size() == 2);
  CHECK(o.scheme_filter[0].rows == 2);
  CHECK(o.scheme_filter[0].cols == 128);
  CHECK(o.seeds == 8);
  CHECK(o.corrupt_ru);
  CHECK(options_from_json("").jobs == 1);
  CHECK_THROWS_AS(options_from_json(R"({"schemes": ["banana"]})"), ConfigError);
  CHECK_THROWS_AS(options_from_json(R"({"scope": "?"})"), ConfigError);
}

TEST_CASE("custom dataflows parse into usable templates") {
  const RunOptions o = options_from_json(R"({
    "custom_dataflows": [{
      "name": "mine",
      "loops": [
        {"dim": "b", "kind": "dram"}, {"dim": "t", "kind": "dram"},
        {"dim": "c_out", "kind": "sram"}, {"dim": "c_in", "kind": "sram"},
        {"dim": "c_out", "kind": "spatial_row"}, {"dim": "c_in", "kind": "spatial_col"},
        {"dim": "h", "kind": "reg"}, {"dim": "w", "kind": "reg"},
        {"dim": "r", "kind": "reg"}, {"dim": "s", "kind": "reg"}
      ],
      "bounds": {
        "input": {"sram": 2, "reg": 4},
        "weight": {"sram": 0, "reg": 6},
        "output": {"sram": 2, "reg": 8}
      }
    }]
  })");
  REQUIRE(o.eval.custom_templates.size() == 1);
  const DataflowTemplate& t = o.eval.custom_templates[0];
  CHECK(t.name == "mine");
  CHECK(t.loops.size() == 10);
  CHECK_FALSE(t.builtin);
  const auto w = eocas::test::make_workload(Phase::FP, {2, 2, 3, 4, 8, 8, 3, 3});
  const MappedDataflow m = instantiate(t, w, ref_arch());
  CHECK(validate_mapping(m, ref_arch()).empty());
}

TEST_CASE("csv renderers emit the documented headers") {
  const EnergyReport r = evaluate(toy_model(), ref_arch(), {});
  const std::string bd = breakdown_csv(r);
  CHECK(bd.rfind("phase,component,memory,pj\n", 0) == 0);
  CHECK(bd.find("FP,conv_compute") != std::string::npos);
  CHECK(bd.find("soma_traffic,U_MEM") != std::string::npos);

  SweepOptions so;
  so.locked = true;
  const SweepResult sr = sweep(toy_model(), ref_arch(), 16, {"AdvancedWS", "OS"}, so);
  const std::string rk = ranking_csv(sr);
  CHECK(rk.rfind("rank,scheme,fp_df,bp_df,wg_df,e_total_pj,feasible\n", 0) == 0);

  const auto rows = compare_dataflows(toy_model(), ref_arch(), {"AdvancedWS", "RS"});
  const std::string cc = compare_csv(rows);
  CHECK(cc.rfind("dataflow,fp_spike_conv,soma,fp_total,bp_float_conv,grad,bp_total,"
                 "wg_total,overall\n", 0) == 0);
  CHECK(cc.find("AdvancedWS,") != std::string::npos);
}

TEST_CASE("report and verify serializations are well-formed") {
  const EnergyReport r = evaluate(toy_model(), ref_arch(), {});
  const std::string rj = report_to_json(r);
  CHECK(rj.find("\"kind\": \"energy_report\"") != std::string::npos);
  CHECK(rj.find("\"e_total_pj\"") != std::string::npos);

  VerifyOptions vo;
  const VerifyResult v = verify(toy_model(), ref_arch(), vo);
  CHECK(v.ok);
  const std::string vj = verify_to_json(v);
  CHECK(vj.find("\"ok\": true") != std::string::npos);
}
