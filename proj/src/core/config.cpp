#include "config.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

namespace eocas {

using json = nlohmann::ordered_json;

namespace {

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& ctx) {
  if (!obj.is_object()) throw ConfigError(ctx + ": expected a JSON object");
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) throw ConfigError(ctx + ": unknown key \"" + k + "\"");
  }
}

json parse(const std::string& text, const std::string& ctx) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError(ctx + ": malformed JSON");
  return j;
}

void check_schema(const json& j, const std::string& ctx) {
  if (!j.contains("eocas_schema") || !j["eocas_schema"].is_number_integer() ||
      j["eocas_schema"].get<int>() != kSchemaVersion)
    throw ConfigError(ctx + ": eocas_schema must be " + std::to_string(kSchemaVersion));
}

std::int64_t get_int(const json& j, const std::string& key, const std::string& ctx) {
  if (!j.contains(key)) throw ConfigError(ctx + ": missing \"" + key + "\"");
  if (!j[key].is_number_integer())
    throw ConfigError(ctx + ": \"" + key + "\" must be an integer");
  return j[key].get<std::int64_t>();
}

double get_num(const json& j, const std::string& key, const std::string& ctx) {
  if (!j.contains(key)) throw ConfigError(ctx + ": missing \"" + key + "\"");
  if (!j[key].is_number())
    throw ConfigError(ctx + ": \"" + key + "\" must be a number");
  return j[key].get<double>();
}

std::string get_str(const json& j, const std::string& key, const std::string& ctx) {
  if (!j.contains(key)) throw ConfigError(ctx + ": missing \"" + key + "\"");
  if (!j[key].is_string())
    throw ConfigError(ctx + ": \"" + key + "\" must be a string");
  return j[key].get<std::string>();
}

std::string fmt(double v) {
  json j = v;
  return j.dump();
}

}  // namespace

SnnModel model_from_json(const std::string& text) {
  const json j = parse(text, "model");
  check_keys(j, {"eocas_schema", "name", "batch", "timesteps", "soma", "layers"}, "model");
  check_schema(j, "model");
  SnnModel m;
  if (j.contains("name")) m.name = get_str(j, "name", "model");
  m.batch = get_int(j, "batch", "model");
  m.timesteps = get_int(j, "timesteps", "model");
  if (j.contains("soma")) {
    const json& s = j["soma"];
    check_keys(s, {"alpha", "beta", "th_f", "th_l", "th_r"}, "model.soma");
    m.soma.alpha = get_num(s, "alpha", "model.soma");
    m.soma.beta = get_num(s, "beta", "model.soma");
    m.soma.th_f = get_num(s, "th_f", "model.soma");
    m.soma.th_l = get_num(s, "th_l", "model.soma");
    m.soma.th_r = get_num(s, "th_r", "model.soma");
  }
  if (!j.contains("layers") || !j["layers"].is_array())
    throw ConfigError("model: \"layers\" must be an array");
  int idx = 0;
  for (const json& lj : j["layers"]) {
    const std::string ctx = "model.layers[" + std::to_string(idx) + "]";
    check_keys(lj, {"c_in", "c_out", "h_out", "w_out", "r", "s", "spar"}, ctx);
    LayerSpec l;
    l.index = ++idx;
    l.c_in = get_int(lj, "c_in", ctx);
    l.c_out = get_int(lj, "c_out", ctx);
    l.h_out = get_int(lj, "h_out", ctx);
    l.w_out = get_int(lj, "w_out", ctx);
    l.r = get_int(lj, "r", ctx);
    l.s = get_int(lj, "s", ctx);
    l.spar = get_num(lj, "spar", ctx);
    m.layers.push_back(l);
  }
  validate_model(m);
  return m;
}

std::string model_to_json(const SnnModel& m) {
  json j;
  j["eocas_schema"] = kSchemaVersion;
  j["name"] = m.name;
  j["batch"] = m.batch;
  j["timesteps"] = m.timesteps;
  j["soma"] = {{"alpha", m.soma.alpha},
               {"beta", m.soma.beta},
               {"th_f", m.soma.th_f},
               {"th_l", m.soma.th_l},
               {"th_r", m.soma.th_r}};
  j["layers"] = json::array();
  for (const LayerSpec& l : m.layers) {
    j["layers"].push_back({{"c_in", l.c_in},
                           {"c_out", l.c_out},
                           {"h_out", l.h_out},
                           {"w_out", l.w_out},
                           {"r", l.r},
                           {"s", l.s},
                           {"spar", l.spar}});
  }
  return j.dump(2) + "\n";
}

namespace {

MemLevel level_for(MemId id) {
  if (id == MemId::DRAM) return MemLevel::Dram;
  if (id == MemId::REG0 || id == MemId::REG1) return MemLevel::Register;
  return MemLevel::Sram;
}

}  // namespace

ArchConfig arch_from_json(const std::string& text) {
  const json j = parse(text, "arch");
  check_keys(j, {"eocas_schema", "name", "fp_array", "bp_array", "op_energy_pj",
                 "memories"},
             "arch");
  check_schema(j, "arch");
  ArchConfig a;
  if (j.contains("name")) a.name = get_str(j, "name", "arch");
  auto parse_array = [&](const char* key, UnitKind kind) {
    if (!j.contains(key)) throw ConfigError(std::string("arch: missing \"") + key + "\"");
    const json& aj = j[key];
    check_keys(aj, {"rows", "cols"}, std::string("arch.") + key);
    return ArraySpec{get_int(aj, "rows", key), get_int(aj, "cols", key), kind};
  };
  a.fp_array = parse_array("fp_array", UnitKind::MuxAdd);
  a.bp_array = parse_array("bp_array", UnitKind::MulAdd);
  if (!j.contains("op_energy_pj")) throw ConfigError("arch: missing \"op_energy_pj\"");
  const json& oj = j["op_energy_pj"];
  check_keys(oj, {"mux", "add", "mul", "cmp"}, "arch.op_energy_pj");
  a.op_energy.mux = get_num(oj, "mux", "arch.op_energy_pj");
  a.op_energy.add = get_num(oj, "add", "arch.op_energy_pj");
  a.op_energy.mul = get_num(oj, "mul", "arch.op_energy_pj");
  a.op_energy.cmp =
      oj.contains("cmp") ? get_num(oj, "cmp", "arch.op_energy_pj") : a.op_energy.mux;
  if (!j.contains("memories") || !j["memories"].is_array())
    throw ConfigError("arch: \"memories\" must be an array");
  for (const json& mj : j["memories"]) {
    check_keys(mj, {"id", "size_bits", "read_pj_per_bit", "write_pj_per_bit"},
               "arch.memories[]");
    MemorySpec spec;
    spec.id = mem_from_name(get_str(mj, "id", "arch.memories[]"));
    spec.level = level_for(spec.id);
    spec.read_energy = get_num(mj, "read_pj_per_bit", mem_name(spec.id));
    spec.write_energy = get_num(mj, "write_pj_per_bit", mem_name(spec.id));
    if (spec.level == MemLevel::Sram)
      spec.size_bits = get_int(mj, "size_bits", mem_name(spec.id));
    else if (mj.contains("size_bits"))
      spec.size_bits = get_int(mj, "size_bits", mem_name(spec.id));
    if (a.memories[static_cast<int>(spec.id)])
      throw ConfigError(std::string("arch: duplicate memory ") + mem_name(spec.id));
    a.memories[static_cast<int>(spec.id)] = spec;
  }
  apply_defaults(a);
  require_valid_arch(a);
  return a;
}

std::string arch_to_json(const ArchConfig& a) {
  json j;
  j["eocas_schema"] = kSchemaVersion;
  j["name"] = a.name;
  j["fp_array"] = {{"rows", a.fp_array.rows}, {"cols", a.fp_array.cols}};
  j["bp_array"] = {{"rows", a.bp_array.rows}, {"cols", a.bp_array.cols}};
  j["op_energy_pj"] = {{"mux", a.op_energy.mux},
                       {"add", a.op_energy.add},
                       {"mul", a.op_energy.mul},
                       {"cmp", a.op_energy.cmp}};
  j["memories"] = json::array();
  for (int i = 0; i < kNumMems; ++i) {
    const auto& slot = a.memories[i];
    if (!slot) continue;
    json mj;
    mj["id"] = mem_name(slot->id);
    if (slot->level == MemLevel::Sram) mj["size_bits"] = slot->size_bits;
    mj["read_pj_per_bit"] = slot->read_energy;
    mj["write_pj_per_bit"] = slot->write_energy;
    j["memories"].push_back(mj);
  }
  return j.dump(2) + "\n";
}

namespace {

DataflowTemplate custom_template_from_json(const json& tj, int idx) {
  const std::string ctx = "options.custom_dataflows[" + std::to_string(idx) + "]";
  check_keys(tj, {"name", "loops", "bounds"}, ctx);
  DataflowTemplate t;
  t.builtin = false;
  t.name = get_str(tj, "name", ctx);
  if (!tj.contains("loops") || !tj["loops"].is_array())
    throw ConfigError(ctx + ": \"loops\" must be an array");
  for (const json& lj : tj["loops"]) {
    check_keys(lj, {"dim", "kind"}, ctx + ".loops[]");
    t.loops.push_back({dim_from_name(get_str(lj, "dim", ctx)),
                       loop_kind_from_name(get_str(lj, "kind", ctx))});
  }
  if (!tj.contains("bounds")) throw ConfigError(ctx + ": missing \"bounds\"");
  const json& bj = tj["bounds"];
  check_keys(bj, {"input", "weight", "output"}, ctx + ".bounds");
  const char* shapes[3] = {"input", "weight", "output"};
  for (int s = 0; s < 3; ++s) {
    if (!bj.contains(shapes[s]))
      throw ConfigError(ctx + ".bounds: missing \"" + shapes[s] + "\"");
    const json& sj = bj[shapes[s]];
    check_keys(sj, {"sram", "reg"}, ctx + ".bounds");
    t.shape_bounds[s].sram = static_cast<int>(get_int(sj, "sram", ctx));
    t.shape_bounds[s].reg = static_cast<int>(get_int(sj, "reg", ctx));
  }
  return t;
}

}  // namespace

RunOptions options_from_json(const std::string& text) {
  RunOptions o;
  if (text.empty()) return o;
  const json j = parse(text, "options");
  check_keys(j,
             {"dataflow", "scope", "wg_bias_term", "strict_tiling", "oracle_cap",
              "use_oracle_tallies",
              "custom_dataflows", "total_macs", "templates", "locked", "jobs",
              "schemes", "seeds", "corrupt_ru"},
             "options");
  if (j.contains("dataflow")) {
    const json& dj = j["dataflow"];
    check_keys(dj, {"fp", "bp", "wg"}, "options.dataflow");
    if (dj.contains("fp")) o.assign.fp = get_str(dj, "fp", "options.dataflow");
    if (dj.contains("bp")) o.assign.bp = get_str(dj, "bp", "options.dataflow");
    if (dj.contains("wg")) o.assign.wg = get_str(dj, "wg", "options.dataflow");
  }
  if (j.contains("scope")) o.eval.scope = scope_from_name(get_str(j, "scope", "options"));
  if (j.contains("wg_bias_term")) {
    if (!j["wg_bias_term"].is_boolean())
      throw ConfigError("options: \"wg_bias_term\" must be a boolean");
    o.eval.wg_bias_term = j["wg_bias_term"].get<bool>();
  }
  if (j.contains("strict_tiling")) {
    if (!j["strict_tiling"].is_boolean())
      throw ConfigError("options: \"strict_tiling\" must be a boolean");
    o.eval.strict_tiling = j["strict_tiling"].get<bool>();
  }
  if (j.contains("oracle_cap"))
    o.eval.oracle_cap = static_cast<std::uint64_t>(get_int(j, "oracle_cap", "options"));
  if (j.contains("use_oracle_tallies")) {
    if (!j["use_oracle_tallies"].is_boolean())
      throw ConfigError("options: \"use_oracle_tallies\" must be a boolean");
    o.eval.use_oracle_tallies = j["use_oracle_tallies"].get<bool>();
  }
  if (j.contains("custom_dataflows")) {
    int idx = 0;
    for (const json& tj : j["custom_dataflows"])
      o.eval.custom_templates.push_back(custom_template_from_json(tj, idx++));
  }
  if (j.contains("total_macs")) o.total_macs = get_int(j, "total_macs", "options");
  if (j.contains("templates")) {
    for (const json& t : j["templates"]) {
      if (!t.is_string()) throw ConfigError("options: \"templates\" must hold strings");
      o.templates.push_back(t.get<std::string>());
    }
  }
  if (j.contains("locked")) {
    if (!j["locked"].is_boolean())
      throw ConfigError("options: \"locked\" must be a boolean");
    o.locked = j["locked"].get<bool>();
  }
  if (j.contains("jobs")) o.jobs = static_cast<int>(get_int(j, "jobs", "options"));
  if (j.contains("schemes")) {
    for (const json& sj : j["schemes"]) {
      if (!sj.is_string()) throw ConfigError("options: \"schemes\" must hold strings");
      const std::string s = sj.get<std::string>();
      const auto x = s.find('x');
      if (x == std::string::npos)
        throw ConfigError("options: scheme \"" + s + "\" must look like 16x16");
      try {
        o.scheme_filter.push_back(
            {std::stoll(s.substr(0, x)), std::stoll(s.substr(x + 1)), UnitKind::MuxAdd});
      } catch (const std::exception&) {
        throw ConfigError("options: scheme \"" + s + "\" must look like 16x16");
      }
    }
  }
  if (j.contains("seeds")) o.seeds = static_cast<int>(get_int(j, "seeds", "options"));
  if (j.contains("corrupt_ru")) {
    if (!j["corrupt_ru"].is_boolean())
      throw ConfigError("options: \"corrupt_ru\" must be a boolean");
    o.corrupt_ru = j["corrupt_ru"].get<bool>();
  }
  return o;
}

namespace {

json mem_map_json(const std::array<double, kNumMems>& pj) {
  json out = json::object();
  for (int i = 0; i < kNumMems; ++i) {
    if (pj[i] != 0) out[mem_name(static_cast<MemId>(i))] = pj[i];
  }
  return out;
}

json report_json(const EnergyReport& r) {
  json j;
  j["eocas_schema"] = kSchemaVersion;
  j["kind"] = "energy_report";
  j["model"] = r.model;
  j["arch"] = r.arch;
  j["scope"] = scope_name(r.scope);
  j["dataflow"] = {{"fp", r.dataflow.fp}, {"bp", r.dataflow.bp}, {"wg", r.dataflow.wg}};
  json phases = json::object();
  for (int pi = 0; pi < kNumPhases; ++pi) {
    json pj;
    pj["compute_pj"] = r.phases[pi].compute_pj;
    pj["memory_pj"] = r.phases[pi].memory_pj;
    pj["per_memory_pj"] = mem_map_json(r.phase_memory_pj[pi]);
    phases[phase_name(static_cast<Phase>(pi))] = pj;
  }
  j["phases"] = phases;
  j["soma"] = {{"compute_pj", r.soma_compute_pj},
               {"traffic_pj", r.soma_traffic_pj},
               {"per_memory_pj", mem_map_json(r.soma_mem_pj)}};
  j["grad"] = {{"compute_pj", r.grad_compute_pj},
               {"traffic_pj", r.grad_traffic_pj},
               {"per_memory_pj", mem_map_json(r.grad_mem_pj)}};
  j["per_memory_pj"] = mem_map_json(r.per_memory_pj);
  j["e_c_pj"] = r.e_c_pj;
  j["e_m_pj"] = r.e_m_pj;
  j["e_total_pj"] = r.e_total_pj;
  j["conv_total_pj"] = r.conv_total_pj;
  j["full_total_pj"] = r.full_total_pj;
  j["e_total_uj"] = r.e_total_pj * 1e-6;
  return j;
}

}  // namespace

std::string report_to_json(const EnergyReport& r) { return report_json(r).dump(2) + "\n"; }

std::string breakdown_csv(const EnergyReport& r) {
  std::ostringstream os;
  os << "phase,component,memory,pj\n";
  for (int pi = 0; pi < kNumPhases; ++pi) {
    const char* pn = phase_name(static_cast<Phase>(pi));
    os << pn << ",conv_compute,-," << fmt(r.phases[pi].compute_pj) << "\n";
    for (int i = 0; i < kNumMems; ++i) {
      if (r.phase_memory_pj[pi][i] != 0)
        os << pn << ",conv_memory," << mem_name(static_cast<MemId>(i)) << ","
           << fmt(r.phase_memory_pj[pi][i]) << "\n";
    }
  }
  os << "FP,soma_compute,-," << fmt(r.soma_compute_pj) << "\n";
  for (int i = 0; i < kNumMems; ++i) {
    if (r.soma_mem_pj[i] != 0)
      os << "FP,soma_traffic," << mem_name(static_cast<MemId>(i)) << ","
         << fmt(r.soma_mem_pj[i]) << "\n";
  }
  os << "BP,grad_compute,-," << fmt(r.grad_compute_pj) << "\n";
  for (int i = 0; i < kNumMems; ++i) {
    if (r.grad_mem_pj[i] != 0)
      os << "BP,grad_traffic," << mem_name(static_cast<MemId>(i)) << ","
         << fmt(r.grad_mem_pj[i]) << "\n";
  }
  return os.str();
}

std::string sweep_to_json(const SweepResult& r) {
  json j;
  j["eocas_schema"] = kSchemaVersion;
  j["kind"] = "sweep_result";
  j["ranked"] = json::array();
  int rank = 0;
  for (const auto& e : r.ranked) {
    json ej;
    ej["rank"] = ++rank;
    ej["key"] = e.cand.key;
    ej["scheme"] = std::to_string(e.cand.scheme.rows) + "x" +
                   std::to_string(e.cand.scheme.cols);
    ej["dataflow"] = {{"fp", e.cand.assign.fp},
                      {"bp", e.cand.assign.bp},
                      {"wg", e.cand.assign.wg}};
    ej["e_total_pj"] = e.report.e_total_pj;
    ej["conv_total_pj"] = e.report.conv_total_pj;
    ej["full_total_pj"] = e.report.full_total_pj;
    j["ranked"].push_back(ej);
  }
  j["skipped"] = json::array();
  for (const auto& s : r.skipped) {
    j["skipped"].push_back({{"key", s.cand.key}, {"reason", s.reason}});
  }
  if (!r.ranked.empty()) j["optimum"] = r.ranked.front().cand.key;
  return j.dump(2) + "\n";
}

std::string ranking_csv(const SweepResult& r) {
  std::ostringstream os;
  os << "rank,scheme,fp_df,bp_df,wg_df,e_total_pj,feasible\n";
  int rank = 0;
  for (const auto& e : r.ranked) {
    os << ++rank << "," << e.cand.scheme.rows << "x" << e.cand.scheme.cols << ","
       << e.cand.assign.fp << "," << e.cand.assign.bp << "," << e.cand.assign.wg << ","
       << fmt(e.report.e_total_pj) << ",1\n";
  }
  for (const auto& s : r.skipped) {
    os << "-," << s.cand.scheme.rows << "x" << s.cand.scheme.cols << ","
       << s.cand.assign.fp << "," << s.cand.assign.bp << "," << s.cand.assign.wg
       << ",,0\n";
  }
  return os.str();
}

std::string compare_to_json(const std::vector<std::pair<std::string, EnergyReport>>& rows) {
  json j;
  j["eocas_schema"] = kSchemaVersion;
  j["kind"] = "dataflow_comparison";
  j["columns"] = {"fp_spike_conv", "soma", "fp_total", "bp_float_conv",
                  "grad", "bp_total", "wg_total", "overall"};
  j["rows"] = json::array();
  for (const auto& [name, r] : rows) {
    const double fp_conv = r.phase_conv_pj(Phase::FP);
    const double bp_conv = r.phase_conv_pj(Phase::BP);
    const double wg_total = r.phase_conv_pj(Phase::WG);
    json rj;
    rj["dataflow"] = name;
    rj["fp_spike_conv"] = fp_conv;
    rj["soma"] = r.soma_pj();
    rj["fp_total"] = fp_conv + r.soma_pj();
    rj["bp_float_conv"] = bp_conv;
    rj["grad"] = r.grad_pj();
    rj["bp_total"] = bp_conv + r.grad_pj();
    rj["wg_total"] = wg_total;
    rj["overall"] = fp_conv + r.soma_pj() + bp_conv + r.grad_pj() + wg_total;
    j["rows"].push_back(rj);
  }
  return j.dump(2) + "\n";
}

std::string compare_csv(const std::vector<std::pair<std::string, EnergyReport>>& rows) {
  std::ostringstream os;
  os << "dataflow,fp_spike_conv,soma,fp_total,bp_float_conv,grad,bp_total,wg_total,"
        "overall\n";
  for (const auto& [name, r] : rows) {
    const double fp_conv = r.phase_conv_pj(Phase::FP);
    const double bp_conv = r.phase_conv_pj(Phase::BP);
    const double wg_total = r.phase_conv_pj(Phase::WG);
    os << name << "," << fmt(fp_conv) << "," << fmt(r.soma_pj()) << ","
       << fmt(fp_conv + r.soma_pj()) << "," << fmt(bp_conv) << "," << fmt(r.grad_pj())
       << "," << fmt(bp_conv + r.grad_pj()) << "," << fmt(wg_total) << ","
       << fmt(fp_conv + r.soma_pj() + bp_conv + r.grad_pj() + wg_total) << "\n";
  }
  return os.str();
}

std::string verify_to_json(const VerifyResult& r) {
  json j;
  j["eocas_schema"] = kSchemaVersion;
  j["kind"] = "verify_result";
  j["ok"] = r.ok;
  j["summary"] = r.summary;
  j["diffs"] = json::array();
  for (const auto& d : r.diffs) {
    j["diffs"].push_back(
        {{"item", d.item}, {"analytical", d.analytical}, {"simulated", d.simulated}});
  }
  return j.dump(2) + "\n";
}

}  // namespace eocas
