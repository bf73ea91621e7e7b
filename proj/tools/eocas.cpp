// eocas command line front end. Talks to the core exclusively through the
// public C API so it exercises the same surface as external embedders.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eocas.h"

using json = nlohmann::ordered_json;

namespace {

bool log_enabled() {
  const char* v = std::getenv("EOCAS_LOG");
  return v && *v && std::string(v) != "0";
}

void log_line(const std::string& msg) {
  if (log_enabled()) std::cerr << "[eocas] " << msg << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(2);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    std::exit(2);
  }
  out << text;
  log_line("wrote " + out_path);
}

struct CommonArgs {
  std::string model_path;
  std::string arch_path;
  std::string options_path;
  std::string out_path;
  std::string dataflow;
  std::string fp, bp, wg;
  std::string scope;
  std::int64_t oracle_cap = -1;
  bool use_oracle = false;
  bool no_wg_bias = false;
  bool strict_tiling = false;
};

void add_common(CLI::App* cmd, CommonArgs& c) {
  cmd->add_option("--model", c.model_path, "model JSON file")->required();
  cmd->add_option("--arch", c.arch_path, "architecture JSON file")->required();
  cmd->add_option("--options", c.options_path, "options JSON file");
  cmd->add_option("--out", c.out_path, "output file (default stdout)");
  cmd->add_option("--dataflow", c.dataflow, "dataflow for all three phases");
  cmd->add_option("--fp", c.fp, "dataflow for the forward phase");
  cmd->add_option("--bp", c.bp, "dataflow for the backward phase");
  cmd->add_option("--wg", c.wg, "dataflow for the weight-gradient phase");
  cmd->add_option("--scope", c.scope, "conv-only or full-step");
  cmd->add_option("--oracle-cap", c.oracle_cap, "max simulated loop points");
  cmd->add_flag("--use-oracle", c.use_oracle,
                "derive traffic from simulation instead of the closed form");
  cmd->add_flag("--no-wg-bias", c.no_wg_bias,
                "drop the per-tap bias accumulation from the WG add count");
  cmd->add_flag("--strict-tiling", c.strict_tiling,
                "reject mappings whose spatial split underfills the array");
}

// Overlay command-line knobs onto the options file (flags win).
json build_options(const CommonArgs& c) {
  json o = json::object();
  if (!c.options_path.empty()) {
    o = json::parse(read_file(c.options_path), nullptr, false);
    if (o.is_discarded()) {
      std::cerr << "error: " << c.options_path << ": malformed JSON\n";
      std::exit(2);
    }
  }
  if (!c.dataflow.empty() || !c.fp.empty() || !c.bp.empty() || !c.wg.empty()) {
    if (!o.contains("dataflow")) o["dataflow"] = json::object();
    if (!c.dataflow.empty()) {
      o["dataflow"]["fp"] = c.dataflow;
      o["dataflow"]["bp"] = c.dataflow;
      o["dataflow"]["wg"] = c.dataflow;
    }
    if (!c.fp.empty()) o["dataflow"]["fp"] = c.fp;
    if (!c.bp.empty()) o["dataflow"]["bp"] = c.bp;
    if (!c.wg.empty()) o["dataflow"]["wg"] = c.wg;
  }
  if (!c.scope.empty()) o["scope"] = c.scope;
  if (c.oracle_cap >= 0) o["oracle_cap"] = c.oracle_cap;
  if (c.use_oracle) o["use_oracle_tallies"] = true;
  if (c.no_wg_bias) o["wg_bias_term"] = false;
  if (c.strict_tiling) o["strict_tiling"] = true;
  return o;
}

struct Handles {
  eocas_model* model = nullptr;
  eocas_arch* arch = nullptr;
  ~Handles() {
    eocas_model_free(model);
    eocas_arch_free(arch);
  }
};

[[noreturn]] void fail(eocas_status st) {
  std::cerr << "error: " << eocas_last_error() << "\n";
  std::exit(static_cast<int>(st));
}

void load_handles(const CommonArgs& c, Handles& h) {
  log_line("loading model " + c.model_path);
  eocas_status st = eocas_model_from_json(read_file(c.model_path).c_str(), &h.model);
  if (st != EOCAS_OK) fail(st);
  log_line("loading arch " + c.arch_path);
  st = eocas_arch_from_json(read_file(c.arch_path).c_str(), &h.arch);
  if (st != EOCAS_OK) fail(st);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  eocas_str_free(s);
  return out;
}

int run_simple(const CommonArgs& c, const json& opts,
               eocas_status (*fn)(const eocas_model*, const eocas_arch*, const char*,
                                  char**),
               const char* csv_key, const std::string& csv_path) {
  Handles h;
  load_handles(c, h);
  char* res = nullptr;
  const eocas_status st = fn(h.model, h.arch, opts.dump().c_str(), &res);
  if (st != EOCAS_OK && !res) fail(st);
  const std::string text = take(res);
  write_output(c.out_path, text);
  if (csv_key && !csv_path.empty()) {
    const json j = json::parse(text);
    if (j.contains(csv_key)) write_output(csv_path, j[csv_key].get<std::string>());
  }
  if (st != EOCAS_OK) {
    std::cerr << "error: " << eocas_last_error() << "\n";
    return static_cast<int>(st);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EOCAS: analytical energy model and design-space explorer for "
               "spiking-network training accelerators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(eocas_version()));

  CommonArgs ev, ex, cmp, ver, dmp;
  std::string ev_csv, ex_csv, cmp_csv;
  std::int64_t total_macs = -1;
  std::vector<std::string> templates;
  std::vector<std::string> schemes;
  bool locked = false;
  int jobs = 0;
  int seeds = -1;
  bool corrupt_ru = false;

  CLI::App* c_ev = app.add_subcommand("evaluate", "energy report for one mapping");
  add_common(c_ev, ev);
  c_ev->add_option("--breakdown-csv", ev_csv, "write the per-component CSV here");

  CLI::App* c_ex = app.add_subcommand("explore", "sweep array schemes and dataflows");
  add_common(c_ex, ex);
  c_ex->add_option("--total-macs", total_macs, "MAC budget per array");
  c_ex->add_option("--templates", templates, "dataflows to sweep (default: all)");
  c_ex->add_option("--schemes", schemes, "restrict to these ExF schemes, e.g. 16x16");
  c_ex->add_flag("--locked", locked, "use one dataflow across all three phases");
  c_ex->add_option("--jobs", jobs, "worker threads");
  c_ex->add_option("--ranking-csv", ex_csv, "write the ranking CSV here");

  CLI::App* c_cmp = app.add_subcommand("compare", "per-phase energy per dataflow");
  add_common(c_cmp, cmp);
  c_cmp->add_option("--templates", templates, "dataflows to compare (default: all)");
  c_cmp->add_option("--compare-csv", cmp_csv, "write the comparison CSV here");

  CLI::App* c_ver =
      app.add_subcommand("verify", "diff the closed-form model against simulation");
  add_common(c_ver, ver);
  c_ver->add_option("--seeds", seeds, "sparse Monte-Carlo seeds (0 = skip)");
  c_ver->add_flag("--corrupt-ru", corrupt_ru,
                  "perturb one reuse factor to force a mismatch (test fixture)");

  CLI::App* c_dmp = app.add_subcommand("dump-dataflow", "print the bound loop nests");
  add_common(c_dmp, dmp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (c_ev->parsed()) {
    return run_simple(ev, build_options(ev), eocas_evaluate_json, "breakdown_csv",
                      ev_csv);
  }
  if (c_ex->parsed()) {
    json o = build_options(ex);
    if (total_macs >= 0) o["total_macs"] = total_macs;
    if (!templates.empty()) o["templates"] = templates;
    if (!schemes.empty()) o["schemes"] = schemes;
    if (locked) o["locked"] = true;
    if (jobs > 0) o["jobs"] = jobs;
    return run_simple(ex, o, eocas_explore_json, "ranking_csv", ex_csv);
  }
  if (c_cmp->parsed()) {
    json o = build_options(cmp);
    if (!templates.empty()) o["templates"] = templates;
    return run_simple(cmp, o, eocas_compare_json, "comparison_csv", cmp_csv);
  }
  if (c_ver->parsed()) {
    json o = build_options(ver);
    if (seeds >= 0) o["seeds"] = seeds;
    if (corrupt_ru) o["corrupt_ru"] = true;
    return run_simple(ver, o, eocas_verify_json, nullptr, "");
  }
  if (c_dmp->parsed()) {
    return run_simple(dmp, build_options(dmp), eocas_dump_dataflow_json, nullptr, "");
  }
  return 2;
}
