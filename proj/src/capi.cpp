#include "eocas.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "core/config.hpp"

using json = nlohmann::ordered_json;

struct eocas_model {
  eocas::SnnModel m;
};

struct eocas_arch {
  eocas::ArchConfig a;
};

namespace {

thread_local std::string g_last_error;

char* dup_str(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
eocas_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const eocas::ConfigError& e) {
    g_last_error = e.what();
    return EOCAS_ERR_CONFIG;
  } catch (const eocas::UsageError& e) {
    g_last_error = e.what();
    return EOCAS_ERR_CONFIG;
  } catch (const eocas::InfeasibleError& e) {
    g_last_error = e.what();
    return EOCAS_ERR_INFEASIBLE;
  } catch (const eocas::ResourceError& e) {
    g_last_error = e.what();
    return EOCAS_ERR_RESOURCE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return EOCAS_ERR_CONFIG;
  }
}

std::string opt_str(const char* s) { return s ? std::string(s) : std::string(); }

}  // namespace

extern "C" {

const char* eocas_version(void) { return "1.0.0"; }

const char* eocas_last_error(void) { return g_last_error.c_str(); }

void eocas_str_free(char* s) { delete[] s; }

eocas_status eocas_model_from_json(const char* text, eocas_model** out) {
  return guarded([&] {
    if (!text || !out) throw eocas::UsageError("null argument");
    auto* h = new eocas_model{eocas::model_from_json(text)};
    *out = h;
    return EOCAS_OK;
  });
}

eocas_status eocas_model_to_json(const eocas_model* m, char** out) {
  return guarded([&] {
    if (!m || !out) throw eocas::UsageError("null argument");
    *out = dup_str(eocas::model_to_json(m->m));
    return EOCAS_OK;
  });
}

void eocas_model_free(eocas_model* m) { delete m; }

eocas_status eocas_arch_from_json(const char* text, eocas_arch** out) {
  return guarded([&] {
    if (!text || !out) throw eocas::UsageError("null argument");
    auto* h = new eocas_arch{eocas::arch_from_json(text)};
    *out = h;
    return EOCAS_OK;
  });
}

eocas_status eocas_arch_to_json(const eocas_arch* a, char** out) {
  return guarded([&] {
    if (!a || !out) throw eocas::UsageError("null argument");
    *out = dup_str(eocas::arch_to_json(a->a));
    return EOCAS_OK;
  });
}

void eocas_arch_free(eocas_arch* a) { delete a; }

eocas_status eocas_evaluate_json(const eocas_model* m, const eocas_arch* a,
                                 const char* options_json, char** out) {
  return guarded([&] {
    if (!m || !a || !out) throw eocas::UsageError("null argument");
    const eocas::RunOptions o = eocas::options_from_json(opt_str(options_json));
    const eocas::EnergyReport rep = eocas::evaluate(m->m, a->a, o.assign, o.eval);
    json j;
    j["report"] = json::parse(eocas::report_to_json(rep));
    j["breakdown_csv"] = eocas::breakdown_csv(rep);
    *out = dup_str(j.dump(2) + "\n");
    return EOCAS_OK;
  });
}

eocas_status eocas_explore_json(const eocas_model* m, const eocas_arch* a,
                                const char* options_json, char** out) {
  return guarded([&] {
    if (!m || !a || !out) throw eocas::UsageError("null argument");
    const eocas::RunOptions o = eocas::options_from_json(opt_str(options_json));
    std::vector<std::string> templates = o.templates;
    if (templates.empty()) {
      for (const auto& t : eocas::builtin_templates()) templates.push_back(t.name);
    }
    eocas::SweepOptions so;
    so.eval = o.eval;
    so.locked = o.locked;
    so.jobs = o.jobs;
    so.scheme_filter = o.scheme_filter;
    const eocas::SweepResult res =
        eocas::sweep(m->m, a->a, o.total_macs, templates, so);
    json j;
    j["sweep"] = json::parse(eocas::sweep_to_json(res));
    j["ranking_csv"] = eocas::ranking_csv(res);
    *out = dup_str(j.dump(2) + "\n");
    return EOCAS_OK;
  });
}

eocas_status eocas_compare_json(const eocas_model* m, const eocas_arch* a,
                                const char* options_json, char** out) {
  return guarded([&] {
    if (!m || !a || !out) throw eocas::UsageError("null argument");
    const eocas::RunOptions o = eocas::options_from_json(opt_str(options_json));
    std::vector<std::string> templates = o.templates;
    if (templates.empty()) {
      for (const auto& t : eocas::builtin_templates()) templates.push_back(t.name);
    }
    const auto rows = eocas::compare_dataflows(m->m, a->a, templates, o.eval);
    json j;
    j["comparison"] = json::parse(eocas::compare_to_json(rows));
    j["comparison_csv"] = eocas::compare_csv(rows);
    *out = dup_str(j.dump(2) + "\n");
    return EOCAS_OK;
  });
}

eocas_status eocas_verify_json(const eocas_model* m, const eocas_arch* a,
                               const char* options_json, char** out) {
  return guarded([&] {
    if (!m || !a || !out) throw eocas::UsageError("null argument");
    const eocas::RunOptions o = eocas::options_from_json(opt_str(options_json));
    eocas::VerifyOptions vo;
    vo.eval = o.eval;
    vo.assign = o.assign;
    vo.seeds = o.seeds;
    vo.corrupt_ru = o.corrupt_ru;
    const eocas::VerifyResult res = eocas::verify(m->m, a->a, vo);
    *out = dup_str(eocas::verify_to_json(res));
    if (!res.ok) {
      g_last_error = res.summary;
      return EOCAS_ERR_MISMATCH;
    }
    return EOCAS_OK;
  });
}

eocas_status eocas_dump_dataflow_json(const eocas_model* m, const eocas_arch* a,
                                      const char* options_json, char** out) {
  return guarded([&] {
    if (!m || !a || !out) throw eocas::UsageError("null argument");
    const eocas::RunOptions o = eocas::options_from_json(opt_str(options_json));
    json j;
    j["dumps"] = json::array();
    for (const eocas::ConvWorkload& w : eocas::build_workloads(m->m)) {
      const eocas::DataflowTemplate& tmpl = eocas::find_template(
          o.eval.custom_templates, o.assign.for_phase(w.phase));
      const eocas::MappedDataflow mapped = eocas::instantiate(tmpl, w, a->a);
      j["dumps"].push_back({{"layer", w.layer},
                            {"phase", eocas::phase_name(w.phase)},
                            {"dataflow", mapped.dataflow},
                            {"nest", eocas::dump_dataflow(mapped)}});
    }
    *out = dup_str(j.dump(2) + "\n");
    return EOCAS_OK;
  });
}

}  // extern "C"
