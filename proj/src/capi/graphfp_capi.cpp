#include "graphfp.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/fixtures.hpp"
#include "core/formats.hpp"
#include "core/graph.hpp"
#include "core/index_store.hpp"
#include "core/slabel.hpp"
#include "core/suites.hpp"
#include "core/walk.hpp"

using namespace graphfp;

struct gfp_graph {
  Graph g;
};

namespace {

thread_local std::string t_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
gfp_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const FormatError& e) {
    t_error = e.what();
    return GFP_ERR_FORMAT;
  } catch (const UnsupportedFeatureError& e) {
    t_error = e.what();
    return GFP_ERR_UNSUPPORTED;
  } catch (const StoreError& e) {
    t_error = e.what();
    return GFP_ERR_STORE;
  } catch (const ArgumentError& e) {
    t_error = e.what();
    return GFP_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    t_error = e.what();
    return GFP_ERR_INTERNAL;
  }
}

struct Method {
  char family;  // 'w', 's', or 't'
  int k = 0;
};

Method parse_method(const char* method) {
  if (!method || !*method) throw ArgumentError("method required");
  std::string s = method;
  if (s == "w") return {'w', 0};
  if ((s[0] == 's' || s[0] == 't') && s.size() > 1) {
    for (size_t i = 1; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw ArgumentError("unknown method: " + s);
    return {s[0], std::stoi(s.substr(1))};
  }
  throw ArgumentError("unknown method: " + s);
}

LabelMode parse_mode(const char* mode, LabelMode dflt) {
  if (!mode || !*mode) return dflt;
  std::string s = mode;
  if (s == "exact") return LabelMode::exact;
  if (s == "hashed") return LabelMode::hashed;
  throw ArgumentError("unknown mode: " + s);
}

Fingerprint make_fp(const Graph& g, const Method& m, LabelMode mode, bool wide, int jobs) {
  if (m.family == 's') return fingerprint_s(g, m.k, mode, wide, jobs);
  if (m.family == 't') return fingerprint_t(g, m.k, mode, wide, jobs);
  throw ArgumentError("fingerprints are defined for s and t methods only");
}

}  // namespace

extern "C" {

const char* gfp_version(void) { return "graphfp 1.0 hash v1"; }

const char* gfp_last_error(void) { return t_error.c_str(); }

void gfp_string_free(char* s) { std::free(s); }

gfp_status gfp_graph_parse(const char* bytes, size_t len, const char* format,
                           gfp_graph** out) {
  return guarded([&]() -> gfp_status {
    if (!bytes || !out) throw ArgumentError("null argument");
    Format f = parse_format_name(format ? format : "");
    Graph g = parse_graph(std::string_view(bytes, len), f);
    *out = new gfp_graph{std::move(g)};
    return GFP_OK;
  });
}

gfp_status gfp_graph_serialize(const gfp_graph* g, const char* format, char** out) {
  return guarded([&]() -> gfp_status {
    if (!g || !out) throw ArgumentError("null argument");
    Format f = parse_format_name(format ? format : "");
    *out = dup_string(serialize_graph(g->g, f));
    return GFP_OK;
  });
}

gfp_status gfp_fixture(const char* name, gfp_graph** out) {
  return guarded([&]() -> gfp_status {
    if (!name || !out) throw ArgumentError("null argument");
    const auto& cat = fixtures();
    auto it = cat.find(name);
    if (it == cat.end()) throw ArgumentError("unknown fixture: " + std::string(name));
    *out = new gfp_graph{it->second};
    return GFP_OK;
  });
}

gfp_status gfp_fixture_names(char** out) {
  return guarded([&]() -> gfp_status {
    if (!out) throw ArgumentError("null argument");
    std::string names;
    for (const auto& [name, g] : fixtures()) {
      if (!names.empty()) names += '\n';
      names += name;
    }
    *out = dup_string(names);
    return GFP_OK;
  });
}

void gfp_graph_free(gfp_graph* g) { delete g; }

int gfp_graph_node_count(const gfp_graph* g) { return g ? g->g.node_count() : 0; }

long gfp_graph_edge_count(const gfp_graph* g) { return g ? g->g.edge_count() : 0; }

gfp_status gfp_fingerprint(const gfp_graph* g, const char* method, const char* mode,
                           int wide, int jobs, char** out_line) {
  return guarded([&]() -> gfp_status {
    if (!g || !out_line) throw ArgumentError("null argument");
    Method m = parse_method(method);
    Fingerprint fp = make_fp(g->g, m, parse_mode(mode, LabelMode::hashed), wide != 0, jobs);
    *out_line = dup_string(fp.line());
    return GFP_OK;
  });
}

gfp_status gfp_compare(const gfp_graph* a, const gfp_graph* b, const char* method,
                       const char* mode, int jobs, int* out_equivalent) {
  return guarded([&]() -> gfp_status {
    if (!a || !b || !out_equivalent) throw ArgumentError("null argument");
    Method m = parse_method(method);
    bool eq;
    if (m.family == 'w') {
      eq = w_equivalent(a->g, b->g, jobs);
    } else if (parse_mode(mode, LabelMode::exact) == LabelMode::exact) {
      EquivalenceOptions opts;
      opts.jobs = jobs;
      if (a->g.node_count() != b->g.node_count()) {
        eq = false;
      } else {
        eq = m.family == 's' ? s_equivalent(a->g, b->g, m.k, opts)
                             : t_equivalent(a->g, b->g, m.k, opts);
      }
    } else {
      // Hashed mode: 64-bit digests first, wide-digest confirmation before
      // any equality verdict.
      if (a->g.node_count() != b->g.node_count()) {
        eq = false;
      } else {
        Fingerprint fa = make_fp(a->g, m, LabelMode::hashed, false, jobs);
        Fingerprint fb = make_fp(b->g, m, LabelMode::hashed, false, jobs);
        eq = fa.digest64 == fb.digest64;
        if (eq) {
          Fingerprint wa = make_fp(a->g, m, LabelMode::hashed, true, jobs);
          Fingerprint wb = make_fp(b->g, m, LabelMode::hashed, true, jobs);
          eq = wa.wide == wb.wide;
        }
      }
    }
    *out_equivalent = eq ? 1 : 0;
    return GFP_OK;
  });
}

gfp_status gfp_index_build(const gfp_graph* const* graphs, const char* const* ids,
                           const char* const* sources, size_t count,
                           const char* method, const char* store_path, int jobs) {
  return guarded([&]() -> gfp_status {
    if ((!graphs || !ids) && count > 0) throw ArgumentError("null argument");
    if (!store_path) throw ArgumentError("store path required");
    Method m = parse_method(method ? method : "s2");
    if (m.family == 'w') throw ArgumentError("index methods are s/t fingerprints");
    IndexStore store;
    for (size_t i = 0; i < count; ++i) {
      if (!graphs[i] || !ids[i]) throw ArgumentError("null graph or id");
      IndexRecord rec;
      rec.fingerprint = make_fp(graphs[i]->g, m, LabelMode::hashed, true, jobs);
      rec.id = ids[i];
      rec.source = sources && sources[i] ? sources[i] : "";
      store.append(rec);
    }
    store.save(store_path);
    return GFP_OK;
  });
}

gfp_status gfp_index_query(const gfp_graph* g, const char* method,
                           const char* store_path, char** out_ids) {
  return guarded([&]() -> gfp_status {
    if (!g || !out_ids) throw ArgumentError("null argument");
    if (!store_path) throw ArgumentError("store path required");
    Method m = parse_method(method ? method : "s2");
    if (m.family == 'w') throw ArgumentError("index methods are s/t fingerprints");
    IndexStore store = IndexStore::load(store_path);
    Fingerprint fp = make_fp(g->g, m, LabelMode::hashed, true, 1);
    std::string joined;
    for (const auto& id : store.query(fp)) {
      if (!joined.empty()) joined += '\n';
      joined += id;
    }
    *out_ids = dup_string(joined);
    return GFP_OK;
  });
}

gfp_status gfp_suite_names(char** out) {
  return guarded([&]() -> gfp_status {
    if (!out) throw ArgumentError("null argument");
    std::string names;
    for (const auto& name : suite_names()) {
      if (!names.empty()) names += '\n';
      names += name;
    }
    *out = dup_string(names);
    return GFP_OK;
  });
}

gfp_status gfp_run_suite(const char* name, uint64_t seed, int jobs, int pairs,
                         int* out_passed, char** out_report) {
  return guarded([&]() -> gfp_status {
    if (!name) throw ArgumentError("null argument");
    SuiteParams params;
    if (seed) params.seed = seed;
    params.jobs = jobs;
    params.pairs = pairs;
    SuiteReport rep = run_suite(name, params);
    if (out_passed) *out_passed = rep.passed() ? 1 : 0;
    if (out_report) *out_report = dup_string(rep.text_report());
    return GFP_OK;
  });
}

}  // extern "C"
