// graphfp command-line tool: fingerprinting, comparison, index build/query,
// and theorem-suite verification over the shared library's C interface.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphfp.h"

namespace {

struct CliError {
  std::string message;
  int exit_code;
};

std::string take_string(char* s) {
  std::string out = s ? s : "";
  gfp_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{"cannot open " + path, 2};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct NamedInput {
  gfp_graph* graph;
  std::string id;
  std::string source;
};

// Loads inputs: `fixture:NAME` pulls from the bundled catalog; otherwise the
// path is read in the given format. The line formats (graph6/sparse6) yield
// one graph per non-empty line with ids `path:lineno`; edgelist files hold a
// single graph. Parse failures are reported and counted, not fatal.
std::vector<NamedInput> load_inputs(const std::vector<std::string>& paths,
                                    const std::string& format, int& parse_errors) {
  std::vector<NamedInput> out;
  for (const auto& path : paths) {
    if (path.rfind("fixture:", 0) == 0) {
      std::string name = path.substr(8);
      gfp_graph* g = nullptr;
      if (gfp_fixture(name.c_str(), &g) != GFP_OK)
        throw CliError{std::string(gfp_last_error()), 2};
      out.push_back({g, path, "fixture"});
      continue;
    }
    std::string bytes = read_file(path);
    if (format == "edgelist") {
      gfp_graph* g = nullptr;
      if (gfp_graph_parse(bytes.data(), bytes.size(), format.c_str(), &g) != GFP_OK) {
        std::cerr << path << ": " << gfp_last_error() << '\n';
        ++parse_errors;
        continue;
      }
      out.push_back({g, path, path});
      continue;
    }
    std::istringstream lines(bytes);
    std::string line;
    size_t lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      if (line.empty()) continue;
      gfp_graph* g = nullptr;
      if (gfp_graph_parse(line.data(), line.size(), format.c_str(), &g) != GFP_OK) {
        std::cerr << path << ':' << lineno << ": " << gfp_last_error() << '\n';
        ++parse_errors;
        continue;
      }
      out.push_back({g, path + ":" + std::to_string(lineno), path});
    }
  }
  return out;
}

void free_inputs(std::vector<NamedInput>& inputs) {
  for (auto& in : inputs) gfp_graph_free(in.graph);
  inputs.clear();
}

std::string default_store(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  const char* env = std::getenv("GRAPHFP_STORE");
  if (env && *env) return env;
  throw CliError{"no index store given (use --store or GRAPHFP_STORE)", 2};
}

struct Options {
  std::string method = "s2";
  std::string mode;  // command-specific default
  std::string format = "graph6";
  std::string store;
  int jobs = 1;
  uint64_t seed = 0;
  int pairs = 0;
  bool wide = false;
};

std::string config_echo(const Options& o, const std::string& mode) {
  std::ostringstream out;
  out << "# graphfp method=" << o.method << " mode=" << mode << " format=" << o.format
      << " jobs=" << o.jobs << " seed=" << o.seed;
  return out.str();
}

int cmd_fingerprint(const Options& o, const std::vector<std::string>& paths) {
  std::string mode = o.mode.empty() ? "hashed" : o.mode;
  int parse_errors = 0;
  auto inputs = load_inputs(paths, o.format, parse_errors);
  std::cout << config_echo(o, mode) << '\n';
  int errors = parse_errors;
  for (const auto& in : inputs) {
    char* line = nullptr;
    if (gfp_fingerprint(in.graph, o.method.c_str(), mode.c_str(), o.wide ? 1 : 0,
                        o.jobs, &line) != GFP_OK) {
      std::cerr << in.id << ": " << gfp_last_error() << '\n';
      ++errors;
      continue;
    }
    std::cout << in.id << '\t' << take_string(line) << '\n';
  }
  free_inputs(inputs);
  return errors ? 2 : 0;
}

int cmd_compare(const Options& o, const std::vector<std::string>& paths) {
  std::string mode = o.mode.empty() ? "exact" : o.mode;
  int parse_errors = 0;
  auto inputs = load_inputs(paths, o.format, parse_errors);
  if (parse_errors || inputs.size() != 2) {
    free_inputs(inputs);
    throw CliError{"compare needs exactly two parsable graphs", 2};
  }
  int eq = 0;
  gfp_status st = gfp_compare(inputs[0].graph, inputs[1].graph, o.method.c_str(),
                              mode.c_str(), o.jobs, &eq);
  if (st != GFP_OK) {
    std::string err = gfp_last_error();
    free_inputs(inputs);
    throw CliError{err, 2};
  }
  std::cout << inputs[0].id << '\t' << inputs[1].id << '\t' << o.method << '\t' << mode
            << '\t' << (eq ? "equivalent" : "not-equivalent") << '\n';
  free_inputs(inputs);
  return eq ? 0 : 1;
}

int cmd_index_build(const Options& o, const std::vector<std::string>& paths) {
  std::string store = default_store(o.store);
  int parse_errors = 0;
  auto inputs = load_inputs(paths, o.format, parse_errors);
  std::vector<const gfp_graph*> graphs;
  std::vector<const char*> ids, sources;
  for (const auto& in : inputs) {
    graphs.push_back(in.graph);
    ids.push_back(in.id.c_str());
    sources.push_back(in.source.c_str());
  }
  gfp_status st = gfp_index_build(graphs.data(), ids.data(), sources.data(),
                                  graphs.size(), o.method.c_str(), store.c_str(), o.jobs);
  if (st != GFP_OK) {
    std::string err = gfp_last_error();
    free_inputs(inputs);
    throw CliError{err, 2};
  }
  std::cout << "indexed " << graphs.size() << " graphs into " << store << '\n';
  free_inputs(inputs);
  return parse_errors ? 2 : 0;
}

int cmd_index_query(const Options& o, const std::vector<std::string>& paths) {
  std::string store = default_store(o.store);
  int parse_errors = 0;
  auto inputs = load_inputs(paths, o.format, parse_errors);
  if (parse_errors || inputs.size() != 1) {
    free_inputs(inputs);
    throw CliError{"index-query needs exactly one parsable graph", 2};
  }
  char* ids = nullptr;
  gfp_status st = gfp_index_query(inputs[0].graph, o.method.c_str(), store.c_str(), &ids);
  if (st != GFP_OK) {
    std::string err = gfp_last_error();
    free_inputs(inputs);
    throw CliError{err, 2};
  }
  std::string joined = take_string(ids);
  if (!joined.empty()) std::cout << joined << '\n';
  free_inputs(inputs);
  return 0;
}

int cmd_verify(const Options& o, std::vector<std::string> names) {
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    char* all = nullptr;
    if (gfp_suite_names(&all) != GFP_OK) throw CliError{std::string(gfp_last_error()), 2};
    names.clear();
    std::istringstream in(take_string(all));
    std::string name;
    while (std::getline(in, name))
      if (!name.empty()) names.push_back(name);
  }
  bool all_passed = true;
  for (const auto& name : names) {
    int passed = 0;
    char* report = nullptr;
    if (gfp_run_suite(name.c_str(), o.seed, o.jobs, o.pairs, &passed, &report) != GFP_OK)
      throw CliError{std::string(gfp_last_error()), 2};
    std::cout << take_string(report);
    all_passed = all_passed && passed;
  }
  return all_passed ? 0 : 1;
}

void add_common(CLI::App* cmd, Options& o, bool with_method = true) {
  if (with_method) cmd->add_option("--method", o.method, "method: w, sK, or tK");
  cmd->add_option("--mode", o.mode, "exact or hashed");
  cmd->add_option("--format", o.format, "graph6, sparse6, or edgelist")
      ->check(CLI::IsMember({"graph6", "sparse6", "edgelist"}));
  cmd->add_option("--jobs", o.jobs, "parallelism degree");
  cmd->add_option("--seed", o.seed, "random seed for reproducibility");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string("graph fingerprints (") + gfp_version() + ")"};
  app.require_subcommand(1);

  Options o;
  std::vector<std::string> inputs;

  auto* fp = app.add_subcommand("fingerprint", "fingerprint input graphs");
  add_common(fp, o);
  fp->add_flag("--wide", o.wide, "include the wide digest");
  fp->add_option("inputs", inputs, "files, '-', or fixture:NAME");

  auto* cmp = app.add_subcommand("compare", "compare two graphs");
  add_common(cmp, o);
  cmp->add_option("inputs", inputs, "two graphs")->expected(2);

  auto* ib = app.add_subcommand("index-build", "build a fingerprint index");
  add_common(ib, o);
  ib->add_option("--store", o.store, "index store path (or GRAPHFP_STORE)");
  ib->add_option("inputs", inputs, "graphs to index");

  auto* iq = app.add_subcommand("index-query", "query a fingerprint index");
  add_common(iq, o);
  iq->add_option("--store", o.store, "index store path (or GRAPHFP_STORE)");
  iq->add_option("inputs", inputs, "query graph")->expected(1);

  auto* vf = app.add_subcommand("verify", "run verification suites");
  vf->add_option("--jobs", o.jobs, "parallelism degree");
  vf->add_option("--seed", o.seed, "random seed for reproducibility");
  vf->add_option("--pairs", o.pairs, "override per-suite random case count");
  vf->add_option("inputs", inputs, "suite names, or 'all'");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fp->parsed()) return cmd_fingerprint(o, inputs);
    if (cmp->parsed()) return cmd_compare(o, inputs);
    if (ib->parsed()) return cmd_index_build(o, inputs);
    if (iq->parsed()) return cmd_index_query(o, inputs);
    if (vf->parsed()) return cmd_verify(o, inputs);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.exit_code;
  }
  return 2;
}
