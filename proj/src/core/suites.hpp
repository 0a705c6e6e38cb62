#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace graphfp {

struct SuiteFailure {
  size_t case_index = 0;
  std::string detail;  // self-contained replay data (graphs, anchors, level)
};

struct SuiteReport {
  std::string name;
  size_t cases = 0;
  std::vector<SuiteFailure> failures;
  double wall_seconds = 0.0;
  uint64_t seed = 0;

  bool passed() const { return failures.empty(); }
  std::string text_report() const;
  std::string summary_line() const;  // "name pass|fail cases failures seed"
};

struct SuiteParams {
  uint64_t seed = 0x676670u;  // recorded in every report
  int jobs = 1;
  int pairs = 0;  // 0 => per-suite default
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteParams& params = {});

// Reproducible generators used by the suites.
Graph random_graph(int n, double p, std::mt19937_64& rng);
Graph random_tree(int n, std::mt19937_64& rng);  // random parent arrays
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

}  // namespace graphfp
