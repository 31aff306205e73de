#pragma once
#include <string>
#include <vector>

#include "kpde/problem.hpp"

namespace kpde {

// parsed harness configuration: flat `key = value` lines, '#' comments,
// comma-separated lists, and A..B doubling ranges for grids
struct HarnessConfig {
  std::string command;  // run | converge | stability | compare | probe
  std::string preset_name;
  std::vector<int> grids;  // converge
  int n = 0, ny = 0;       // run
  int k = 3;
  std::vector<double> cfls;
  double t_end = -1;  // negative: preset default
  Variant variant = Variant::H3;
  double beta2 = -1, beta1 = -1;
  std::string out_dir = ".";
  std::vector<double> snapshots;
  int threads = 1;
  // stability
  std::string mode = "all";  // semi1d | semi2d | full | all
  double cross_ratio = 0.0;
  double beta = -1;  // scan beta override; negative scans the limit value
  // compare
  std::vector<int> ks;
  double target = 1e-4;
  int reps = 5;
  // probe
  std::string function = "sin_x";
  std::vector<double> alphas;
  std::vector<std::string> warnings;  // filled by validate
};

HarnessConfig parse_config_text(const std::string& text, const std::string& source_name);
HarnessConfig parse_config_file(const std::string& path);

// fill preset-dependent defaults, record soft warnings (e.g. beta above the
// stability bound), throw config_error on hard inconsistencies
void validate_config(HarnessConfig& hc);

}  // namespace kpde
