#pragma once
#include <string>
#include <utility>
#include <vector>

#include "kpde/config.hpp"

namespace kpde {

// each driver returns (filename, content) pairs; run_command writes them,
// atomically, under hc.out_dir and echoes tables to stdout
using NamedText = std::pair<std::string, std::string>;

std::vector<NamedText> run_simulation(const HarnessConfig& hc);
std::vector<NamedText> run_convergence(const HarnessConfig& hc);
std::vector<NamedText> run_stability_scan(const HarnessConfig& hc);
std::vector<NamedText> run_compare(const HarnessConfig& hc);
std::vector<NamedText> run_probe(const HarnessConfig& hc);

// dispatch on hc.command; returns the process exit code
// (0 ok, 2 config error, 3 blow-up)
int run_command(const HarnessConfig& hc);

}  // namespace kpde
