#include "kpde/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "kpde/errors.hpp"
#include "kpde/rk.hpp"

namespace kpde {

static std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

static std::string where(const std::string& src, int line) {
  return " (line " + std::to_string(line) + " of " + src + ")";
}

static double to_double(const std::string& s, const std::string& src, int line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw config_error("expected a number, got '" + s + "'" + where(src, line));
  }
}

static int to_int(const std::string& s, const std::string& src, int line) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return (int)v;
  } catch (const std::exception&) {
    throw config_error("expected an integer, got '" + s + "'" + where(src, line));
  }
}

static std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

static std::vector<double> to_dlist(const std::string& s, const std::string& src, int line) {
  std::vector<double> out;
  for (const auto& it : split_list(s)) out.push_back(to_double(it, src, line));
  return out;
}

// grid lists accept plain integers and A..B doubling ranges (B = A 2^m)
static std::vector<int> to_grids(const std::string& s, const std::string& src, int line) {
  std::vector<int> out;
  for (const auto& it : split_list(s)) {
    const auto dots = it.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(it, src, line));
      continue;
    }
    const int a = to_int(trim(it.substr(0, dots)), src, line);
    const int b = to_int(trim(it.substr(dots + 2)), src, line);
    if (a < 6 || b < a)
      throw config_error("bad grid range '" + it + "'" + where(src, line));
    for (long v = a;; v *= 2) {
      out.push_back((int)v);
      if (v == b) break;
      if (v * 2 > (long)b)
        throw config_error("grid range end " + std::to_string(b) +
                           " is not a doubling of " + std::to_string(a) + where(src, line));
    }
  }
  return out;
}

HarnessConfig parse_config_text(const std::string& text, const std::string& source_name) {
  HarnessConfig hc;
  std::stringstream ss(text);
  std::string raw;
  int line = 0;
  while (std::getline(ss, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    const auto eq = raw.find('=');
    if (eq == std::string::npos)
      throw config_error("expected 'key = value', got '" + raw + "'" +
                         where(source_name, line));
    const std::string key = trim(raw.substr(0, eq));
    const std::string val = trim(raw.substr(eq + 1));
    if (key.empty() || val.empty())
      throw config_error("empty key or value" + where(source_name, line));

    if (key == "command") hc.command = val;
    else if (key == "preset") hc.preset_name = val;
    else if (key == "grids") hc.grids = to_grids(val, source_name, line);
    else if (key == "n") hc.n = to_int(val, source_name, line);
    else if (key == "ny") hc.ny = to_int(val, source_name, line);
    else if (key == "k") hc.k = to_int(val, source_name, line);
    else if (key == "cfl") hc.cfls = to_dlist(val, source_name, line);
    else if (key == "t_end") hc.t_end = to_double(val, source_name, line);
    else if (key == "variant") hc.variant = variant_from_string(val);
    else if (key == "beta1") hc.beta1 = to_double(val, source_name, line);
    else if (key == "beta2") hc.beta2 = to_double(val, source_name, line);
    else if (key == "out") hc.out_dir = val;
    else if (key == "snapshots") hc.snapshots = to_dlist(val, source_name, line);
    else if (key == "threads") hc.threads = to_int(val, source_name, line);
    else if (key == "mode") hc.mode = val;
    else if (key == "cross_ratio") hc.cross_ratio = to_double(val, source_name, line);
    else if (key == "beta") hc.beta = to_double(val, source_name, line);
    else if (key == "ks") {
      hc.ks.clear();
      for (const auto& it : split_list(val)) hc.ks.push_back(to_int(it, source_name, line));
    } else if (key == "target") hc.target = to_double(val, source_name, line);
    else if (key == "reps") hc.reps = to_int(val, source_name, line);
    else if (key == "function") hc.function = val;
    else if (key == "alphas") hc.alphas = to_dlist(val, source_name, line);
    else
      throw config_error("unknown key '" + key + "'" + where(source_name, line));
  }
  return hc;
}

HarnessConfig parse_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw config_error("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_config_text(buf.str(), path);
}

void validate_config(HarnessConfig& hc) {
  static const char* commands[] = {"run", "converge", "stability", "compare", "probe"};
  bool ok = false;
  for (const char* c : commands) ok = ok || hc.command == c;
  if (!ok)
    throw config_error("unknown or missing command '" + hc.command +
                       "' (expected run, converge, stability, compare, or probe)");
  if (hc.k < 1 || hc.k > 3)
    throw config_error("k = " + std::to_string(hc.k) + " is out of range (1, 2, or 3)");
  if (hc.threads < 1) throw config_error("threads must be >= 1");
  for (double c : hc.cfls)
    if (!(c > 0.0)) throw config_error("cfl values must be positive");

  const bool needs_preset = hc.command == "run" || hc.command == "converge";
  ProblemSpec p;
  if (!hc.preset_name.empty()) p = preset(hc.preset_name);  // throws on unknown names
  if (needs_preset) {
    if (hc.preset_name.empty())
      throw config_error("command '" + hc.command + "' needs a preset");
    if (hc.t_end < 0) hc.t_end = p.default_t_end;
    // soft warnings when an override exceeds the single-term stability bound
    if (hc.beta2 >= 0) {
      const double bound = default_beta(hc.k, p.dims, p.has_cross, Term::diffusion);
      if (hc.beta2 > bound + 1e-12)
        hc.warnings.push_back("beta2 = " + std::to_string(hc.beta2) +
                              " exceeds the stability bound " + std::to_string(bound) +
                              " for this configuration");
    }
    if (hc.beta1 >= 0 && p.has_transport) {
      const double bound = default_beta(hc.k, p.dims, p.has_cross, Term::transport);
      if (hc.beta1 > bound + 1e-12)
        hc.warnings.push_back("beta1 = " + std::to_string(hc.beta1) +
                              " exceeds the stability bound " + std::to_string(bound) +
                              " for this configuration");
    }
  }
  if (hc.command == "run") {
    if (hc.n < 6) throw config_error("command 'run' needs n >= 6");
    if (hc.cfls.empty()) hc.cfls = {1.0};
    if (hc.cfls.size() != 1) throw config_error("command 'run' takes a single cfl");
  }
  if (hc.command == "converge") {
    if (hc.grids.empty()) throw config_error("command 'converge' needs a grids list");
    for (std::size_t i = 0; i + 1 < hc.grids.size(); ++i)
      if (hc.grids[i] >= hc.grids[i + 1])
        throw config_error("grids must be strictly increasing");
    if (hc.grids.front() < 6) throw config_error("grids must start at n >= 6");
    if (hc.cfls.empty()) hc.cfls = {1.0};
  }
  if (hc.command == "stability") {
    if (hc.mode != "semi1d" && hc.mode != "semi2d" && hc.mode != "full" && hc.mode != "all")
      throw config_error("mode must be semi1d, semi2d, full, or all");
    if (std::abs(hc.cross_ratio) > 2.0)
      throw config_error("|cross_ratio| > 2 is not parabolic");
  }
  if (hc.command == "compare") {
    if (hc.ks.empty()) hc.ks = {2, 3};
    for (int k : hc.ks)
      if (k < 1 || k > 3) throw config_error("compare: each k must be 1, 2, or 3");
    if (!(hc.target > 0)) throw config_error("compare: target must be positive");
    if (hc.reps < 1) throw config_error("compare: reps must be >= 1");
  }
  if (hc.command == "probe") {
    if (hc.function != "sin_x" && hc.function != "sin_2x")
      throw config_error("function must be sin_x or sin_2x");
    if (hc.alphas.empty()) hc.alphas = {10.0, 20.0, 40.0, 80.0};
    for (double a : hc.alphas)
      if (!(a > 0)) throw config_error("alphas must be positive");
  }
}

}  // namespace kpde
