#include "kpde/csvio.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "kpde/errors.hpp"

namespace kpde {

std::string paper_sci(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0.00E+00";
  const bool neg = x < 0;
  const double ax = std::abs(x);
  int e = (int)std::floor(std::log10(ax)) + 1;  // ax = m 10^e with m in [0.1, 1)
  int digits = (int)std::lround(ax / std::pow(10.0, e) * 100.0);
  if (digits >= 100) {  // rounding carried the mantissa past 1
    digits = 10;
    e += 1;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%s0.%02dE%+03d", neg ? "-" : "", digits, e);
  return buf;
}

std::string order_str(double o, bool valid) {
  if (!valid) return "--";
  if (!std::isfinite(o)) return "--";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", o);
  return buf;
}

std::string num_str(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void ensure_dir(const std::string& dir) {
  if (dir.empty() || dir == ".") return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw config_error("cannot create output directory '" + dir + "': " + ec.message());
}

std::string join_path(const std::string& dir, const std::string& name) {
  if (dir.empty() || dir == ".") return name;
  return (std::filesystem::path(dir) / name).string();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw config_error("cannot open '" + tmp + "' for writing");
    f.write(content.data(), (std::streamsize)content.size());
    if (!f) throw config_error("short write to '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw config_error("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
}

}  // namespace kpde
