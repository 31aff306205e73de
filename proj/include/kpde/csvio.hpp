#pragma once
#include <string>

namespace kpde {

// table-style scientific mantissa: 0.14E-05, two significant digits, carry-aware
std::string paper_sci(double x);

// fixed two decimals; "--" for the first refinement row
std::string order_str(double o, bool valid);

// plain %.17g round trip for data files
std::string num_str(double x);

void ensure_dir(const std::string& dir);
std::string join_path(const std::string& dir, const std::string& name);

// write to <path>.tmp in the same directory, then rename over path
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace kpde
