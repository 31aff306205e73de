#include "kpde/harness.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <sstream>

#include "kpde/csvio.hpp"
#include "kpde/errors.hpp"
#include "kpde/legacy.hpp"
#include "kpde/solver.hpp"
#include "kpde/stability.hpp"

namespace kpde {

static std::string gfmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

static RunConfig base_cfg(const HarnessConfig& hc) {
  RunConfig cfg;
  cfg.k = hc.k;
  cfg.t_end = hc.t_end;
  cfg.variant = hc.variant;
  cfg.beta2 = hc.beta2;
  cfg.beta1 = hc.beta1;
  cfg.threads = hc.threads;
  return cfg;
}

std::vector<NamedText> run_convergence(const HarnessConfig& hc) {
  const ProblemSpec p = preset(hc.preset_name);
  std::ostringstream csv;
  csv << "cfl,n,linf,order\n";
  for (double cfl : hc.cfls) {
    double prev = std::nan("");
    for (std::size_t row = 0; row < hc.grids.size(); ++row) {
      RunConfig cfg = base_cfg(hc);
      cfg.n = hc.grids[row];
      cfg.cfl = cfl;
      double err;
      try {
        err = integrate(p, cfg).errors[0].linf;
      } catch (const blow_up_error&) {
        err = std::numeric_limits<double>::infinity();
      }
      const bool have_order = row > 0 && std::isfinite(prev) && std::isfinite(err) && err > 0;
      const double order = have_order ? std::log2(prev / err) : 0.0;
      csv << gfmt(cfl) << ',' << cfg.n << ',' << paper_sci(err) << ','
          << order_str(order, have_order) << '\n';
      prev = err;
    }
  }
  return {{hc.preset_name + "_converge_k" + std::to_string(hc.k) + ".csv", csv.str()}};
}

std::vector<NamedText> run_simulation(const HarnessConfig& hc) {
  const ProblemSpec p = preset(hc.preset_name);
  RunConfig cfg = base_cfg(hc);
  cfg.n = hc.n;
  cfg.ny = hc.ny;
  cfg.cfl = hc.cfls.empty() ? 1.0 : hc.cfls[0];
  cfg.snapshots = hc.snapshots;
  if (cfg.snapshots.empty()) cfg.snapshots = {cfg.t_end};
  const Grids g = make_grids(p, cfg);
  const RunResult r = integrate(p, cfg);
  std::vector<NamedText> files;
  for (const auto& [ts, fields] : r.snapshots) {
    for (int m = 0; m < p.ncomp; ++m) {
      std::ostringstream body;
      body << "# t=" << gfmt(ts) << " nx=" << g.gx.n
           << " ny=" << (p.dims == 2 ? g.gy.n : 1) << '\n';
      body << "x,y," << p.comp_names[m] << '\n';
      const Field& f = fields[m];
      for (int j = 0; j < f.ny; ++j) {
        const double y = p.dims == 2 ? grid_node(g.gy, j) : 0.0;
        for (int i = 0; i < f.nx; ++i)
          body << num_str(grid_node(g.gx, i)) << ',' << num_str(y) << ','
               << num_str(f.at(i, j)) << '\n';
      }
      files.emplace_back(
          hc.preset_name + "_" + p.comp_names[m] + "_t" + gfmt(ts) + ".csv", body.str());
    }
  }
  // final-state summary with errors when the preset has an exact solution
  std::ostringstream sum;
  sum << "preset=" << hc.preset_name << " n=" << g.gx.n << " k=" << hc.k
      << " t=" << gfmt(r.t) << " steps=" << r.steps << '\n';
  for (std::size_t m = 0; m < r.errors.size(); ++m)
    sum << p.comp_names[m] << ": linf=" << paper_sci(r.errors[m].linf)
        << " l2=" << paper_sci(r.errors[m].l2) << '\n';
  files.emplace_back(hc.preset_name + "_summary.txt", sum.str());
  return files;
}

std::vector<NamedText> run_stability_scan(const HarnessConfig& hc) {
  std::vector<NamedText> files;
  const int k = hc.k;
  const double bmax = beta_max_semi(k);
  const double beta = hc.beta > 0 ? hc.beta : bmax;
  if (hc.mode == "semi1d" || hc.mode == "all") {
    std::ostringstream csv;
    csv << "# k=" << k << " beta=" << num_str(beta) << " beta_max_semi=" << num_str(bmax)
        << '\n';
    csv << "z,s_k,q\n";
    const int N = 2001;
    for (int i = 0; i < N; ++i) {
      const double z = 100.0 * i / (N - 1);
      csv << num_str(z) << ',' << num_str(s_k(z, k)) << ','
          << num_str(amplification_semi_1d(k, beta, z)) << '\n';
    }
    files.emplace_back("stability_semi1d_k" + std::to_string(k) + ".csv", csv.str());
  }
  if (hc.mode == "semi2d" || hc.mode == "all") {
    const double q = hc.cross_ratio;
    const double b2d = hc.beta > 0 ? hc.beta : (q != 0.0 ? 0.25 : 0.5) * bmax;
    std::ostringstream csv;
    csv << "# k=" << k << " beta=" << num_str(b2d) << " cross_ratio=" << num_str(q) << '\n';
    csv << "z1,z2,q_factor\n";
    const int N = 121;
    for (int i = 0; i < N; ++i) {
      const double z1 = -6.0 + 12.0 * i / (N - 1);
      for (int j = 0; j < N; ++j) {
        const double z2 = -6.0 + 12.0 * j / (N - 1);
        csv << num_str(z1) << ',' << num_str(z2) << ','
            << num_str(amplification_semi_2d(k, b2d, z1, z2, q)) << '\n';
      }
    }
    files.emplace_back("stability_semi2d_k" + std::to_string(k) + ".csv", csv.str());
  }
  if (hc.mode == "full" || hc.mode == "all") {
    std::ostringstream csv;
    csv << "# k=" << k << " beta=" << num_str(beta) << " ring_n=" << stability_ring_n << '\n';
    csv << "rho,kappa_dx,abs_lambda\n";
    const double two_pi = 6.283185307179586476925286766559;
    for (int ir = 0; ir < 16; ++ir) {
      const double rho = std::pow(10.0, -2.0 + 5.0 * ir / 15.0);
      for (int m = 0; m <= stability_ring_n / 2; ++m) {
        const double kdx = two_pi * m / stability_ring_n;
        const double al = std::abs(amplification_full_1d(k, beta, kdx, rho));
        csv << num_str(rho) << ',' << num_str(kdx) << ',' << num_str(al) << '\n';
      }
    }
    files.emplace_back("stability_full_k" + std::to_string(k) + ".csv", csv.str());
  }
  return files;
}

std::vector<NamedText> run_compare(const HarnessConfig& hc) {
  std::ostringstream csv;
  csv << "variant,k,n,cpu_seconds,linf\n";
  for (int k : hc.ks) {
    for (Variant v : {Variant::H3, Variant::Hold}) {
      const ComparisonRecord rec = efficiency_point(v, k, hc.target, hc.reps);
      csv << variant_name(rec.var) << ',' << rec.k << ',' << rec.n << ','
          << num_str(rec.cpu_seconds) << ',' << paper_sci(rec.linf) << '\n';
    }
  }
  return {{"compare.csv", csv.str()}};
}

std::vector<NamedText> run_probe(const HarnessConfig& hc) {
  const TestFunction f = hc.function == "sin_x" ? TestFunction::sin_x : TestFunction::sin_2x;
  const auto pts = monotonicity_probe(hc.variant, hc.k, f, hc.alphas);
  std::ostringstream csv;
  csv << "alpha,linf\n";
  for (const auto& pt : pts)
    csv << num_str(pt.alpha) << ',' << num_str(pt.linf) << '\n';
  return {{"probe_" + std::string(variant_name(hc.variant)) + "_k" + std::to_string(hc.k) +
               "_" + hc.function + ".csv",
           csv.str()}};
}

int run_command(const HarnessConfig& hc_in) {
  HarnessConfig hc = hc_in;
  validate_config(hc);
  for (const auto& w : hc.warnings) std::cerr << "warning: " << w << '\n';
  std::vector<NamedText> files;
  if (hc.command == "run") files = run_simulation(hc);
  else if (hc.command == "converge") files = run_convergence(hc);
  else if (hc.command == "stability") files = run_stability_scan(hc);
  else if (hc.command == "compare") files = run_compare(hc);
  else files = run_probe(hc);
  ensure_dir(hc.out_dir);
  for (const auto& [name, content] : files) {
    const std::string path = join_path(hc.out_dir, name);
    write_file_atomic(path, content);
    std::cout << "wrote " << path << '\n';
  }
  // echo small tables for interactive use
  if (hc.command == "converge" || hc.command == "compare")
    for (const auto& [name, content] : files) std::cout << content;
  if (hc.command == "run")
    for (const auto& [name, content] : files)
      if (name.size() > 4 && name.substr(name.size() - 4) == ".txt") std::cout << content;
  return 0;
}

}  // namespace kpde
