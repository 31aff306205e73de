#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "kpde/errors.hpp"
#include "kpde/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"kernel-based unconditionally stable solver for nonlinear parabolic problems"};
  app.require_subcommand(1);

  struct Common {
    std::string config, out, preset, variant, mode, function;
    int k = 0, n = 0, threads = 0;
    double beta = -1, cross_ratio = -99, t_end = -1;
  } opt;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--config", opt.config, "config file (key = value lines)");
    s->add_option("--out", opt.out, "output directory");
    s->add_option("--threads", opt.threads, "worker threads for 2D line passes");
    s->add_option("--k", opt.k, "scheme order (1, 2, or 3)");
    s->add_option("--preset", opt.preset, "problem preset name");
    s->add_option("--n", opt.n, "grid size");
    s->add_option("--t-end", opt.t_end, "final time");
    s->add_option("--variant", opt.variant, "diffusion variant (H1, H2, H3, Hold)");
  };

  CLI::App* run = app.add_subcommand("run", "integrate a preset and write snapshots");
  CLI::App* conv = app.add_subcommand("converge", "grid refinement error table");
  CLI::App* stab = app.add_subcommand("stability", "amplification factor scans");
  CLI::App* comp = app.add_subcommand("compare", "cost vs the legacy operator at matched accuracy");
  CLI::App* prob = app.add_subcommand("probe", "operator error vs alpha monotonicity table");
  for (CLI::App* s : {run, conv, stab, comp, prob}) add_common(s);
  stab->add_option("--mode", opt.mode, "semi1d, semi2d, full, or all");
  stab->add_option("--beta", opt.beta, "scan beta override");
  stab->add_option("--cross-ratio", opt.cross_ratio, "2D cross-term ratio");
  prob->add_option("--function", opt.function, "sin_x or sin_2x");

  CLI11_PARSE(app, argc, argv);

  try {
    kpde::HarnessConfig hc;
    if (!opt.config.empty()) hc = kpde::parse_config_file(opt.config);
    hc.command = app.get_subcommands().front()->get_name();
    if (!opt.out.empty()) hc.out_dir = opt.out;
    if (!opt.preset.empty()) hc.preset_name = opt.preset;
    if (!opt.variant.empty()) hc.variant = kpde::variant_from_string(opt.variant);
    if (!opt.mode.empty()) hc.mode = opt.mode;
    if (!opt.function.empty()) hc.function = opt.function;
    if (opt.k > 0) hc.k = opt.k;
    if (opt.n > 0) hc.n = opt.n;
    if (opt.threads > 0) hc.threads = opt.threads;
    if (opt.beta > 0) hc.beta = opt.beta;
    if (opt.cross_ratio > -90) hc.cross_ratio = opt.cross_ratio;
    if (opt.t_end > 0) hc.t_end = opt.t_end;
    return kpde::run_command(hc);
  } catch (const kpde::config_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const kpde::blow_up_error& e) {
    std::cerr << "blow-up: " << e.what() << '\n';
    return 3;
  } catch (const kpde::param_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
