#include "kpde/problem.hpp"

#include <cmath>

#include "kpde/errors.hpp"
#include "kpde/rk.hpp"

namespace kpde {

static constexpr double two_pi = 6.283185307179586476925286766559;

ProblemSpec preset(const std::string& name) {
  ProblemSpec p;
  p.name = name;
  if (name == "heat1d") {
    // u_t = u_xx on [0,2pi), u = e^{-t} sin x
    p.dims = 1;
    p.ax = 0;
    p.bx = two_pi;
    p.a11 = [](double, double, double, double) { return 1.0; };
    p.init = {[](double x, double) { return std::sin(x); }};
    p.exact = {[](double x, double, double t) { return std::exp(-t) * std::sin(x); }};
    p.comp_names = {"u"};
  } else if (name == "ex2_nonlinear") {
    // u_t = (u u_x)_x - u_x + u - 1 - 0.25 cos(2x-2t) on [0,2pi), u = 1 + 0.5 sin(x-t)
    p.dims = 1;
    p.ax = 0;
    p.bx = two_pi;
    p.a11 = [](double u, double, double, double) { return u; };
    p.b1 = [](double, double, double, double) { return -1.0; };
    p.src = [](double u, double x, double, double t) {
      return u - 1.0 - 0.25 * std::cos(2.0 * x - 2.0 * t);
    };
    p.has_transport = true;
    p.init = {[](double x, double) { return 1.0 + 0.5 * std::sin(x); }};
    p.exact = {[](double x, double, double t) { return 1.0 + 0.5 * std::sin(x - t); }};
    p.comp_names = {"u"};
  } else if (name == "ex4_2d_nonlinear") {
    // u_t = (u u_x)_x + (u u_y)_y - u u_x - u u_y - u^2 + f on [0,2pi)^2,
    // forced so that u = 1 + 0.5 sin(x+y-t)
    p.dims = 2;
    p.ax = p.ay = 0;
    p.bx = p.by = two_pi;
    p.a11 = [](double u, double, double, double) { return u; };
    p.a22 = [](double u, double, double, double) { return u; };
    p.b1 = [](double u, double, double, double) { return -u; };
    p.b2 = [](double u, double, double, double) { return -u; };
    p.src = [](double u, double x, double y, double t) {
      const double s = x + y - t;
      const double f = 1.125 - 0.625 * std::cos(2.0 * s) + 0.25 * std::sin(2.0 * s) +
                       0.5 * std::cos(s) + 2.0 * std::sin(s);
      return -u * u + f;
    };
    p.has_transport = true;
    p.init = {[](double x, double y) { return 1.0 + 0.5 * std::sin(x + y); }};
    p.exact = {
        [](double x, double y, double t) { return 1.0 + 0.5 * std::sin(x + y - t); }};
    p.comp_names = {"u"};
  } else if (name == "ex6_cross") {
    // u_t = u_xx + u_yy + (u_xy + u_yx)/2 ... A = [[1, 1/2], [1/2, 1]] on [0,2pi)^2,
    // u = e^{-3t} sin(x+y)
    p.dims = 2;
    p.ax = p.ay = 0;
    p.bx = p.by = two_pi;
    p.a11 = [](double, double, double, double) { return 1.0; };
    p.a22 = [](double, double, double, double) { return 1.0; };
    p.a12 = [](double, double, double, double) { return 0.5; };
    p.a21 = [](double, double, double, double) { return 0.5; };
    p.has_cross = true;
    p.init = {[](double x, double y) { return std::sin(x + y); }};
    p.exact = {
        [](double x, double y, double t) { return std::exp(-3.0 * t) * std::sin(x + y); }};
    p.comp_names = {"u"};
  } else if (name == "schnakenberg") {
    // activator-depleted substrate kinetics on [0,1]^2:
    //   Ca_t = 0.05 lap Ca + 100 (0.1305 - Ca + Ca^2 Ci)
    //   Ci_t =      lap Ci + 100 (0.7695 - Ca^2 Ci)
    // seeded at the homogeneous state with a small bump
    p.dims = 2;
    p.ncomp = 2;
    p.is_system = true;
    p.ax = p.ay = 0;
    p.bx = p.by = 1;
    p.diff_const = {0.05, 1.0};
    p.reaction = [](const double* u, double, double, double, double* out) {
      const double ca = u[0], ci = u[1];
      out[0] = 100.0 * (0.1305 - ca + ca * ca * ci);
      out[1] = 100.0 * (0.7695 - ca * ca * ci);
    };
    p.init = {[](double x, double y) {
                const double dx = x - 1.0 / 3.0, dy = y - 0.5;
                return 0.9 + 1e-3 * std::exp(-100.0 * (dx * dx + dy * dy));
              },
              [](double, double) { return 0.7695 / 0.81; }};
    p.comp_names = {"Ca", "Ci"};
    p.default_t_end = 1.5;
  } else {
    throw config_error("unknown preset '" + name + "'");
  }
  return p;
}

void preset_betas(const ProblemSpec& p, int k, double* beta2, double* beta1) {
  if (k < 1 || k > 3) throw param_error("preset_betas: k must be 1, 2, or 3");
  // calibrated pairs where the plain bounds were sharpened experimentally
  if (p.name == "ex2_nonlinear" && k == 3) {
    *beta2 = 1.2430;
    *beta1 = 0.6215;
    return;
  }
  if (p.name == "ex4_2d_nonlinear" && k == 3) {
    *beta2 = 0.99;
    *beta1 = 0.31075;
    return;
  }
  if (p.name == "ex6_cross" && k == 3) {
    *beta2 = 0.49;
    *beta1 = 0.0;
    return;
  }
  const bool mixed = p.has_transport;
  if (p.dims == 1) {
    *beta2 = (mixed ? 0.5 : 1.0) * default_beta(k, 1, false, Term::diffusion);
    *beta1 = mixed ? 0.5 * default_beta(k, 1, false, Term::transport) : 0.0;
  } else {
    *beta2 = mixed ? 0.125 * beta2_max_table(k)
                   : default_beta(k, 2, p.has_cross, Term::diffusion);
    *beta1 = mixed ? default_beta(k, 2, p.has_cross, Term::transport) : 0.0;
  }
}

}  // namespace kpde
