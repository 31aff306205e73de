#include "kpde/rk.hpp"

#include <cmath>
#include <string>

namespace kpde {

static void shape_like(FieldSet& dst, const FieldSet& src) {
  dst.resize(src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    dst[c].nx = src[c].nx;
    dst[c].ny = src[c].ny;
    dst[c].v.resize(src[c].v.size());
  }
}

static void check_finite(const FieldSet& f, int stage) {
  for (const auto& c : f)
    for (double x : c.v)
      if (!std::isfinite(x))
        throw blow_up_error(
            "non-finite tendency at RK stage " + std::to_string(stage), -1, stage, 0.0);
}

void ssp_rk_step(FieldSet& u, double t, double dt, int order, const RhsFn& rhs, FieldSet& stage,
                 FieldSet& tend) {
  if (order < 1 || order > 3) throw param_error("ssp_rk_step: order must be 1, 2, or 3");
  if (!(dt > 0.0)) throw param_error("ssp_rk_step: need dt > 0");
  shape_like(stage, u);
  shape_like(tend, u);
  const std::size_t nc = u.size();

  rhs(u, t, tend);
  check_finite(tend, 1);
  if (order == 1) {
    for (std::size_t c = 0; c < nc; ++c) {
      double* uv = u[c].v.data();
      const double* f = tend[c].v.data();
      for (std::size_t i = 0; i < u[c].v.size(); ++i) uv[i] += dt * f[i];
    }
    return;
  }

  for (std::size_t c = 0; c < nc; ++c) {
    double* sv = stage[c].v.data();
    const double* uv = u[c].v.data();
    const double* f = tend[c].v.data();
    for (std::size_t i = 0; i < u[c].v.size(); ++i) sv[i] = uv[i] + dt * f[i];
  }

  rhs(stage, t + dt, tend);
  check_finite(tend, 2);
  if (order == 2) {
    for (std::size_t c = 0; c < nc; ++c) {
      double* uv = u[c].v.data();
      const double* sv = stage[c].v.data();
      const double* f = tend[c].v.data();
      for (std::size_t i = 0; i < u[c].v.size(); ++i)
        uv[i] = 0.5 * uv[i] + 0.5 * (sv[i] + dt * f[i]);
    }
    return;
  }

  for (std::size_t c = 0; c < nc; ++c) {
    double* sv = stage[c].v.data();
    const double* uv = u[c].v.data();
    const double* f = tend[c].v.data();
    for (std::size_t i = 0; i < u[c].v.size(); ++i)
      sv[i] = 0.75 * uv[i] + 0.25 * (sv[i] + dt * f[i]);
  }

  rhs(stage, t + 0.5 * dt, tend);
  check_finite(tend, 3);
  for (std::size_t c = 0; c < nc; ++c) {
    double* uv = u[c].v.data();
    const double* sv = stage[c].v.data();
    const double* f = tend[c].v.data();
    for (std::size_t i = 0; i < u[c].v.size(); ++i)
      uv[i] = (1.0 / 3.0) * uv[i] + (2.0 / 3.0) * (sv[i] + dt * f[i]);
  }
}

AlphaSelection select_alphas(double beta2, double beta1, double cx, double cy, double rx,
                             double ry, double dt) {
  if (!(dt > 0.0)) throw param_error("select_alphas: need dt > 0");
  AlphaSelection s;
  s.cx = cx;
  s.cy = cy;
  s.rx = rx;
  s.ry = ry;
  if (beta2 > 0.0) {
    if (cx == 0.0 || cy == 0.0)
      throw config_error(
          "diffusion requested but max|A| vanished: the problem is not parabolic here");
    if (cx > 0.0) s.a0x = std::sqrt(beta2 / (cx * dt));
    if (cy > 0.0) s.a0y = std::sqrt(beta2 / (cy * dt));
  }
  if (beta1 > 0.0) {
    if (rx > 0.0) s.a1x = beta1 / (rx * dt);
    if (ry > 0.0) s.a1y = beta1 / (ry * dt);
  }
  return s;
}

static void check_k(int k, const char* who) {
  if (k < 1 || k > 3)
    throw param_error(std::string(who) + ": k must be 1, 2, or 3");
}

double beta2_max_table(int k) {
  check_k(k, "beta2_max_table");
  static const double t[3] = {8.0, 3.2275, 1.9800};
  return t[k - 1];
}

double beta1_max_table(int k) {
  check_k(k, "beta1_max_table");
  static const double t[3] = {2.0, 1.0, 1.243};
  return t[k - 1];
}

double beta_old_table(int k) {
  check_k(k, "beta_old_table");
  static const double t[3] = {2.0, 1.0, 0.8375};
  return t[k - 1];
}

double default_beta(int k, int dims, bool has_cross, Term term) {
  check_k(k, "default_beta");
  if (dims != 1 && dims != 2) throw param_error("default_beta: dims must be 1 or 2");
  if (term == Term::transport)
    return dims == 1 ? beta1_max_table(k) : 0.25 * beta1_max_table(k);
  if (dims == 1) return beta2_max_table(k);
  return (has_cross ? 0.25 : 0.5) * beta2_max_table(k);
}

}  // namespace kpde
