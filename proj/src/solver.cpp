#include "kpde/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kpde/util.hpp"

namespace kpde {

double max_abs(const Field& f) {
  double m = 0.0;
  for (double x : f.v) m = std::max(m, std::abs(x));
  return m;
}

Grids make_grids(const ProblemSpec& p, const RunConfig& cfg) {
  Grids g;
  g.gx = make_grid(p.ax, p.bx, cfg.n);
  if (p.dims == 2) g.gy = make_grid(p.ay, p.by, cfg.ny > 0 ? cfg.ny : cfg.n);
  return g;
}

const LineKernel& KernelCache::get(int n, double alpha, double dx) {
  if (!valid || K.n != n || K.alpha != alpha || K.dx != dx) {
    K = make_line_kernel(n, alpha, dx);
    valid = true;
  }
  return K;
}

static void resolve_betas(const ProblemSpec& p, const RunConfig& cfg, double* b2, double* b1) {
  preset_betas(p, cfg.k, b2, b1);
  if (cfg.variant == Variant::Hold && cfg.beta2 < 0) *b2 = beta_old_table(cfg.k);
  if (cfg.beta2 >= 0) *b2 = cfg.beta2;
  if (cfg.beta1 >= 0) *b1 = cfg.beta1;
}

RhsContext make_rhs_context(const ProblemSpec& p, const RunConfig& cfg, const Grids& g) {
  RhsContext ctx;
  const int nx = g.gx.n;
  const int ny = p.dims == 2 ? g.gy.n : 1;
  auto mk = [&] { return make_field(nx, ny); };
  ctx.ca11 = mk();
  if (p.dims == 2) ctx.ca22 = mk();
  if (p.has_cross) {
    ctx.ca12 = mk();
    ctx.ca21 = mk();
  }
  if (p.b1) ctx.cb1 = mk();
  if (p.b2) ctx.cb2 = mk();
  if (p.src) ctx.csrc = mk();
  ctx.w1 = mk();
  ctx.g1 = mk();
  if (p.dims == 2) {
    ctx.w2 = mk();
    ctx.g2 = mk();
  }
  ctx.tmp = mk();
  const int nt = std::max(1, cfg.threads);
  ctx.works.resize(nt);
  ctx.lines.resize(nt);
  const int len = std::max(nx, ny);
  for (auto& lb : ctx.lines) {
    lb.in.assign(len, 0.0);
    lb.out.assign(len, 0.0);
    lb.aux.assign(len, 0.0);
  }
  if (p.is_system) {
    ctx.sys_x.resize(p.ncomp);
    ctx.sys_y.resize(p.ncomp);
  }
  resolve_betas(p, cfg, &ctx.beta2, &ctx.beta1);
  return ctx;
}

// drop advection whose magnitude is at rounding level relative to the state
static double degenerate_guard(double r, double uscale) {
  return r < 1e-14 * std::max(1.0, uscale) ? 0.0 : r;
}

void rhs_1d(const ProblemSpec& p, const RunConfig& cfg, const Grids& g, double dt,
            const FieldSet& u, double t, FieldSet& out, RhsContext& ctx) {
  const Grid1D& gx = g.gx;
  const int n = gx.n;
  const Field& U = u[0];
  Field& O = out[0];
  double cx = 0.0, rx = 0.0;
  double* a = ctx.ca11.v.data();
  for (int i = 0; i < n; ++i) {
    const double ai = p.a11 ? p.a11(U.v[i], grid_node(gx, i), 0.0, t) : 0.0;
    a[i] = ai;
    cx = std::max(cx, std::abs(ai));
  }
  if (p.b1) {
    double* b = ctx.cb1.v.data();
    for (int i = 0; i < n; ++i) {
      b[i] = p.b1(U.v[i], grid_node(gx, i), 0.0, t);
      rx = std::max(rx, std::abs(b[i]));
    }
    rx = degenerate_guard(rx, max_abs(U));
  }
  const double b2 = p.a11 ? ctx.beta2 : 0.0;
  const double b1 = p.b1 ? ctx.beta1 : 0.0;
  const AlphaSelection as = select_alphas(b2, b1, p.a11 ? cx : -1.0, -1.0, rx, -1.0, dt);
  bool wrote = false;
  if (p.a11) {
    const LineKernel& Kd = ctx.diff_x.get(n, as.a0x, gx.dx);
    diffusion_apply(Kd, U.v.data(), a, cfg.k, cfg.variant, O.v.data(), ctx.works[0]);
    wrote = true;
  }
  if (!wrote)
    for (int i = 0; i < n; ++i) O.v[i] = 0.0;
  if (p.b1 && rx > 0.0) {
    const LineKernel& Kt = ctx.trans_x.get(n, as.a1x, gx.dx);
    transport_term(Kt, U.v.data(), ctx.cb1.v.data(), rx, cfg.k, ctx.tmp.v.data(),
                   ctx.works[0]);
    for (int i = 0; i < n; ++i) O.v[i] += ctx.tmp.v[i];
  }
  if (p.src)
    for (int i = 0; i < n; ++i) O.v[i] += p.src(U.v[i], grid_node(gx, i), 0.0, t);
}

// x passes work on rows (contiguous), y passes on extracted columns
static void pass_rows_deriv(const LineKernel& K, const Field& in, int k, Field& outf,
                            RhsContext& ctx, int nthreads) {
  const int nx = in.nx, ny = in.ny;
  parallel_lines(ny, nthreads, [&](int j, int tid) {
    deriv_new(K, in.v.data() + (std::size_t)j * nx, k, outf.v.data() + (std::size_t)j * nx,
              ctx.works[tid]);
  });
}

static void pass_cols_deriv(const LineKernel& K, const Field& in, int k, Field& outf, bool add,
                            RhsContext& ctx, int nthreads) {
  const int nx = in.nx, ny = in.ny;
  parallel_lines(nx, nthreads, [&](int i, int tid) {
    auto& lb = ctx.lines[tid];
    extract_line(in, 'y', i, lb.in.data());
    deriv_new(K, lb.in.data(), k, lb.out.data(), ctx.works[tid]);
    if (add) {
      for (int j = 0; j < ny; ++j) outf.v[(std::size_t)j * nx + i] += lb.out[j];
    } else {
      write_line(outf, 'y', i, lb.out.data());
    }
  });
}

static void rhs_2d_system(const ProblemSpec& p, const RunConfig& cfg, const Grids& g, double dt,
                          const FieldSet& u, double t, FieldSet& out, RhsContext& ctx) {
  const int nx = g.gx.n, ny = g.gy.n;
  const int nt = std::max(1, cfg.threads);
  for (int m = 0; m < p.ncomp; ++m) {
    const double c = p.diff_const[m];
    const AlphaSelection as = select_alphas(ctx.beta2, 0.0, c, c, -1.0, -1.0, dt);
    const LineKernel& Kx = ctx.sys_x[m].get(nx, as.a0x, g.gx.dx);
    const LineKernel& Ky = ctx.sys_y[m].get(ny, as.a0y, g.gy.dx);
    pass_rows_deriv(Kx, u[m], cfg.k, ctx.w1, ctx, nt);
    pass_cols_deriv(Ky, u[m], cfg.k, ctx.w2, false, ctx, nt);
    for (std::size_t i = 0; i < ctx.g1.v.size(); ++i) {
      ctx.g1.v[i] = c * ctx.w1.v[i];
      ctx.g2.v[i] = c * ctx.w2.v[i];
    }
    pass_rows_deriv(Kx, ctx.g1, cfg.k, out[m], ctx, nt);
    pass_cols_deriv(Ky, ctx.g2, cfg.k, out[m], true, ctx, nt);
  }
  if (p.reaction) {
    std::vector<double> uv(p.ncomp), rv(p.ncomp);
    for (int j = 0; j < ny; ++j) {
      const double y = grid_node(g.gy, j);
      for (int i = 0; i < nx; ++i) {
        const double x = grid_node(g.gx, i);
        for (int m = 0; m < p.ncomp; ++m) uv[m] = u[m].at(i, j);
        p.reaction(uv.data(), x, y, t, rv.data());
        for (int m = 0; m < p.ncomp; ++m) out[m].at(i, j) += rv[m];
      }
    }
  }
}

void rhs_2d(const ProblemSpec& p, const RunConfig& cfg, const Grids& g, double dt,
            const FieldSet& u, double t, FieldSet& out, RhsContext& ctx) {
  if (cfg.variant != Variant::H3)
    throw config_error("2D runs support the H3 variant only");
  if (p.is_system) {
    rhs_2d_system(p, cfg, g, dt, u, t, out, ctx);
    return;
  }
  const int nx = g.gx.n, ny = g.gy.n;
  const int nt = std::max(1, cfg.threads);
  const Field& U = u[0];
  Field& O = out[0];
  double cxm = 0.0, cym = 0.0, rxm = 0.0, rym = 0.0;
  for (int j = 0; j < ny; ++j) {
    const double y = grid_node(g.gy, j);
    for (int i = 0; i < nx; ++i) {
      const double x = grid_node(g.gx, i);
      const double ui = U.at(i, j);
      const double a11 = p.a11(ui, x, y, t);
      const double a22 = p.a22(ui, x, y, t);
      ctx.ca11.at(i, j) = a11;
      ctx.ca22.at(i, j) = a22;
      cxm = std::max(cxm, std::abs(a11));
      cym = std::max(cym, std::abs(a22));
      if (p.has_cross) {
        ctx.ca12.at(i, j) = p.a12(ui, x, y, t);
        ctx.ca21.at(i, j) = p.a21(ui, x, y, t);
      }
      if (p.b1) {
        const double b = p.b1(ui, x, y, t);
        ctx.cb1.at(i, j) = b;
        rxm = std::max(rxm, std::abs(b));
      }
      if (p.b2) {
        const double b = p.b2(ui, x, y, t);
        ctx.cb2.at(i, j) = b;
        rym = std::max(rym, std::abs(b));
      }
      if (p.src) ctx.csrc.at(i, j) = p.src(ui, x, y, t);
    }
  }
  const double uscale = max_abs(U);
  rxm = degenerate_guard(rxm, uscale);
  rym = degenerate_guard(rym, uscale);
  const AlphaSelection as =
      select_alphas(ctx.beta2, p.has_transport ? ctx.beta1 : 0.0, cxm, cym, rxm, rym, dt);

  const LineKernel& Kdx = ctx.diff_x.get(nx, as.a0x, g.gx.dx);
  const LineKernel& Kdy = ctx.diff_y.get(ny, as.a0y, g.gy.dx);
  // pass 1: directional derivatives of the state
  pass_rows_deriv(Kdx, U, cfg.k, ctx.w1, ctx, nt);
  pass_cols_deriv(Kdy, U, cfg.k, ctx.w2, false, ctx, nt);
  // flux components
  if (p.has_cross) {
    for (std::size_t i = 0; i < ctx.g1.v.size(); ++i) {
      ctx.g1.v[i] = ctx.ca11.v[i] * ctx.w1.v[i] + ctx.ca12.v[i] * ctx.w2.v[i];
      ctx.g2.v[i] = ctx.ca21.v[i] * ctx.w1.v[i] + ctx.ca22.v[i] * ctx.w2.v[i];
    }
  } else {
    for (std::size_t i = 0; i < ctx.g1.v.size(); ++i) {
      ctx.g1.v[i] = ctx.ca11.v[i] * ctx.w1.v[i];
      ctx.g2.v[i] = ctx.ca22.v[i] * ctx.w2.v[i];
    }
  }
  // pass 2: divergence
  pass_rows_deriv(Kdx, ctx.g1, cfg.k, O, ctx, nt);
  pass_cols_deriv(Kdy, ctx.g2, cfg.k, O, true, ctx, nt);

  if (rxm > 0.0) {
    const LineKernel& Ktx = ctx.trans_x.get(nx, as.a1x, g.gx.dx);
    parallel_lines(ny, nt, [&](int j, int tid) {
      auto& lb = ctx.lines[tid];
      transport_term(Ktx, U.v.data() + (std::size_t)j * nx,
                     ctx.cb1.v.data() + (std::size_t)j * nx, rxm, cfg.k, lb.out.data(),
                     ctx.works[tid]);
      double* orow = O.v.data() + (std::size_t)j * nx;
      for (int i = 0; i < nx; ++i) orow[i] += lb.out[i];
    });
  }
  if (rym > 0.0) {
    const LineKernel& Kty = ctx.trans_y.get(ny, as.a1y, g.gy.dx);
    parallel_lines(nx, nt, [&](int i, int tid) {
      auto& lb = ctx.lines[tid];
      extract_line(U, 'y', i, lb.in.data());
      extract_line(ctx.cb2, 'y', i, lb.aux.data());
      transport_term(Kty, lb.in.data(), lb.aux.data(), rym, cfg.k, lb.out.data(),
                     ctx.works[tid]);
      for (int j = 0; j < ny; ++j) O.v[(std::size_t)j * nx + i] += lb.out[j];
    });
  }
  if (p.src)
    for (std::size_t i = 0; i < O.v.size(); ++i) O.v[i] += ctx.csrc.v[i];
}

void gradients_2d(const Field& u, const Grid1D& gx, const Grid1D& gy, double alpha_x,
                  double alpha_y, int k, Field& w1, Field& w2) {
  const LineKernel Kx = make_line_kernel(gx.n, alpha_x, gx.dx);
  const LineKernel Ky = make_line_kernel(gy.n, alpha_y, gy.dx);
  LineWork wk;
  std::vector<double> in(gy.n), out(gy.n);
  for (int j = 0; j < gy.n; ++j)
    deriv_new(Kx, u.v.data() + (std::size_t)j * gx.n, k,
              w1.v.data() + (std::size_t)j * gx.n, wk);
  for (int i = 0; i < gx.n; ++i) {
    extract_line(u, 'y', i, in.data());
    deriv_new(Ky, in.data(), k, out.data(), wk);
    write_line(w2, 'y', i, out.data());
  }
}

ErrorReport error_norms(const Field& num, const Grids& g, int dims, const ExactFn& exact,
                        double t) {
  ErrorReport r;
  double ss = 0.0;
  if (dims == 1) {
    for (int i = 0; i < g.gx.n; ++i) {
      const double e = num.v[i] - exact(grid_node(g.gx, i), 0.0, t);
      r.linf = std::max(r.linf, std::abs(e));
      ss += e * e;
    }
    r.l2 = std::sqrt(g.gx.dx * ss);
  } else {
    for (int j = 0; j < g.gy.n; ++j) {
      const double y = grid_node(g.gy, j);
      for (int i = 0; i < g.gx.n; ++i) {
        const double e = num.at(i, j) - exact(grid_node(g.gx, i), y, t);
        r.linf = std::max(r.linf, std::abs(e));
        ss += e * e;
      }
    }
    r.l2 = std::sqrt(g.gx.dx * g.gy.dx * ss);
  }
  return r;
}

// sample the coefficient evaluators at startup and reject non-parabolic data
static void parabolicity_check(const ProblemSpec& p, const Grids& g, const FieldSet& u0) {
  if (p.is_system) {
    for (double d : p.diff_const)
      if (!(d > 0.0)) throw config_error("system diffusion constants must be positive");
    return;
  }
  if (!p.a11) return;
  const int sx = std::max(1, g.gx.n / 16);
  const int sy = p.dims == 2 ? std::max(1, g.gy.n / 16) : 1;
  for (int j = 0; j < (p.dims == 2 ? g.gy.n : 1); j += sy) {
    const double y = p.dims == 2 ? grid_node(g.gy, j) : 0.0;
    for (int i = 0; i < g.gx.n; i += sx) {
      const double x = grid_node(g.gx, i);
      const double ui = u0[0].at(i, p.dims == 2 ? j : 0);
      const double a11 = p.a11(ui, x, y, 0.0);
      if (!(a11 > 0.0))
        throw config_error("initial data is not parabolic: A11 <= 0 at a sample node");
      if (p.dims == 2) {
        const double a22 = p.a22(ui, x, y, 0.0);
        if (!(a22 > 0.0))
          throw config_error("initial data is not parabolic: A22 <= 0 at a sample node");
        if (p.has_cross) {
          const double s = p.a12(ui, x, y, 0.0) + p.a21(ui, x, y, 0.0);
          if (std::abs(s) > 2.0 * std::sqrt(a11 * a22) + 1e-12)
            throw config_error(
                "initial data is not parabolic: |A12+A21| > 2 sqrt(A11 A22) at a sample node");
        }
      }
    }
  }
}

RunResult integrate(const ProblemSpec& p, const RunConfig& cfg) {
  if (cfg.k < 1 || cfg.k > 3) throw config_error("k must be 1, 2, or 3");
  if (!(cfg.cfl > 0.0)) throw config_error("cfl must be positive");
  if (!(cfg.t_end > 0.0)) throw config_error("t_end must be positive");
  Grids g = make_grids(p, cfg);

  FieldSet u(p.ncomp);
  for (int m = 0; m < p.ncomp; ++m) {
    u[m] = make_field(g.gx.n, p.dims == 2 ? g.gy.n : 1);
    for (int j = 0; j < u[m].ny; ++j) {
      const double y = p.dims == 2 ? grid_node(g.gy, j) : 0.0;
      for (int i = 0; i < u[m].nx; ++i) u[m].at(i, j) = p.init[m](grid_node(g.gx, i), y);
    }
  }
  parabolicity_check(p, g, u);

  RunResult res;
  std::vector<double> snaps = cfg.snapshots;
  std::sort(snaps.begin(), snaps.end());
  for (double s : snaps)
    if (s < 0.0 || s > cfg.t_end + 1e-12)
      throw config_error("snapshot times must lie in [0, t_end]");
  auto want_snap = [&](double t) {
    for (double s : snaps)
      if (std::abs(s - t) <= 1e-12 * std::max(1.0, cfg.t_end)) return true;
    return false;
  };
  if (!snaps.empty()) res.snapshots.emplace_back(0.0, u);

  std::vector<double> marks;
  for (double s : snaps)
    if (s > 1e-12) marks.push_back(std::min(s, cfg.t_end));
  marks.push_back(cfg.t_end);
  marks.erase(std::unique(marks.begin(), marks.end(),
                          [&](double a, double b) { return std::abs(a - b) <= 1e-12; }),
              marks.end());

  const double dt0 = cfg.cfl * (p.dims == 1 ? g.gx.dx : std::min(g.gx.dx, g.gy.dx));
  RhsContext ctx = make_rhs_context(p, cfg, g);
  double dt_cur = dt0;
  RhsFn rhs = [&](const FieldSet& s, double ts, FieldSet& o) {
    if (p.dims == 1)
      rhs_1d(p, cfg, g, dt_cur, s, ts, o, ctx);
    else
      rhs_2d(p, cfg, g, dt_cur, s, ts, o, ctx);
  };

  FieldSet stage, tend;
  double t = 0.0;
  long step = 0;
  for (double mark : marks) {
    const double eps = 1e-12 * std::max(1.0, mark);
    while (t < mark - eps) {
      dt_cur = std::min(dt0, mark - t);
      try {
        ssp_rk_step(u, t, dt_cur, cfg.k, rhs, stage, tend);
      } catch (const blow_up_error& e) {
        throw blow_up_error(std::string(e.what()) + " (step " + std::to_string(step) +
                                ", t = " + std::to_string(t) + ")",
                            step, e.stage, t);
      }
      t += dt_cur;
      ++step;
      for (int m = 0; m < p.ncomp; ++m)
        if (max_abs(u[m]) > 1e100)
          throw blow_up_error("state magnitude exceeded 1e100 (step " +
                                  std::to_string(step) + ", t = " + std::to_string(t) + ")",
                              step, 0, t);
    }
    t = mark;
    if (want_snap(mark)) res.snapshots.emplace_back(mark, u);
  }

  res.u = std::move(u);
  res.t = t;
  res.steps = step;
  if (!p.exact.empty()) {
    res.errors.resize(p.ncomp);
    for (int m = 0; m < p.ncomp; ++m)
      res.errors[m] = error_norms(res.u[m], g, p.dims, p.exact[m], t);
  }
  return res;
}

}  // namespace kpde
