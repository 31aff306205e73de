#pragma once
#include <utility>
#include <vector>

#include "kpde/problem.hpp"
#include "kpde/rk.hpp"

namespace kpde {

struct Grids {
  Grid1D gx, gy;  // gy unused in 1D
};

Grids make_grids(const ProblemSpec& p, const RunConfig& cfg);

double max_abs(const Field& f);

// kernels are cached per (n, alpha, dx) and rebuilt only when the rate moves
struct KernelCache {
  LineKernel K;
  bool valid = false;
  const LineKernel& get(int n, double alpha, double dx);
};

// per-run scratch for tendency evaluation: kernel caches, nodal coefficient
// fields, per-thread line work
struct RhsContext {
  KernelCache diff_x, diff_y, trans_x, trans_y;
  std::vector<KernelCache> sys_x, sys_y;  // per component, systems
  Field ca11, ca22, ca12, ca21, cb1, cb2, csrc;
  Field w1, w2, g1, g2, tmp;
  std::vector<LineWork> works;
  struct LineBuf {
    std::vector<double> in, out, aux;
  };
  std::vector<LineBuf> lines;  // per thread, for column traversals
  double beta2 = -1, beta1 = -1;
};

RhsContext make_rhs_context(const ProblemSpec& p, const RunConfig& cfg, const Grids& g);

// one tendency evaluation.  two kernel passes per term with a full-field barrier
// between them (gradients first, then the divergence of the flux)
void rhs_1d(const ProblemSpec& p, const RunConfig& cfg, const Grids& g, double dt,
            const FieldSet& u, double t, FieldSet& out, RhsContext& ctx);
void rhs_2d(const ProblemSpec& p, const RunConfig& cfg, const Grids& g, double dt,
            const FieldSet& u, double t, FieldSet& out, RhsContext& ctx);

// first-pass directional derivatives (exposed for tests): w1 = x-derivative,
// w2 = y-derivative via the symmetric kernel chains
void gradients_2d(const Field& u, const Grid1D& gx, const Grid1D& gy, double alpha_x,
                  double alpha_y, int k, Field& w1, Field& w2);

struct ErrorReport {
  double linf = 0, l2 = 0;
};

// discrete norms of (numerical - exact) at time t; l2 carries the cell measure
ErrorReport error_norms(const Field& num, const Grids& g, int dims, const ExactFn& exact,
                        double t);

struct RunResult {
  FieldSet u;
  double t = 0;
  long steps = 0;
  std::vector<std::pair<double, FieldSet>> snapshots;
  std::vector<ErrorReport> errors;  // per component; empty without an exact solution
};

// advance from the initial state to t_end with dt = cfl dx, shortening the final
// step (and any step that would overshoot a snapshot time) to land exactly
RunResult integrate(const ProblemSpec& p, const RunConfig& cfg);

}  // namespace kpde
