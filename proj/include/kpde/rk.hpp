#pragma once
#include <functional>
#include <vector>

#include "kpde/errors.hpp"
#include "kpde/grid.hpp"

namespace kpde {

// multi-component state: one Field per solution component
using FieldSet = std::vector<Field>;

// tendency evaluator: fills dudt (same shape as u) at stage time t
using RhsFn = std::function<void(const FieldSet& u, double t, FieldSet& dudt)>;

// strong-stability-preserving RK of order 1, 2, or 3 (convex combinations of Euler
// steps; stage times t, t+dt, t+dt/2).  stage/tend are caller scratch reshaped here.
// throws blow_up_error naming the stage if a tendency comes back non-finite.
void ssp_rk_step(FieldSet& u, double t, double dt, int order, const RhsFn& rhs, FieldSet& stage,
                 FieldSet& tend);

// kernel rates from the stability constants, frozen per stage:
//   diffusion  alpha0 = sqrt(beta2 / (c dt)) per direction, c = max|A| there
//   transport  alpha  = beta1 / (r dt),      r = max|B| there
// a negative extremum marks an absent direction; c == 0 with diffusion requested
// breaks parabolicity and is a config error; r == 0 simply disables transport.
struct AlphaSelection {
  double cx = 0, cy = 0, rx = 0, ry = 0;
  double a0x = 0, a0y = 0, a1x = 0, a1y = 0;
};

AlphaSelection select_alphas(double beta2, double beta1, double cx, double cy, double rx,
                             double ry, double dt);

enum class Term { diffusion, transport };

// largest beta allowed by the single-term stability analysis for the configuration;
// mixed-term runs halve these further (see solver defaults)
double default_beta(int k, int dims, bool has_cross, Term term);

// published stability constants
double beta2_max_table(int k);  // 8, 3.2275, 1.9800
double beta1_max_table(int k);  // 2, 1, 1.243
double beta_old_table(int k);   // legacy operator: 2, 1, 0.8375

}  // namespace kpde
