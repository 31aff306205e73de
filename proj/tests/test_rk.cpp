#include <cmath>
#include <vector>

#include "doctest.h"
#include "kpde/errors.hpp"
#include "kpde/rk.hpp"

using namespace kpde;

namespace {

FieldSet scalar_state(double x) {
  FieldSet u(1);
  u[0] = make_field(1, 1);
  u[0].v[0] = x;
  return u;
}

}  // namespace

TEST_CASE("strong-stability steps reproduce the decay recurrences") {
  // u' = -u with dt = 0.1 from u(0) = 1
  auto rhs = [](const FieldSet& u, double, FieldSet& out) { out[0].v[0] = -u[0].v[0]; };
  const double expect[3] = {0.9, 0.905, 0.9048333333333333};
  for (int order = 1; order <= 3; ++order) {
    FieldSet u = scalar_state(1.0);
    FieldSet stage, tend;
    ssp_rk_step(u, 0.0, 0.1, order, rhs, stage, tend);
    CHECK(u[0].v[0] == doctest::Approx(expect[order - 1]).epsilon(1e-15));
  }
}

TEST_CASE("stage times hit the nodes of each scheme") {
  for (int order = 1; order <= 3; ++order) {
    std::vector<double> times;
    auto rhs = [&](const FieldSet& u, double t, FieldSet& out) {
      times.push_back(t);
      out[0].v[0] = -u[0].v[0];
    };
    FieldSet u = scalar_state(1.0);
    FieldSet stage, tend;
    ssp_rk_step(u, 0.0, 0.1, order, rhs, stage, tend);
    if (order == 1) {
      REQUIRE(times.size() == 1);
      CHECK(times[0] == 0.0);
    } else if (order == 2) {
      REQUIRE(times.size() == 2);
      CHECK(times[0] == 0.0);
      CHECK(times[1] == doctest::Approx(0.1).epsilon(1e-15));
    } else {
      REQUIRE(times.size() == 3);
      CHECK(times[0] == 0.0);
      CHECK(times[1] == doctest::Approx(0.1).epsilon(1e-15));
      CHECK(times[2] == doctest::Approx(0.05).epsilon(1e-15));
    }
  }
}

TEST_CASE("a non-finite stage is reported with its stage index") {
  auto rhs = [](const FieldSet& u, double t, FieldSet& out) {
    out[0].v[0] = t > 0.0 ? std::nan("") : -u[0].v[0];
  };
  FieldSet u = scalar_state(1.0);
  FieldSet stage, tend;
  try {
    ssp_rk_step(u, 0.0, 0.1, 3, rhs, stage, tend);
    FAIL("expected a blow-up");
  } catch (const blow_up_error& e) {
    CHECK(e.stage == 2);
  }
}

TEST_CASE("step families converge at their design orders") {
  // integrate u' = -u to t = 1 with halving steps
  auto rhs = [](const FieldSet& u, double, FieldSet& out) { out[0].v[0] = -u[0].v[0]; };
  for (int order = 1; order <= 3; ++order) {
    double err[2];
    int idx = 0;
    for (int steps : {64, 128}) {
      FieldSet u = scalar_state(1.0);
      FieldSet stage, tend;
      const double dt = 1.0 / steps;
      for (int s = 0; s < steps; ++s) ssp_rk_step(u, s * dt, dt, order, rhs, stage, tend);
      err[idx++] = std::abs(u[0].v[0] - std::exp(-1.0));
    }
    const double p = std::log2(err[0] / err[1]);
    INFO("order " << order << " observed " << p);
    CHECK(p == doctest::Approx(order).epsilon(0.1));
  }
}

TEST_CASE("rate selection matches the closed-form example") {
  const AlphaSelection s = select_alphas(1.98, 0.0, 1.0, -1.0, 0.0, -1.0, 0.01);
  CHECK(s.a0x == doctest::Approx(std::sqrt(198.0)).epsilon(1e-14));
  CHECK(s.a0y == 0.0);
  CHECK(s.a1x == 0.0);
  CHECK(s.a1y == 0.0);
}

TEST_CASE("vanishing diffusion extremum with an active budget is rejected") {
  CHECK_THROWS_AS(select_alphas(1.0, 0.0, 0.0, -1.0, 0.0, -1.0, 0.01), config_error);
}

TEST_CASE("default budgets follow the dimension and term rules") {
  CHECK(default_beta(1, 1, false, Term::diffusion) == doctest::Approx(8.0));
  CHECK(default_beta(3, 2, true, Term::diffusion) == doctest::Approx(0.25 * 1.9800));
  CHECK(default_beta(3, 2, false, Term::diffusion) == doctest::Approx(0.5 * 1.9800));
  CHECK(default_beta(2, 1, false, Term::transport) == doctest::Approx(1.0));
  CHECK(default_beta(3, 2, false, Term::transport) == doctest::Approx(0.25 * 1.243));
  CHECK_THROWS_AS(default_beta(4, 1, false, Term::diffusion), param_error);
  CHECK_THROWS_AS(default_beta(0, 1, false, Term::transport), param_error);
}

TEST_CASE("printed budget tables") {
  CHECK(beta2_max_table(1) == doctest::Approx(8.0));
  CHECK(beta2_max_table(2) == doctest::Approx(3.2275));
  CHECK(beta2_max_table(3) == doctest::Approx(1.9800));
  CHECK(beta1_max_table(1) == doctest::Approx(2.0));
  CHECK(beta1_max_table(2) == doctest::Approx(1.0));
  CHECK(beta1_max_table(3) == doctest::Approx(1.243));
  CHECK(beta_old_table(1) == doctest::Approx(2.0));
  CHECK(beta_old_table(2) == doctest::Approx(1.0));
  CHECK(beta_old_table(3) == doctest::Approx(0.8375));
}
