#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "kpde/errors.hpp"
#include "kpde/operators.hpp"

using namespace kpde;

namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

// apply op to the cos/sin pair of mode eta and read off the complex symbol
template <class Op>
std::complex<double> measured_symbol(int n, double alpha, double eta, Op&& op) {
  LineKernel K = make_line_kernel(n, alpha, two_pi / n);
  LineWork wk;
  std::vector<double> vc(n), vs(n), oc(n), os(n);
  for (int i = 0; i < n; ++i) {
    const double x = two_pi * i / n;
    vc[i] = std::cos(eta * x);
    vs[i] = std::sin(eta * x);
  }
  op(K, vc.data(), oc.data(), wk);
  op(K, vs.data(), os.data(), wk);
  // op[e^{i eta x}] = lambda e^{i eta x}; at x = 0: lambda = oc[0] + i os[0]
  return {oc[0], os[0]};
}

std::complex<double> measured_D(int n, double alpha, double eta, Kern which) {
  return measured_symbol(n, alpha, eta,
                         [&](const LineKernel& K, const double* v, double* out, LineWork& wk) {
                           apply_D(K, v, which, out, wk);
                         });
}

}  // namespace

TEST_CASE("difference operators converge to the continuum symbols at high order") {
  const double alpha = 2.0, eta = 3.0;
  const double z = eta / alpha;
  const std::complex<double> iz(0.0, z);
  const std::complex<double> dl = iz / (1.0 + iz);
  const std::complex<double> dr = -iz / (1.0 - iz);
  const std::complex<double> d0(z * z / (1.0 + z * z), 0.0);
  double el[3], er[3], e0[3];
  int idx = 0;
  for (int n : {128, 256, 512}) {
    el[idx] = std::abs(measured_D(n, alpha, eta, Kern::L) - dl);
    er[idx] = std::abs(measured_D(n, alpha, eta, Kern::R) - dr);
    e0[idx] = std::abs(measured_D(n, alpha, eta, Kern::Zero) - d0);
    ++idx;
  }
  CHECK(el[0] < 5e-8);
  CHECK(er[0] < 5e-8);
  CHECK(e0[0] < 5e-8);
  for (double* e : {el, er, e0}) {
    CHECK(std::log2(e[0] / e[1]) > 4.5);
    CHECK(std::log2(e[1] / e[2]) > 4.5);
  }
}

TEST_CASE("difference operators preserve a single mode's span") {
  const int n = 128;
  const double alpha = 2.0, eta = 3.0;
  LineKernel K = make_line_kernel(n, alpha, two_pi / n);
  LineWork wk;
  std::vector<double> v(n), out(n);
  for (int i = 0; i < n; ++i) v[i] = std::sin(eta * two_pi * i / n);
  apply_D(K, v.data(), Kern::L, out.data(), wk);
  // project out on span{sin(eta x), cos(eta x)}; the residual must vanish
  double cs = 0.0, cc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = two_pi * i / n;
    cs += out[i] * std::sin(eta * x);
    cc += out[i] * std::cos(eta * x);
  }
  cs *= 2.0 / n;
  cc *= 2.0 / n;
  double resid = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = two_pi * i / n;
    resid = std::max(resid, std::abs(out[i] - cs * std::sin(eta * x) - cc * std::cos(eta * x)));
  }
  CHECK(resid <= 1e-12);
}

TEST_CASE("kernel first derivative converges at order 2k") {
  for (int k : {1, 2, 3}) {
    double err[3];
    int idx = 0;
    for (int n : {64, 128, 256}) {
      const double dx = two_pi / n;
      const double alpha = 1.0 / dx;  // nu = 1
      LineKernel K = make_line_kernel(n, alpha, dx);
      LineWork wk;
      std::vector<double> v(n), out(n);
      for (int i = 0; i < n; ++i) v[i] = std::sin(two_pi * i / n);
      deriv_new(K, v.data(), k, out.data(), wk);
      double e = 0.0;
      for (int i = 0; i < n; ++i)
        e = std::max(e, std::abs(out[i] - std::cos(two_pi * i / n)));
      err[idx++] = e;
    }
    const double p1 = std::log2(err[0] / err[1]);
    const double p2 = std::log2(err[1] / err[2]);
    INFO("k = " << k << " orders " << p1 << " " << p2);
    CHECK(p1 == doctest::Approx(2.0 * k).epsilon(0.25 / (2.0 * k)));
    CHECK(p2 == doctest::Approx(2.0 * k).epsilon(0.25 / (2.0 * k)));
  }
}

TEST_CASE("sweep counts match the operator structure") {
  const int n = 64;
  LineKernel K = make_line_kernel(n, 2.0, two_pi / n);
  LineWork wk;
  std::vector<double> u(n), a(n, 1.0), b(n, 1.0), out(n);
  for (int i = 0; i < n; ++i) u[i] = std::sin(two_pi * i / n);
  for (int k : {1, 2, 3}) {
    long long before = sweep_count;
    diffusion_apply(K, u.data(), a.data(), k, Variant::H3, out.data(), wk);
    CHECK(sweep_count - before == 4 * k);
    before = sweep_count;
    diffusion_apply(K, u.data(), a.data(), k, Variant::H1, out.data(), wk);
    CHECK(sweep_count - before == 4 * k);
    before = sweep_count;
    diffusion_apply(K, u.data(), a.data(), k, Variant::H2, out.data(), wk);
    CHECK(sweep_count - before == 8 * k);
    before = sweep_count;
    diffusion_apply(K, u.data(), a.data(), k, Variant::Hold, out.data(), wk);
    CHECK(sweep_count - before == 2 * k);
    before = sweep_count;
    deriv_new(K, u.data(), k, out.data(), wk);
    CHECK(sweep_count - before == 2 * k);
  }
  long long before = sweep_count;
  transport_term(K, u.data(), b.data(), 1.0, 3, out.data(), wk);
  CHECK(sweep_count - before == 8);
}

TEST_CASE("biased derivatives are antisymmetric under line reversal") {
  const int n = 80;
  LineKernel K = make_line_kernel(n, 3.0, two_pi / n);
  LineWork wk;
  std::vector<double> v(n), rv(n), om(n), op(n);
  for (int i = 0; i < n; ++i)
    v[i] = std::sin(two_pi * i / n) + 0.4 * std::cos(2.0 * two_pi * i / n);
  for (int i = 0; i < n; ++i) rv[i] = v[(n - i) % n];
  for (int k : {1, 2, 3}) {
    ux_biased(K, v.data(), k, Bias::minus, om.data(), wk);
    ux_biased(K, rv.data(), k, Bias::plus, op.data(), wk);
    for (int i = 0; i < n; ++i)
      CHECK(op[i] == doctest::Approx(-om[(n - i) % n]).scale(1.0).epsilon(1e-13));
  }
  ux_biased_mod3(K, v.data(), Bias::minus, om.data(), wk);
  ux_biased_mod3(K, rv.data(), Bias::plus, op.data(), wk);
  for (int i = 0; i < n; ++i)
    CHECK(op[i] == doctest::Approx(-om[(n - i) % n]).scale(1.0).epsilon(1e-13));
}

TEST_CASE("biased derivative error decreases as the rate grows") {
  const int n = 512;
  std::vector<double> v(n), out(n);
  for (int i = 0; i < n; ++i) v[i] = std::sin(two_pi * i / n);
  double prev = 1e300;
  for (double alpha : {10.0, 20.0, 40.0, 80.0}) {
    LineKernel K = make_line_kernel(n, alpha, two_pi / n);
    LineWork wk;
    ux_biased(K, v.data(), 2, Bias::minus, out.data(), wk);
    double e = 0.0;
    for (int i = 0; i < n; ++i)
      e = std::max(e, std::abs(out[i] - std::cos(two_pi * i / n)));
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("transport with constant coefficient reduces to the upwind branch") {
  const int n = 64;
  const double c = 1.5;
  LineKernel K = make_line_kernel(n, 5.0, two_pi / n);
  LineWork wk;
  std::vector<double> u(n), b(n, c), got(n), up(n);
  for (int i = 0; i < n; ++i) u[i] = std::sin(two_pi * i / n);
  for (int k : {1, 2, 3}) {
    transport_term(K, u.data(), b.data(), c, k, got.data(), wk);
    if (k >= 3)
      ux_biased_mod3(K, u.data(), Bias::plus, up.data(), wk);
    else
      ux_biased(K, u.data(), k, Bias::plus, up.data(), wk);
    for (int i = 0; i < n; ++i)
      CHECK(got[i] == doctest::Approx(c * up[i]).scale(1.0).epsilon(1e-13));
  }
}

TEST_CASE("transport handles degenerate and invalid rates") {
  const int n = 32;
  LineKernel K = make_line_kernel(n, 2.0, two_pi / n);
  LineWork wk;
  std::vector<double> u(n), b(n, 0.0), out(n, 7.0);
  for (int i = 0; i < n; ++i) u[i] = std::cos(two_pi * i / n);
  transport_term(K, u.data(), b.data(), 0.0, 2, out.data(), wk);
  for (int i = 0; i < n; ++i) CHECK(out[i] == 0.0);
  CHECK_THROWS_AS(transport_term(K, u.data(), b.data(), -1.0, 2, out.data(), wk), param_error);
}

TEST_CASE("nonlinear diffusion composes gradient, product, and divergence") {
  const int n = 64;
  const int k = 2;
  LineKernel K = make_line_kernel(n, 2.0, two_pi / n);
  LineWork wk, wk2;
  std::vector<double> u(n), a(n), got(n), w(n), aw(n), expect(n);
  for (int i = 0; i < n; ++i) {
    const double x = two_pi * i / n;
    u[i] = std::sin(x);
    a[i] = 2.0 + std::cos(x);
  }
  diffusion_apply(K, u.data(), a.data(), k, Variant::H3, got.data(), wk);
  deriv_new(K, u.data(), k, w.data(), wk2);
  for (int i = 0; i < n; ++i) aw[i] = a[i] * w[i];
  deriv_new(K, aw.data(), k, expect.data(), wk2);
  for (int i = 0; i < n; ++i)
    CHECK(got[i] == doctest::Approx(expect[i]).scale(1.0).epsilon(1e-15));
}
