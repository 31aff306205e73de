#pragma once
#include <mpfr.h>

// quadrature-weight oracle at 704-bit precision, straight from the closed forms.
// at that precision the nu^5 cancellation costs at most ~40 digits for nu >= 1e-8,
// leaving far more than the 12 digits the tests ask for
namespace kpde_test {

inline void oracle_weights(double nu_in, double out[6]) {
  static const long prec = 704;
  // numerator polynomials in nu (powers 0..5): plain part P and e^{-nu} part Q
  static const int P[6][6] = {{60, 0, -15, 0, 2, 0},    {-60, 12, 21, -1, -3, 0},
                              {60, -24, -21, 8, 6, 0},  {-60, 36, 15, -15, -2, 6},
                              {60, -48, -3, 16, -6, 0}, {-60, 60, -15, -5, 3, 0}};
  static const int Q[6][6] = {{-60, -60, -15, 5, 3, 0}, {60, 48, -3, -16, -6, 0},
                              {-60, -36, 15, 15, -2, -6}, {60, 24, -21, -8, 6, 0},
                              {-60, -12, 21, 1, -3, 0}, {60, 0, -15, 0, 2, 0}};
  static const int D[6] = {60, 12, 6, 6, 12, 60};
  mpfr_t nu, e, p, q, t;
  mpfr_init2(nu, prec);
  mpfr_init2(e, prec);
  mpfr_init2(p, prec);
  mpfr_init2(q, prec);
  mpfr_init2(t, prec);
  mpfr_set_d(nu, nu_in, MPFR_RNDN);
  mpfr_neg(e, nu, MPFR_RNDN);
  mpfr_exp(e, e, MPFR_RNDN);
  for (int j = 0; j < 6; ++j) {
    mpfr_set_si(p, P[j][5], MPFR_RNDN);
    mpfr_set_si(q, Q[j][5], MPFR_RNDN);
    for (int m = 4; m >= 0; --m) {
      mpfr_mul(p, p, nu, MPFR_RNDN);
      mpfr_add_si(p, p, P[j][m], MPFR_RNDN);
      mpfr_mul(q, q, nu, MPFR_RNDN);
      mpfr_add_si(q, q, Q[j][m], MPFR_RNDN);
    }
    mpfr_mul(q, q, e, MPFR_RNDN);
    mpfr_add(p, p, q, MPFR_RNDN);
    mpfr_pow_ui(t, nu, 5, MPFR_RNDN);
    mpfr_mul_si(t, t, D[j], MPFR_RNDN);
    mpfr_div(p, p, t, MPFR_RNDN);
    out[j] = mpfr_get_d(p, MPFR_RNDN);
  }
  mpfr_clear(nu);
  mpfr_clear(e);
  mpfr_clear(p);
  mpfr_clear(q);
  mpfr_clear(t);
}

// cell moments m_q = alpha int_{-h}^{0} t^q e^{alpha t} dt, alpha = nu/h, q = 0..5,
// by the recursion m_q = -(-h)^q e^{-nu} - (q h / nu) m_{q-1}; exact in high precision
// where the double recursion cancels catastrophically at small nu
inline void oracle_moments(double nu_in, double h_in, double out[6]) {
  static const long prec = 704;
  mpfr_t nu, h, e, m, hq, t;
  mpfr_init2(nu, prec);
  mpfr_init2(h, prec);
  mpfr_init2(e, prec);
  mpfr_init2(m, prec);
  mpfr_init2(hq, prec);
  mpfr_init2(t, prec);
  mpfr_set_d(nu, nu_in, MPFR_RNDN);
  mpfr_set_d(h, h_in, MPFR_RNDN);
  mpfr_neg(e, nu, MPFR_RNDN);
  mpfr_exp(e, e, MPFR_RNDN);
  mpfr_ui_sub(m, 1, e, MPFR_RNDN);  // m_0 = 1 - e^{-nu}
  out[0] = mpfr_get_d(m, MPFR_RNDN);
  mpfr_set_ui(hq, 1, MPFR_RNDN);
  for (int q = 1; q <= 5; ++q) {
    mpfr_mul(hq, hq, h, MPFR_RNDN);
    mpfr_neg(hq, hq, MPFR_RNDN);  // (-h)^q
    mpfr_mul(t, m, h, MPFR_RNDN);
    mpfr_mul_si(t, t, q, MPFR_RNDN);
    mpfr_div(t, t, nu, MPFR_RNDN);  // (q h / nu) m_{q-1}
    mpfr_mul(m, hq, e, MPFR_RNDN);
    mpfr_neg(m, m, MPFR_RNDN);
    mpfr_sub(m, m, t, MPFR_RNDN);
    out[q] = mpfr_get_d(m, MPFR_RNDN);
  }
  mpfr_clear(nu);
  mpfr_clear(h);
  mpfr_clear(e);
  mpfr_clear(m);
  mpfr_clear(hq);
  mpfr_clear(t);
}

}  // namespace kpde_test
