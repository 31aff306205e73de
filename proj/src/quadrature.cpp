#include "kpde/quadrature.hpp"

#include <cmath>
#include <vector>

#include "kpde/errors.hpp"

namespace kpde {

thread_local long long sweep_count = 0;

// series: C_j(nu) = sum_{m=1..20} ser[j][m-1] * nu^m; truncation < 1e-16 for nu < 0.1
static const double ser[6][20] = {
    {7.63888888888888864e-03,  -3.96825396825396803e-03, 1.21527777777777780e-03,
     -2.73368606701940059e-04, 4.91898148148148153e-05,  -7.41542408209074866e-06,
     9.64506172839506196e-07,  -1.10486221597332712e-07, 1.13181846812799202e-08,
     -1.04919086400567886e-09, 8.88504836090814901e-11,  -6.92743067470736354e-12,
     5.00517487308345660e-13,  -3.36980280029624498e-14, 2.12421214772772666e-15,
     -1.25893156919732588e-16, 7.04047586841576056e-18,  -3.72736877641972694e-19,
     1.87351598739354987e-20,  -8.96383967540817176e-22},
    {-6.45833333333333398e-02, 3.44246031746031772e-02,  -1.07390873015873016e-02,
     2.44984567901234589e-03,  -4.45739638447971800e-04, 6.78035313451980120e-05,
     -8.88514777403666355e-06, 1.02424581591248248e-06,  -1.05490711889521416e-07,
     9.82469360445550934e-09,  -8.35404842927991048e-10, 6.53691926207877035e-11,
     -4.73816452995547493e-12, 3.19918351575255739e-13,  -2.02186523890725387e-14,
     1.20107395541394144e-15,  -6.73117891565721698e-17, 3.57053381685150635e-18,
     -1.79787714318200908e-19, 8.61602670756563014e-21},
    {5.56944444444444464e-01,  -3.67460317460317487e-01, 1.36359126984126972e-01,
     -3.60339506172839483e-02, 7.45012125220458586e-03,  -1.26903960237293562e-03,
     1.84074541713430596e-04,  -2.32676274342941017e-05, 2.60731194510956417e-06,
     -2.62465953603519740e-07, 2.39875276044257515e-08,  -2.00763913367010149e-09,
     1.54989859325490170e-10,  -1.11042367958942249e-11, 7.42191832606231012e-13,
     -4.64899627808239397e-14, 2.73997776326115494e-15,  -1.52478162141636342e-16,
     8.03713247720475221e-18,  -4.02388980779970652e-19},
    {5.56944444444444464e-01,  -1.89484126984126977e-01, 4.73710317460317443e-02,
     -9.41909171075837673e-03, 1.55836640211640207e-03,  -2.20984648067981411e-04,
     2.74320586820586809e-05,  -3.02873566762455657e-06, 3.01141484177198437e-07,
     -2.72353736308762753e-08, 2.25906775592622160e-09,  -1.73045194004966797e-10,
     1.23134018136849518e-11,  -8.18060075297326893e-13, 5.09679385290708417e-14,
     -2.98949272625812772e-15, 1.65644910540340995e-16,  -8.69700040313749794e-18,
     4.33876530663932879e-19,  -2.06179917044899848e-20},
    {-6.45833333333333398e-02, 3.01587301587301591e-02,  -8.60615079365079430e-03,
     1.84082892416225744e-03,  -3.18975970017636677e-04, 4.66971300304633630e-05,
     -5.93317433595211413e-06, 6.66771500104833426e-07,  -6.72243045754950537e-08,
     6.14831964038313204e-09,  -5.14701913924797492e-10, 3.97315139184109010e-11,
     -2.84574141364156736e-12, 1.90126851983927488e-13,  -1.19034798371120291e-14,
     7.01181040654928591e-16,  -3.89986402292374666e-17, 2.05446254102536883e-18,
     -1.02801457497223718e-19, 4.89839282607532256e-21},
    {7.63888888888888864e-03,  -3.67063492063492060e-03, 1.06646825396825387e-03,
     -2.30930335097001755e-04, 4.03714726631393311e-05,  -5.94987574154240811e-06,
     7.59913954358398834e-07,  -8.57552940886274234e-08, 8.67532489556299088e-09,
     -7.95687386295851949e-10, 6.67692983334517701e-11,  -5.16464697623272174e-12,
     3.70565685329708233e-13,  -2.47959020943929645e-14, 1.55452212513666076e-15,
     -9.16796559409246726e-17, 5.10453406141851648e-18,  -2.69166621323336133e-19,
     1.34802506971337143e-20,  -6.42825412855975852e-22},
};

WeightSet compute_weights(double nu) {
  if (!(nu > 0.0) || !std::isfinite(nu))
    throw param_error("compute_weights: nu must be positive and finite");
  WeightSet w;
  w.nu = nu;
  w.expnu = std::exp(-nu);
  if (nu >= nu_series_switch) {
    const double n2 = nu * nu, n3 = n2 * nu, n4 = n3 * nu, n5 = n4 * nu, e = w.expnu;
    w.c[0] = ((2 * n4 - 15 * n2 + 60) + (3 * n4 + 5 * n3 - 15 * n2 - 60 * nu - 60) * e) /
             (60 * n5);
    w.c[1] = ((-3 * n4 - n3 + 21 * n2 + 12 * nu - 60) +
              (-6 * n4 - 16 * n3 - 3 * n2 + 48 * nu + 60) * e) /
             (12 * n5);
    w.c[2] = ((6 * n4 + 8 * n3 - 21 * n2 - 24 * nu + 60) +
              (-6 * n5 - 2 * n4 + 15 * n3 + 15 * n2 - 36 * nu - 60) * e) /
             (6 * n5);
    w.c[3] = ((6 * n5 - 2 * n4 - 15 * n3 + 15 * n2 + 36 * nu - 60) +
              (6 * n4 - 8 * n3 - 21 * n2 + 24 * nu + 60) * e) /
             (6 * n5);
    w.c[4] = ((-6 * n4 + 16 * n3 - 3 * n2 - 48 * nu + 60) +
              (-3 * n4 + n3 + 21 * n2 - 12 * nu - 60) * e) /
             (12 * n5);
    w.c[5] = ((3 * n4 - 5 * n3 - 15 * n2 + 60 * nu - 60) + (2 * n4 - 15 * n2 + 60) * e) /
             (60 * n5);
  } else {
    for (int j = 0; j < 6; ++j) {
      double s = 0.0;
      for (int m = 19; m >= 0; --m) s = s * nu + ser[j][m];
      w.c[j] = s * nu;
    }
  }
  return w;
}

void local_integrals_ext(const double* ext, int n, const WeightSet& w, Side side, double* jout) {
  const double c0 = w.c[0], c1 = w.c[1], c2 = w.c[2], c3 = w.c[3], c4 = w.c[4], c5 = w.c[5];
  if (side == Side::L) {
    for (int i = 0; i < n; ++i)
      jout[i] = c0 * ext[i] + c1 * ext[i + 1] + c2 * ext[i + 2] + c3 * ext[i + 3] +
                c4 * ext[i + 4] + c5 * ext[i + 5];
  } else {
    for (int i = 0; i < n; ++i)
      jout[i] = c0 * ext[i + 6] + c1 * ext[i + 5] + c2 * ext[i + 4] + c3 * ext[i + 3] +
                c4 * ext[i + 2] + c5 * ext[i + 1];
  }
}

void local_integrals(const double* v, int n, const WeightSet& w, Side side, double* jout) {
  if (n < 6) throw param_error("local_integrals: the six-node stencil needs n >= 6");
  std::vector<double> ext((std::size_t)n + 6);
  ext[0] = v[n - 3];
  ext[1] = v[n - 2];
  ext[2] = v[n - 1];
  for (int i = 0; i < n; ++i) ext[3 + i] = v[i];
  ext[n + 3] = v[0];
  ext[n + 4] = v[1];
  ext[n + 5] = v[2];
  local_integrals_ext(ext.data(), n, w, side, jout);
}

void sweep(const double* j, int n, double expnu, Side side, double* iout) {
  ++sweep_count;
  if (side == Side::L) {
    double acc = 0.0;
    iout[0] = 0.0;
    for (int i = 1; i <= n; ++i) {
      acc = acc * expnu + j[i == n ? 0 : i];
      iout[i] = acc;
    }
  } else {
    double acc = 0.0;
    iout[n] = 0.0;
    for (int i = n - 1; i >= 0; --i) {
      acc = acc * expnu + j[i];
      iout[i] = acc;
    }
  }
}

}  // namespace kpde
