#pragma once
#include <complex>

namespace kpde {

// semi-discrete diffusion symbol S_k(z) = z^2 (1 - w^k)^2, w = z^2/(1+z^2), z = eta/alpha.
// the scheme factor is Q = 1 - beta S_k; A-stability needs beta <= 2 / max_z S_k
double s_k(double z, int k);

// 2 / max_z S_k via a dense log scan on [1e-3, 1e3] plus golden-section refinement
// (relative tolerance 1e-8)
double beta_max_semi(int k);

// semi-discrete Von Neumann factors
double amplification_semi_1d(int k, double beta, double z);

// 2D with a cross term: Q = 1 - beta (R(z1)^2 + R(z2)^2 + q R(z1) R(z2)),
// R(z) = sum_{p=1..k} z^{2p-1}/(1+z^2)^p, q = (A12+A21)/sqrt(A11 A22); needs |q| <= 2
double amplification_semi_2d(int k, double beta, double z1, double z2, double cross_ratio);

// fully-discrete factor measured on an explicit periodic line of stability_ring_n
// nodes (dx = 1): the production diffusion pipeline is applied to the sampled
// cos/sin mode pair and the order-k RK polynomial wraps the result
inline constexpr int stability_ring_n = 256;

std::complex<double> amplification_full_1d(int k, double beta, double kappa_dx,
                                           double dt_over_dx2);

}  // namespace kpde
