#pragma once
#include <string>

#include "kpde/kernel.hpp"

namespace kpde {

// diffusion operator families: H1/H2 factor the second derivative into one-sided
// kernel chains of length 2k, H3 uses the symmetric-kernel first derivative twice,
// Hold is the prior single-pass form kept for comparison runs
enum class Variant { H1, H2, H3, Hold };

Variant variant_from_string(const std::string& s);
const char* variant_name(Variant v);

enum class Bias { minus, plus };

// one-sided first derivative chains:
//   minus: alpha  * sum_{p=1..k} D_L^p v      (upwind for positive speeds)
//   plus:  -alpha * sum_{p=1..k} D_R^p v
void ux_biased(const LineKernel& K, const double* v, int k, Bias side, double* out, LineWork& wk);

// third-order biased derivative with the cross-smoothed top term:
//   minus: alpha * (D_L + D_L^2 + (1/2) D_L^3 - (1/2) D_R D_L^2) v, plus mirrored.
// restores the design accuracy the plain k=3 chain loses to the one-sided closure
void ux_biased_mod3(const LineKernel& K, const double* v, Bias side, double* out, LineWork& wk);

// (1/2) b (ux^- + ux^+) + (1/2) r (ux^+ - ux^-), r = max|b| over the line.
// k = 3 uses the modified stencil; r == 0 writes zeros and skips the kernels
void transport_term(const LineKernel& K, const double* u, const double* b, double r, int k,
                    double* out, LineWork& wk);

// symmetric-kernel first derivative: (alpha/2) sum_{p=1..k} D_0^{p-1} (D_L - D_R) v
void deriv_new(const LineKernel& K, const double* v, int k, double* out, LineWork& wk);

// one line of the diffusion term (a u_x)_x; a holds nodal coefficient values.
// H3: deriv_new twice with the nodal product between passes.
// H1: w = -alpha sum_{q<=2k} D_R^q u, out = alpha sum_{p<=2k} D_L^p (a w).
// H2: the centered average of the two one-sided chains on both passes.
// Hold: out = -alpha^2 sum_{p<=k} D_0^p (a u).
void diffusion_apply(const LineKernel& K, const double* u, const double* a, int k, Variant var,
                     double* out, LineWork& wk);

}  // namespace kpde
