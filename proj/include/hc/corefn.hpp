#pragma once

// The relativistic conical function family built on the hyperbolic gamma
// function G: the four-factor kernel K, its Fourier transform B, the line
// integral C, the conical function R with its renormalized companion R_r
// (five equivalent minimal representations), the weight package
// (c, u, w, w_r, phi), the unitarized eigenfunction E and the real form F,
// the q-Gegenbauer polynomials generated by the spectral recurrence, and the
// elementary (finite trigonometric) cases R_N at coupling (N+1)a+.
//
// Every quadrature-backed routine here integrates a product
//     prod_j G(z + n_j) / prod_k G(z + d_k) * exp(i alpha w z)
// along the real axis.  The coupling b lives on a guarded open interval
// inside (0, 2a): near either endpoint the contour is pinched between the
// pole/zero ladders of the integrand factors.  Complex x or y are admitted
// only when every integrand singularity keeps a configurable distance from
// the contour and both tail exponents stay safely negative; real x, y pass
// automatically.

#include "hc/hypgamma.hpp"
#include "hc/quad.hpp"
#include "hc/types.hpp"

namespace hc {

// Tuning for the conical-function quadratures and domain guards.  The quad
// tolerances default tighter than the engine's own defaults because identity
// tests in this layer resolve residuals down to ~1e-10; the guard fractions
// are scale-free (eps_b in units of a, pole margin in units of min(a+,a-)).
struct corefn_config {
  quad_config quad;
  real eps_b_frac = 0.02;       // accept b in [eps_b, 2a - eps_b], eps_b = frac * a
  real pole_margin_frac = 0.05; // complex-argument gate, units of min(a+,a-)

  corefn_config() {
    quad.abs_tol = 1e-11;
    quad.rel_tol = 1e-10;
  }
};

// Representation selector for R / R_r / E / F:
//   0      automatic (pick the representation whose integrand has the widest
//          singularity margin and the slowest oscillation for the arguments)
//   1      pure G-ratio, no plane wave; shifts (x -+ y)/2 -+ ib/2
//   2, 4   plane wave in y resp. x, shifts -+ x/2 resp. -+ y/2, tail a(2a-b)
//   3, 5   plane wave in x resp. y, shifts -+ y/2 resp. -+ x/2, tail ab
// (2,3) carry the prefactor G(+-x + ia - ib), (4,5) carry G(+-y + ia - ib).

// K(b;x,v) = G((+-x +-v - ib)/2), the product over all four sign choices.
// Pole/zero lattice hits in the factors propagate into the result (net
// order); a simultaneous pole and zero among the factors has no determinate
// finite value and is rejected with domain_error.
mero_value kernel_K(const scale_params& p, cplx b, cplx x, cplx v);

// C(b;x,y) = sqrt(alpha/2pi) *
//   int dz G(z+(x-y)/2-ib/2) G(z-(x-y)/2-ib/2)
//          / [ G(z+(x+y)/2+ib/2) G(z-(x+y)/2+ib/2) ].
// Symmetric in x <-> y, even in each argument separately, real for real
// parameters, and invariant under swapping a+ <-> a-.
cplx conical_C(const scale_params& p, real b, cplx x, cplx y,
               const corefn_config& cfg = {});

// B(b;x,y): Fourier transform of the kernel over its second argument,
//   B = 1/2 int dv K(b;x,v) exp(i alpha v y / 2).
// rep selects the evaluation route: 1 = the kernel Fourier integral folded
// into a two-over-two G-ratio (reflection removes two factors), 2 = the
// x-prefactored G-ratio form, 3 = the four-numerator plane-wave form with
// prefactor G(ia-ib)^2.
cplx conical_B(const scale_params& p, real b, cplx x, cplx y, int rep,
               const corefn_config& cfg = {});

// The conical function R(b;x,y) and the renormalized R_r(b;x,y).  R_r is the
// numerically robust primitive: its prefactors stay finite and nonzero on
// the whole guarded b-interval, whereas R carries the factor G(2ib-ia) whose
// lattice zeros (e.g. b = a when a is a lattice point) annihilate it.
// Normalizations: R(b;x,ib) = 1 and R_r(b;x,ib) = G(ib-ia)/G(2ib-ia).
cplx rcal(const scale_params& p, real b, cplx x, cplx y, int rep = 0,
          const corefn_config& cfg = {});
cplx rcal_r(const scale_params& p, real b, cplx x, cplx y, int rep = 0,
            const corefn_config& cfg = {});

// Weight package at spectral point z:
//   c   = G(z + ia - ib) / G(z + ia)        (Harish-Chandra-type c-function)
//   u   = -c(b;z) / c(b;-z)                 (unitary reflection multiplier)
//   w   = 1 / (c(b;z) c(b;-z))              (weight; positive for b, z > 0)
//   w_r = G(z - ia + ib) G(-z - ia + ib)    (reduced weight)
//   phi = exp(i alpha b (b - 2a) / 4)       (asymptotic phase)
// Lattice hits follow meromorphic-ratio semantics: a net zero gives 0, a net
// pole gives a complex infinity; an indeterminate hit yields NaN.
struct weight_values {
  cplx c;
  cplx u;
  cplx w;
  cplx w_r;
  cplx phi;
};
weight_values weight_package(const scale_params& p, cplx b, cplx z);

// E(b;x,y) = phi(b) R_r(b;x,y) / (c(b;x) c(b;y)): the eigenfunction with
// unit-modulus plane-wave asymptotics e^{i alpha x y/2} - u(b;-y)
// e^{-i alpha x y/2} as x -> +infinity.  Invariant under b -> 2a - b.
cplx efn_E(const scale_params& p, real b, cplx x, cplx y, int rep = 0,
           const corefn_config& cfg = {});

// F(b;x,y) = (w(b;x) w(b;y))^{1/2} R_r(b;x,y) with positive square roots;
// defined for b, x, y > 0, where it is real-valued.
cplx ffn_F(const scale_params& p, real b, real x, real y, int rep = 0,
           const corefn_config& cfg = {});

// q-Gegenbauer polynomial P_n evaluated at c = cosh(pi x / a+), generated by
// the three-term recurrence of the spectral variable on the lattice
// y_n = i(b + n a-):
//   (s+(y_n - ib)/s+(y_n)) P_{n-1} + (s+(y_n + ib)/s+(y_n)) P_{n+1}
//       = 2 cosh(pi x/a+) P_n,       P_0 = 1,
// whose first step is degenerate (the P_{-1} coefficient vanishes).  Throws
// domain_error when a recurrence denominator sinh factor vanishes.
cplx gegenbauer_P(const scale_params& p, real b, int n, cplx x);
// Same polynomial as a function of the argument c itself.
cplx gegenbauer_P_value(const scale_params& p, real b, int n, cplx cval);

// Elementary cases R_N(x,y) = R_r((N+1)a+; x,y), requiring (N+1)a+ < 2a:
//   N = 0:  sin(pi x y / a+ a-) / (2 s-(x) s-(y)),
//   N >= 1: (-i)^{N+1} (K_N(x,y) - K_N(x,-y)) / (P_N(x) P_N(y)),
// where P_N(z) = prod_{j=-N..N} 2 s-(z + i j a+) and K_N is the finite
// trigonometric sum with plane-wave factor exp(i pi x y / a+ a-).
cplx elementary_RN(const scale_params& p, int N, cplx x, cplx y);

} // namespace hc
