#pragma once

// The hyperbolic gamma function G(a+,a-;z) and its relatives.
//
// G is the minimal solution of the pair of analytic difference equations
//     G(z + i a_d/2) / G(z - i a_d/2) = 2 cosh(pi z / a_{-d}),   d = +,-
// normalized by G(0) = 1.  Inside the strip |Im z| < a = (a+ + a-)/2 it is
// the exponential exp(i g(z)) of a convergent integral; outside, the
// difference equations ladder the evaluation back into the strip.  Poles sit
// at z = -i a - i k a+ - i l a- and zeros at z = +i a + i k a+ + i l a-
// (k, l = 0, 1, 2, ...), all on the imaginary axis.

#include <functional>

#include "hc/quad.hpp"
#include "hc/types.hpp"

namespace hc {

// Positive scale (period) pair with derived constants.  Derived quantities
// are always recomputed from the two stored periods.
struct scale_params {
  real ap; // a_+
  real am; // a_-

  scale_params(real a_plus, real a_minus);

  real a() const { return 0.5 * (ap + am); }
  real alpha() const { return 2 * pi_v / (ap * am); }
  real chi() const { return pi_v / 24 * (ap / am + am / ap); }
  real a_small() const { return ap < am ? ap : am; }
  real a_large() const { return ap < am ? am : ap; }

  // Period selected by the sign label d = +1 / -1, and its partner.
  real period(int d) const { return d > 0 ? ap : am; }
  real coperiod(int d) const { return d > 0 ? am : ap; }

  // s_d(z) = sinh(pi z / a_d), c_d(z) = cosh(pi z / a_d),
  // e_d(z) = exp(pi z / a_d).
  cplx s(int d, cplx z) const { return std::sinh(pi_v * z / period(d)); }
  cplx c(int d, cplx z) const { return std::cosh(pi_v * z / period(d)); }
  cplx e(int d, cplx z) const { return std::exp(pi_v * z / period(d)); }

  // Modular-type parameter q_d = exp(i pi a_d / a_{-d}).
  cplx q(int d) const { return std::exp(iu * pi_v * period(d) / coperiod(d)); }
};

// Point of the pole/zero lattice z = sign * i (a + k a+ + l a-).
struct lattice_point {
  int k = 0;
  int l = 0;
  int sign = 0; // -1: pole lattice, +1: zero lattice
};

enum class mero_kind { regular, pole, zero };

// Value of a meromorphic function at a point, with pole/zero bookkeeping.
struct mero_value {
  mero_kind kind = mero_kind::regular;
  cplx value{0, 0}; // finite value (0 for an exact zero); unset for poles
  int order = 0;    // pole or zero order
  cplx residue{0, 0};
  bool has_residue = false;
  bool near_singular = false; // within 1e-8 of the lattice but not on it

  // Finite value accessor; rejects poles.
  cplx finite() const;
};

// g(a+,a-;z): the integral representation of log G on |Im z| < a.
// Throws domain_error outside the strip.
cplx log_gamma_strip(const scale_params& p, cplx z);

// G itself, anywhere in the plane, with pole/zero detection on the lattice
// (tolerance 1e-12 * (1 + |z|)).  The first-order pole at z = -i a carries
// its residue i sqrt(a+ a-) / (2 pi).
mero_value hyp_gamma(const scale_params& p, cplx z);

// Convenience accessors used by the function layers above this module:
// value that throws domain_error on a lattice pole, and an exp-consistent
// logarithm (branch fixed only up to 2 pi i, which cancels in products).
cplx hyp_gamma_value(const scale_params& p, cplx z);
cplx log_hyp_gamma(const scale_params& p, cplx z);

// Plane-wave asymptotics exp(-/+ i (chi + alpha z^2 / 4)) for Re z -> +/-inf
// (side = +1 / -1).
cplx hyp_gamma_asymp(const scale_params& p, cplx z, int side);

// The entire minimal function E with G(z) = E(z)/E(-z); zeros on the upper
// lattice only.
mero_value e_func(const scale_params& p, cplx z);
cplx e_func_value(const scale_params& p, cplx z);

// log of E(z)E(-z) on the strip (an absolutely convergent integral).
cplx log_e_pair_strip(const scale_params& p, cplx z);

// G_R(z) = exp(i(g + chi + alpha z^2/4)) in the strip, continued by its own
// ladder; G_R -> 1 as Re z -> +inf.  G_L(z) = 1 / G_R(-z).
cplx g_right(const scale_params& p, cplx z);
cplx g_left(const scale_params& p, cplx z);
cplx log_g_right(const scale_params& p, cplx z);
cplx log_g_left(const scale_params& p, cplx z);

// Euler gamma function (Lanczos rational approximation plus reflection),
// with pole markers at the non-positive integers.
mero_value euler_gamma(cplx z);
cplx euler_gamma_value(cplx z);
cplx log_euler_gamma(cplx z);

// Fourier transform  F(mu,nu;y) = int dx e^{i alpha x y} G(x-nu)/G(x-mu):
// either the closed hyperbolic-gamma product or direct quadrature.
enum class fourier_mode { closed, quadrature };
cplx fourier_F(const scale_params& p, cplx mu, cplx nu, cplx y,
               fourier_mode mode, const quad_config& cfg = {});

// Gaussian pair transform: both sides of the deformed self-duality relation
//   sqrt(alpha/2pi) int exp(i alpha w z) G_R(w - i a) dRe w
//     = exp(-i pi/4 - 2 i chi) G_L(z - i a),
// on the lines w = Re w + i(a - 2s), z = y + i s with s in (0, a/2).
struct pair_transform_result {
  cplx lhs;
  cplx rhs;
};
pair_transform_result gauss_pair_transform(const scale_params& p, real y,
                                           real s, const quad_config& cfg = {});

// Small-a- probe of the g_R plateau: measured g_R(z + lambda*shift) against
// the predicted single-exponential plateau value, where
// shift = (a+/2pi) ln(1/a-).
struct plateau_probe_result {
  cplx measured;
  cplx predicted;
};
plateau_probe_result appendix_b_probe(const scale_params& p, int lambda,
                                      cplx z);

} // namespace hc
