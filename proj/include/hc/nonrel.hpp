#pragma once

// Nonrelativistic layer: Gauss hypergeometric evaluation for the conical
// parameter family, the limit eigenfunction psi_nr, the conical (Mehler)
// function, four integral representations of psi_nr, the Harish-Chandra
// scattering data, and probes certifying the small-beta limit of the
// relativistic function against psi_nr.

#include <vector>

#include "hc/corefn.hpp"
#include "hc/quad.hpp"
#include "hc/types.hpp"

namespace hc {

// Gauss hypergeometric 2F1(a,b;c;z) for real z <= 0 (the only regime the
// conical family needs).  Two evaluation strategies:
//   pfaff:     (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)), series in z/(z-1) in [0,1)
//   inversion: the standard |z| -> infinity linear transformation, series in
//              1/z; requires a - b away from the integers
// The automatic mode uses pfaff for moderate z and inversion for large |z|,
// where the pfaff series argument approaches one.
struct hyp_args {
  cplx a{0.0, 0.0};
  cplx b{0.0, 0.0};
  cplx c{0.0, 0.0};
  real z = 0.0;
  enum class branch_mode { automatic, pfaff, inversion };
  branch_mode branch = branch_mode::automatic;
};

cplx hyp2f1(const hyp_args& args);

// Dimensionless nonrelativistic parameters: coupling lambda = g/hbar,
// position r = mu x / 2, momentum k = p / (hbar mu).
struct nr_params {
  real lambda = 0.0;
  real r = 0.0;
  real k = 0.0;
};

// The two hypergeometric forms of the limit eigenfunction:
//   one: 2F1((lambda+ik)/2, (lambda-ik)/2; lambda+1/2; -sinh^2 r)
//   two: 2F1(lambda+ik, lambda-ik; lambda+1/2; -sinh^2(r/2))
// related by the classical quadratic transformation.
enum class psi_variant { one, two };

real psi_nr(const nr_params& n, psi_variant v = psi_variant::one);

// Analytic continuation of psi_nr in the momentum variable (used by the
// exact-shift checks of the dual difference operator).
cplx psi_nr_k(real lambda, real r, cplx k, psi_variant v = psi_variant::one);

// Conical (Mehler) function P^{1/2-lambda}_{ik-1/2}(cosh r): the series form
// and the cosine-kernel integral form.
real conical_P(const nr_params& n);
real conical_P_integral(const nr_params& n, const quad_config& cfg = {});

// Integral representations of psi_nr inherited from the minimal
// representations of the relativistic function.  The second minimal
// representation has no sensible limit and is excluded.  rep_iii requires
// lambda > 1/2 (absolute convergence); its vertical-line parameter is chosen
// as c = max(0, lambda-1) + 1/2.
enum class nr_rep { rep_i, rep_iii, rep_iv, rep_v };

real psi_nr_rep(const nr_params& n, nr_rep rep, const quad_config& cfg = {});

// Scattering layer: weight w_nr(lambda;r) = (2 sinh r)^{2 lambda},
// Harish-Chandra function c_hat_nr = 2 Gamma(2 lambda) Gamma(ik) /
// (Gamma(lambda) Gamma(lambda+ik)), the unitary scattering function
// u_hat_nr = -c_hat_nr(k)/c_hat_nr(-k), and the plane-wave-normalized
// eigenfunction E_nr = 2 w_nr^{1/2} psi_nr / c_hat_nr.
real w_nr(real lambda, real r);
cplx c_hat_nr(real lambda, real k);
cplx u_hat_nr(real lambda, real k);

struct nr_scattering_values {
  cplx c_hat{0.0, 0.0};
  cplx u_hat{0.0, 0.0};
  cplx e_fn{0.0, 0.0};
};

nr_scattering_values nr_scattering(const nr_params& n);

// Small-beta limit probe.  For each beta in the (decreasing) list, evaluates
// the relativistic function at scale (2 pi / mu, hbar beta) with coupling
// g beta and spectral variable beta p / mu, and reports
//   deviation   = | relativistic value - psi_nr |
//   cx_residual = | phi(b)/c(b;x) - w_nr^{1/2} |        (weight limit in x)
//   cy_residual = | G(ia-2ib) G(ib-ia) / c(b;y) - 2/c_hat_nr |  (in y)
struct nr_limit_setup {
  real mu = 0.0;
  real hbar = 0.0;
  real g = 0.0;
  real x = 0.0;
  real p = 0.0;
};

struct nr_limit_point {
  real beta = 0.0;
  real deviation = 0.0;
  real cx_residual = 0.0;
  real cy_residual = 0.0;
};

std::vector<nr_limit_point> nr_limit_probe(const nr_limit_setup& s,
                                           const std::vector<real>& betas,
                                           const corefn_config& cfg = {});

}  // namespace hc
