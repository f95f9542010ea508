#pragma once

// Adaptive complex-valued quadrature on horizontal lines and half-lines.
//
// All contour integrals in the library reduce to integrals of a smooth,
// exponentially decaying integrand along Im z = const (or along [0,inf)).
// The engine truncates the line using the caller-supplied decay-rate hint,
// then applies adaptive Gauss(7)/Kronrod(15) bisection until the summed
// panel error estimate meets the tolerance.

#include <functional>

#include "hc/types.hpp"

namespace hc {

struct quad_config {
  real abs_tol = 1e-10;         // absolute tolerance on the integral value
  real rel_tol = 1e-9;          // relative tolerance on the integral value
  int max_subdivisions = 2000;  // panel-bisection budget
  real tail_cut = 1e-14;        // |f|/peak fraction below which tails may be cut
  real initial_half_width = 30; // starting half-width; callers rescale
};

struct quad_result {
  cplx value{0, 0};
  real err_est = 0;    // estimated (conservative) absolute error
  long n_evals = 0;    // number of integrand evaluations
  real trunc_left = 0; // actual truncation abscissae used
  real trunc_right = 0;
};

// Integral of f along the line Im z = im_offset, i.e.
//   int_{-inf}^{inf} f(t + i*im_offset) dt.
// decay_rate_hint must be a positive lower bound on the asymptotic decay rate
// of |f| along both tails; it controls where truncation is provably harmless.
quad_result integrate_line(const std::function<cplx(cplx)>& f, real im_offset,
                           real decay_rate_hint, const quad_config& cfg = {});

// Integral of f over [0, inf) with the same truncation contract.
quad_result integrate_half_line(const std::function<cplx(real)>& f,
                                real decay_rate_hint,
                                const quad_config& cfg = {});

// Integral of f over the finite segment [a, b] (complex endpoints allowed;
// the path is the straight segment).  Used for bent-contour middle pieces.
quad_result integrate_segment(const std::function<cplx(cplx)>& f, cplx a,
                              cplx b, const quad_config& cfg = {});

} // namespace hc
