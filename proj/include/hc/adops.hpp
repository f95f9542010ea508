#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hc/corefn.hpp"
#include "hc/hypgamma.hpp"
#include "hc/types.hpp"

namespace hc {

using cfun = std::function<cplx(cplx)>;

// A two-term analytic difference operator
//   (L f)(z) = coeff_plus(z) f(z - step) + coeff_minus(z) f(z + step),
// using the translation convention (T_c f)(z) = f(z - c), so coeff_plus
// multiplies the "upward" translate T_step and coeff_minus the inverse one.
struct ado_spec {
  cfun coeff_plus;
  cfun coeff_minus;
  cplx step{0.0, 0.0};
  std::string variable = "x";  // informational tag only
};

cplx apply_ado(const ado_spec& spec, const cfun& f, cplx z);

// The operator as a reusable function handle z -> (L f)(z).
cfun ado_as_function(const ado_spec& spec, cfun f);

// Builders.  delta = +1 works with the period a+, delta = -1 with a-; the
// translation step is i a_{-delta} in all of them (2 i a_{-delta} never
// appears here; the second-order kernel identity builds it by composition).
//
// make_A:        s_d(z-ib)/s_d(z) T + s_d(z+ib)/s_d(z) T^{-1}
// make_script_A: the c-function conjugate c^{-1} A c = T + V_d(b;z) T^{-1}
//                with V_d = s_d(z+ib) s_d(z-ib+ia_{-d}) /
//                           (s_d(z) s_d(z+ia_{-d}))
// make_H:        the w^{1/2} A w^{-1/2} conjugate in its manifestly
//                symmetric form: each coefficient is a product of two
//                principal square roots,
//                  sqrt(s_d(z -+ ib)/s_d(z)) *
//                  sqrt(s_d(z -+ ia_{-d} +- ib)/s_d(z -+ ia_{-d})),
//                which tends to 1 for z -> +infinity on the real axis.  If a
//                square-root argument falls on the branch cut (negative real
//                axis) the evaluation throws instead of silently flipping
//                sign.
ado_spec make_A(const scale_params& p, int delta, cplx b);
ado_spec make_script_A(const scale_params& p, int delta, cplx b);
ado_spec make_H(const scale_params& p, int delta, cplx b);

// Coupling shifts.
//
// make_shift_up:          -i/(2 s_d(x)) (T - T^{-1}); intertwines
//                         A_{d'}(b) into A_{d'}(b + a_{-d}).
// make_shift_down:        2i/s_d(x) [ s_d(x-ib) s_d(x+ia_{-d}-ib) T
//                         - s_d(x+ib) s_d(x-ia_{-d}+ib) T^{-1} ];
//                         intertwines A_{d'}(b) into A_{d'}(b - a_{-d}).
// All four step the argument by i a_{-d}; the coupling moves by the same
// coperiod a_{-d}.
// make_script_shift_up:   T - [s_d(x-ib) s_d(x-ib+ia_{-d}) /
//                         (s_d(x) s_d(x+ia_{-d}))] T^{-1}
// make_script_shift_down: T - [s_d(x+ib) s_d(x+ib-ia_{-d}) /
//                         (s_d(x) s_d(x+ia_{-d}))] T^{-1}
ado_spec make_shift_up(const scale_params& p, int delta);
ado_spec make_shift_down(const scale_params& p, int delta, cplx b);
ado_spec make_script_shift_up(const scale_params& p, int delta, cplx b);
ado_spec make_script_shift_down(const scale_params& p, int delta, cplx b);

struct residual_report {
  std::string identity_id;
  std::vector<std::pair<std::string, cplx>> params;
  cplx lhs{0.0, 0.0};
  cplx rhs{0.0, 0.0};
  real residual = 0.0;
  real tol = 0.0;
  bool verdict = false;
};

// Kernel-function identities.  Each relates coefficient-weighted translates
// of the four-gamma kernel in its first argument to the same structure in
// the second argument:
//   idd: coefficients s_d(w -+ i(b-d))/s_d(w), translates by i a_{-d}
//        (for d = 0 this is the difference-operator eigenrelation, and the
//        report additionally folds in the residual of that rearrangement);
//   id2: coefficients s_d(w -+ ib)/s_d(w), translates by 2 i a_{-d};
//   id3: coefficients s_d((w -+ ib)/2)/s_d(w/2), translates by i a_{-d}.
enum class kernel_identity { idd, id2, id3 };

// tol <= 0 selects the per-identity default (1e-10).
residual_report kernel_identity_residual(kernel_identity id,
                                         const scale_params& p, cplx b,
                                         cplx d, int delta, cplx x, cplx v,
                                         real tol = 0.0);

// Shift relations.  Operator-level relations (ush, dsh, sa1, sa2, udrel) are
// verified by applying both sides to an entire, zero-free probe function,
// by default exp(i alpha 0.37 x / 2); relations acting on the conical
// function (cru, crd) compare the shifted quadrature values directly.
//   ush:   S^u_d A_{d'}(b) = A_{d'}(b + a_{-d}) S^u_d      (residual: max d')
//   dsh:   S^d_d(b) A_{d'}(b) = A_{d'}(b - a_{-d}) S^d_d(b) (residual: max d')
//   sa1:   S^u_d S^d_d(b) = A_d(b)^2 - 4 cos^2(pi (b - a_{-d})/a_d)
//   sa2:   S^d_d(b + a_{-d}) S^u_d = A_d(b)^2 - 4 cos^2(pi b/a_d)
//   udrel: script S^u_d(2a - b) = script S^d_d(b)
//   cru:   S^u_d R_r(b;x,y) = 4 s_d(y + ib) s_d(y - ib) R_r(b + a_{-d};x,y)
//   crd:   S^d_d(b) R_r(b;x,y) = R_r(b - a_{-d};x,y)
enum class shift_relation { ush, dsh, sa1, sa2, udrel, cru, crd };

// tol <= 0 selects per-identity defaults: 1e-12 for ush/dsh/udrel, 1e-11
// for sa1/sa2, 1e-6 for the quadrature-backed cru/crd.
residual_report shift_relation_residual(shift_relation id,
                                        const scale_params& p, real b, cplx x,
                                        cplx y, int delta = +1, real tol = 0.0,
                                        const corefn_config& cfg = {},
                                        const cfun& probe = {});

// Eigenvalue residual of the conical function: the difference operator in x
// (or in y when in_y is set) applied to C(b;x,y), minus 2 c_d of the other
// variable times C(b;x,y).  Valid for b below a_s/2 so the translated
// arguments stay within the quadrature domain.
residual_report conical_eigen_residual(const scale_params& p, real b,
                                       int delta, bool in_y, cplx x, cplx y,
                                       real tol = 1e-6,
                                       const corefn_config& cfg = {});

}  // namespace hc
