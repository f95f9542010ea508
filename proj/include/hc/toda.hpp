#pragma once

// Relativistic Toda layer: the joint eigenfunction F^T(eta;x,y) obtained from
// the conical function by sending the coupling along the line b = a - i*gamma
// together with a diverging position shift, its entire transform H(x,y), the
// Toda and dual-Toda difference operators, the kernel identities behind their
// eigenvalue equations, limit probes, and the nonrelativistic Toda layer
// (Kontorovich-Lebedev / modified-Bessel functions of imaginary order).
//
// Throughout, x-type operators step by i*a_{-delta} in the position variable
// and y-type (dual) operators step by i*a_{-delta} in the spectral variable.
// F^T itself takes real x (complex x is accepted where the contour gates
// admit it) and positive real y; the transform H is entire in both.

#include <vector>

#include "hc/adops.hpp"
#include "hc/hypgamma.hpp"
#include "hc/quad.hpp"
#include "hc/types.hpp"

namespace hc {

struct toda_params {
  scale_params scale{1.0, 1.0};
  real eta = 0.0;    // coupling offset
  real Lambda = 0.0; // position/coupling shift used by the limit probes
  real gamma = 0.0;  // pre-limit coupling parameter, b = a - i*gamma
};

// Contour placement for one horizontal-line representation: the line
// Im z = eps, chosen inside the window left free by the pole ladders and the
// tail-decay inequalities, together with the guaranteed decay rate.
struct toda_contour {
  real eps = 0.0;  // height of the line
  real rate = 0.0; // lower bound on the modulus decay rate of both tails
};

// --- joint eigenfunction -----------------------------------------------------

// F^T(eta;x,y).  Four integral representations:
//   rep 1: G_R-pair on a horizontal line, plane wave e^{i alpha z y};
//   rep 2: G_L-pair mirror of rep 1;
//   rep 3: G-pair in y with quadratic phase e^{-i alpha(z(x-eta)+z^2/2)} on a
//          line just above the real poles at +-y/2 (requires Im x > -a);
//   rep 4: mirror of rep 3 with the opposite quadratic phase (Im x < a).
// rep 0 picks rep 1.  Square-root prefactors use the branch that is positive
// as x -> +infinity.
cplx toda_F(const toda_params& t, cplx x, real y, int rep = 0,
            const quad_config& cfg = {});

// The entire transform H(x,y) = sqrt(a+ a-) w_T^{-1/2} w^T(y)^{-1/2} F^T with
// the weights divided out; representations 1-4 parallel those of toda_F.
// Per-representation gates: rep 1 needs x outside -i[a,inf), rep 2 outside
// +i[a,inf), rep 3 Im x > -a, rep 4 Im x < a; rep 0 picks the first gate-valid
// representation in the order 1,2,3,4.
cplx toda_H(const scale_params& p, cplx x, cplx y, int rep = 0,
            const quad_config& cfg = {});

// --- weights and scattering-type functions ------------------------------------

// w^T(y) = 4 s_+(y) s_-(y), the dual weight.
cplx toda_w_dual(const scale_params& p, cplx y);
// c^T(eta;y) = exp(-i alpha eta y / 2) / G(y + ia).
cplx toda_c_dual(const scale_params& p, real eta, cplx y);
// u^T(eta;y) = c^T(eta;y)/c^T(eta;-y) = exp(-i alpha eta y) G(-y+ia)/G(y+ia).
cplx toda_u_dual(const scale_params& p, real eta, cplx y);
// w_T(eta;x) = 1/(E(x-eta) E(eta-x)), real positive on the real axis.
real toda_w(const scale_params& p, real eta, real x);
// c_T(eta;x) = E(x-eta) and u_T(eta;x) = c_T(x)/c_T(-x) = G(x-eta).
cplx toda_c(const scale_params& p, real eta, cplx x);
cplx toda_u(const scale_params& p, real eta, cplx x);

// --- difference operators ------------------------------------------------------

// HT:     [1+e_d(-2x-ia_{-d}+2 eta)]^{1/2} T + (i -> -i); branch positive as
//         x -> +infinity (throws on the cut, which opens below the classical
//         turning point at equal periods).
// HTd:    (e_d(eta)/2) s_d(y)^{-1/2} (T + T^{-1}) s_d(y)^{-1/2}.
// cAT:    G_R-conjugate of HT: T^{-1} + [1+e_d(-2x-ia_{-d}+2 eta)] T.
// ATd:    (i e_d(eta) / 2 s_d(y)) (T - T^{-1}).
// cATd:   c^T-conjugate of ATd: T^{-1} + (e_d(eta)/2s_d(y)) T (e_d(eta)/2s_d(y)).
// AT_new: w_T-conjugate of HT; entire coefficients built from the reciprocal
//         Euler gamma and the constant K_{-d} = (1/2a_d) ln(a_{-d}/a_d):
//         sqrt(2 pi) e_d(-w/2) exp(-i w K_{-d}) / Gamma(-i w/a_d + 1/2) on the
//         upward translate, w = (x-eta) + i a_{-d}/2, and the i -> -i image on
//         the downward one.
// In the returned spec, coeff_minus multiplies f(z + i a_{-d}) (the upward
// translate) and coeff_plus multiplies f(z - i a_{-d}).
enum class toda_op_kind { HT, HTd, cAT, ATd, cATd, AT_new };

ado_spec toda_operator(toda_op_kind kind, int delta, const toda_params& t);

// --- kernel functions and identities -------------------------------------------

// K_T(x,z)   = G_L(+-z - x/2 - ia/2)                 (position kernel)
// K^_T(y,z)  = G(z +- y/2 - ia) exp(i alpha (y^2/8 - z^2/2))   (dual kernel)
cplx toda_kernel(const scale_params& p, cplx x, cplx z);
cplx toda_kernel_dual(const scale_params& p, cplx y, cplx z);

// Kid1: K_T(x-ia_{-d},z) + [1+e_d(-2x-ia_{-d})] K_T(x+ia_{-d},z)
//         = K_T(x,z-ia_{-d}/2) + K_T(x,z+ia_{-d}/2)
// Kdid: (i/2s_d(y)) (K^_T(y+ia_{-d},z) - K^_T(y-ia_{-d},z)) = K^_T(y,z-ia_{-d}/2)
enum class toda_kernel_id { Kid1, Kdid };

// xy is the x-argument for Kid1 and the y-argument for Kdid.  tol <= 0 selects
// the default 1e-10.
residual_report toda_kernel_residual(toda_kernel_id id, const scale_params& p,
                                     int delta, cplx xy, cplx z,
                                     real tol = 0.0);

// Nonrelativistic Toda kernel identity
//   (i/k)(K^_nr(k+i,t) - K^_nr(k-i,t)) = K^_nr(k,t-i),
// K^_nr(k,t) = Gamma(-it/2+ik/2) Gamma(-it/2-ik/2).  tol <= 0 -> 1e-10.
residual_report nr_toda_kernel_residual(cplx k, cplx t, real tol = 0.0);

// --- eigenvalue equations -------------------------------------------------------

// xade: the G_R-conjugated Hamiltonian acting on the kernel transform
//       M(x,y) = int K_T(x,z) e^{i alpha z y} dz over a bent contour,
//       eigenvalue 2 c_d(y); valid for Im x well below -a (the derivation
//       rectangle) and y > 0.
// atm:  the dual operator (eta = 0) acting on
//       M^(x,y) = int K^_T(y,z) e^{-i alpha z x} dz over a contour raised
//       above the spectral poles, eigenvalue e_d(x); x real, |Re y|, |Im y|
//       below a.
enum class toda_eigen_id { xade, atm };

residual_report toda_eigen_residual(toda_eigen_id id, const scale_params& p,
                                    int delta, cplx x, cplx y, real tol = 0.0,
                                    const quad_config& cfg = {});

// Residual of the similarity relation between the G_R-conjugated Hamiltonian
// and the plain-coefficient operator: applies both
//   G_R(x-eta)^{-1/2} HT [G_R(.-eta)^{1/2} f]   and   cAT f
// at the point x to the probe (default exp(i alpha 0.37 z / 2)).
residual_report toda_similarity_residual(const toda_params& t, int delta,
                                         cplx x, const cfun& probe = {});

// --- limit probes ----------------------------------------------------------------

// Pre-limit eigenfunction F(a - i*gamma; x, y) on the Toda coupling line,
// via the four-gamma integral representation with the square roots continued
// from gamma = 0 (positive there).  Requires x, y > 0.
cplx toda_prelimit_F(const scale_params& p, real gamma, real x, real y,
                     const quad_config& cfg = {});

struct toda_limit_point {
  real Lambda = 0.0;
  real deviation = 0.0;           // |F(a-i eta-i Lambda; x+Lambda, y) - F^T|
  real ham_coeff_residual = 0.0;  // Hamiltonian coefficient vs its limit
  real dual_coeff_residual = 0.0; // renormalized dual coefficient vs limit
};

std::vector<toda_limit_point> toda_limit_probe(const toda_params& t,
                                               const std::vector<real>& lambdas,
                                               real x, real y,
                                               const quad_config& cfg = {});

// Residual of the Hamiltonian coefficient limit
//   c_d(x+ir a_{-d}/2+eta+2L) c_d(x+ir a_{-d}/2-eta) / (s_d(x+L) s_d(x+ir a_{-d}+L))
//   -> 1 + e_d(-2x - ir a_{-d} + 2 eta)
real toda_vlim_residual(const scale_params& p, int delta, real eta, real x,
                        real r, real Lambda);

// Residual of the renormalized dual coefficient limit
//   e_d(-2L) c_d(y+ia_{-d}/2+eta+L) c_d(y+ia_{-d}/2-eta-L) -> e_d(2 eta)/4
real toda_dual_coeff_residual(const scale_params& p, int delta, real eta,
                              real y, real Lambda);

// --- nonrelativistic Toda ---------------------------------------------------------

struct nr_toda_params {
  real lambda = 1.0; // coupling, > 0
  real r = 0.0;      // scaled position
  real k = 1.0;      // scaled momentum, > 0
};

// K_{ik}(w) = int_0^inf exp(-w cosh t) cos(k t) dt  (w > 0, k >= 0).
real bessel_K_ik(real k, real w, const quad_config& cfg = {});

// F^T_nr(lambda;r,k):
//   rep 1 = 2 (k sinh(pi k)/pi)^{1/2} K_{ik}(2 lambda e^{-r});
//   rep 2 = (1/4pi)(k sinh(pi k)/pi)^{1/2} int_{R+i0} Gamma(i(-t+k)/2)
//           Gamma(i(-t-k)/2) e^{i t (ln lambda - r)} dt.
real nr_toda_F(const nr_toda_params& n, int rep = 1,
               const quad_config& cfg = {});

// c^_nr(lambda;k) = (2pi)^{-1/2} exp(-i k ln lambda) Gamma(ik), the dual
// scattering amplitude; u^_nr = c^_nr(k)/c^_nr(-k); w^_nr = 2 k sinh(pi k).
cplx nr_toda_c_hat(real lambda, real k);
cplx nr_toda_u_hat(real lambda, real k);
real nr_toda_w_hat(real k);

// Residual between a Toda operator under the nonrelativistic substitutions
// (a+ = 2pi/mu, a- = hbar*beta, eta = (2/mu) ln(beta mu g), y = beta p / mu)
// and its displayed beta -> 0 limit:
//   HT/cAT, delta=+1: |[(Op f)(x) - 2 f(x)]/beta^2 - (H f)(x)| with
//     H = -hbar^2 d^2/dx^2 + mu^2 g^2 e^{-mu x} on the probe e^{0.3 i x};
//   HT/cAT, delta=-1: |(Op f)(x) - f(x+ia+) - f(x-ia+)|;
//   HTd/ATd/cATd, delta=+1 only: max coefficient deviation from
//     mu g (p(p+-i hbar mu))^{-1/2}, +-i mu g/p, and
//     {1, mu^2 g^2/(p(p+i hbar mu))} respectively (the minus-delta duals
//     have no limit and are rejected).
// xp is the position x for HT/cAT and the momentum p for the duals.
real nr_toda_op_limit_residual(toda_op_kind kind, int delta, real mu,
                               real hbar, real g, real beta, real xp);

// --- exploratory asymptotics probes -----------------------------------------------

// Ratio of the computed function to a conjectured two-wave form; emitted as
// data only, never judged.
struct toda_asymp_row {
  real variable = 0.0;
  cplx ratio{0.0, 0.0};
};

// F^T(eta;x,y) against
//   e^{-i chi/2 - i pi/8} G_R(x-eta)^{1/2} e^{ i alpha[y^2/4+(x-eta)y/2]}
// + e^{+i chi/2 + i pi/8} G_R(x-eta)^{-1/2} e^{-i alpha[y^2/4+(x-eta)y/2]}
// over increasing y.
std::vector<toda_asymp_row> toda_yas_probe(const toda_params& t, real x,
                                           const std::vector<real>& ys,
                                           const quad_config& cfg = {});

// F^T_nr(lambda;r,k) against
//   u^_nr(k)^{1/2} e^{irk + i phi} + u^_nr(-k)^{1/2} e^{-irk - i phi}
// with the undetermined phase phi set to 0, over increasing k.
std::vector<toda_asymp_row> toda_kas_probe(real lambda, real r,
                                           const std::vector<real>& ks,
                                           const quad_config& cfg = {});

} // namespace hc
