#include "hc/hypgamma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hc/errors.hpp"

namespace hc {
namespace {

quad_config inner_cfg() {
  quad_config cfg;
  // The strip integrals feed exponentials, so the *absolute* error of the
  // exponent is what shows up as relative error of the function value.  The
  // relative term only matters as a floor for very large exponents (strong
  // anisotropy), where double precision cannot hold an absolute target.
  cfg.abs_tol = 3e-13;
  cfg.rel_tol = 1e-14;
  return cfg;
}

bool finite_c(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// log(1 + exp(u)) without overflow for any complex u.
cplx log_one_plus_exp(cplx u) {
  if (u.real() > 36.0) return u + std::exp(-u);
  if (u.real() < -36.0) return std::exp(u);
  return std::log(1.0 + std::exp(u));
}

// log(2 cosh(u)) without overflow.
cplx log_two_cosh(cplx u) {
  if (u.real() < 0) u = -u;
  return u + log_one_plus_exp(-2.0 * u);
}

// |Re z| beyond which the plane-wave asymptotics of G is exact to double
// precision.  The relative correction decays like exp(-r |Re z|) with
// r ~ 0.9 alpha a_small, and stays uniform for |Im z| up to a few strip
// widths (verified against extended-precision evaluations).
real asymp_threshold(const scale_params& p, cplx z) {
  return 50.0 / (p.alpha() * p.a_small()) + 0.1 * std::abs(z.imag());
}

// --- lattice bookkeeping ----------------------------------------------------

// Multiplicity of c >= 0 as k a+ + l a- with k, l non-negative integers.
int lattice_multiplicity(const scale_params& p, real c, real tol) {
  int count = 0;
  for (long k = 0; k * p.ap <= c + tol; ++k) {
    const real r = c - k * p.ap;
    const real l = std::round(r / p.am);
    if (l >= -0.5 && std::abs(r - l * p.am) <= tol) ++count;
  }
  return count;
}

struct lattice_hit {
  int sign = 0;  // -1 pole lattice (Im z < 0), +1 zero lattice, 0 off-lattice
  int order = 0;
  bool near = false; // within the conditioning-warning distance
};

lattice_hit classify_lattice(const scale_params& p, cplx z) {
  const real tol = 1e-12 * (1.0 + std::abs(z));
  const real near_tol = 1e-8 * (1.0 + std::abs(z));
  lattice_hit hit;
  if (std::abs(z.real()) > near_tol) return hit;

  const int sign = z.imag() < 0 ? -1 : +1;
  const real c = sign * z.imag() - p.a();
  if (c < -near_tol) return hit;
  if (std::abs(z.real()) <= tol) {
    const int m = lattice_multiplicity(p, std::max(c, 0.0), tol);
    if (m > 0) {
      hit.sign = sign;
      hit.order = m;
      return hit;
    }
  }
  hit.near = lattice_multiplicity(p, std::max(c, 0.0), near_tol) > 0;
  return hit;
}

// --- the strip integral for g ----------------------------------------------

struct g_series {
  cplx c1, c3, c5, c7;
  real y_switch;
};

g_series make_g_series(const scale_params& p, cplx z) {
  const real ap = p.ap, am = p.am, prod = ap * am;
  const real A2 = ap * ap + am * am;
  const real A4 = ap * ap * ap * ap + am * am * am * am;
  const real A6 = A4 * A2 - ap * ap * am * am * A2; // a+^6 + a-^6
  const real sq = ap * ap * am * am;
  const real A8 = A4 * A4 - 2 * sq * sq; // a+^8 + a-^8
  const cplx z2 = z * z;
  const cplx z4 = z2 * z2;
  g_series s;
  s.c1 = -(z / prod) * (A2 / 6 + 2.0 * z2 / 3.0);
  s.c3 = (z / prod) *
         (7 * A4 / 360 + sq / 36 + A2 * z2 / 9.0 + 2.0 * z4 / 15.0);
  s.c5 = -(z / prod) *
         (31 * A6 / 15120 + 7 * sq * A2 / 2160 + 7 * A4 * z2 / 540.0 +
          sq * z2 / 54.0 + A2 * z4 / 45.0 + 4.0 * z2 * z4 / 315.0);
  s.c7 = (z / prod) *
         (127 * A8 / 604800 + 31 * sq * A4 / 90720 + 49 * sq * sq / 129600 +
          31 * A6 * z2 / 22680.0 + 7 * sq * A2 * z2 / 3240.0 +
          7 * A4 * z4 / 2700.0 + sq * z4 / 270.0 + 2.0 * A2 * z2 * z4 / 945.0 +
          2.0 * z4 * z4 / 2835.0);
  s.y_switch = std::max(1e-3 * std::min(1.0, p.a_small()),
                        0.05 / std::max(std::abs(z), p.a_large()));
  return s;
}

} // namespace

scale_params::scale_params(real a_plus, real a_minus) : ap(a_plus), am(a_minus) {
  if (!(ap > 0) || !(am > 0))
    throw domain_error("scale_params requires positive periods");
}

cplx mero_value::finite() const {
  if (kind == mero_kind::pole)
    throw domain_error("evaluation at a pole of the function lattice");
  return value;
}

cplx log_gamma_strip(const scale_params& p, cplx z) {
  if (!(std::abs(z.imag()) < p.a()))
    throw domain_error("log_gamma_strip: |Im z| must be below (a+ + a-)/2");
  if (z == cplx(0, 0)) return {0, 0};

  const real ap = p.ap, am = p.am, prod = ap * am;
  const g_series s = make_g_series(p, z);

  // sin(2yz) / (2 sinh(a+ y) sinh(a- y)) in a form that never overflows:
  // the sinh product is written as e^{2ay}(1-e^{-2a+y})(1-e^{-2a-y})/4, so
  // every exponential carries a negative real part for |Im z| < a.  While
  // the sine itself cannot overflow, it is evaluated directly: the exponential
  // difference e^{iw}-e^{-iw} loses ~|w|^-1 digits for small |w|, which the
  // 1/(a_small y) factor in 1/m would amplify badly for anisotropic periods.
  const real two_a = ap + am;
  auto osc_core = [&](real y) -> cplx {
    const cplx w = 2.0 * y * z;
    const real m = std::expm1(-2 * ap * y) * std::expm1(-2 * am * y);
    if (std::abs(w.imag()) <= 60.0)
      return 2.0 * std::exp(-two_a * y) * std::sin(w) / m;
    const cplx up = std::exp(iu * w - two_a * y);
    const cplx dn = std::exp(-iu * w - two_a * y);
    return (up - dn) / (iu * m);
  };
  auto integrand = [&](real y) -> cplx {
    if (y < s.y_switch) {
      const real y2 = y * y;
      return s.c1 + y2 * (s.c3 + y2 * (s.c5 + y2 * s.c7));
    }
    return (osc_core(y) - z / (prod * y)) / y;
  };

  // The counterterm z/(a+ a- y) has an algebraic tail, so beyond y0 the
  // oscillatory part is integrated numerically and the counterterm tail
  // -z/(a+ a- y0) is added in closed form.
  const real y0 = 1.0 / p.a_large();
  const real rate = 2.0 * (p.a() - std::abs(z.imag()));

  quad_config cfg = inner_cfg();
  // Subtracting the counterterm from the oscillatory core leaves rounding
  // noise of size eps*|z|/(a+ a- y^2) per point; its integral from y_switch
  // up is an absolute accuracy floor no amount of subdividing can beat.
  const real eps = std::numeric_limits<real>::epsilon();
  cfg.abs_tol = std::max(cfg.abs_tol,
                         4.0 * eps * std::abs(z) / (prod * s.y_switch));
  quad_result head = integrate_segment(
      [&](cplx y) { return integrand(y.real()); }, cplx(0, 0), cplx(y0, 0), cfg);

  quad_config tail_cfg = cfg;
  tail_cfg.initial_half_width = std::max(4.0 * y0, 40.0 / rate);
  quad_result tail = integrate_half_line(
      [&](real t) -> cplx {
        const real y = y0 + t;
        return osc_core(y) / y;
      },
      rate, tail_cfg);

  return head.value + tail.value - z / (prod * y0);
}

cplx hyp_gamma_asymp(const scale_params& p, cplx z, int side) {
  const cplx phase = p.chi() + p.alpha() * z * z / 4.0;
  return std::exp((side > 0 ? -iu : iu) * phase);
}

cplx log_hyp_gamma(const scale_params& p, cplx z) {
  const lattice_hit hit = classify_lattice(p, z);
  if (hit.sign != 0)
    throw domain_error("log_hyp_gamma: argument on the pole/zero lattice");

  if (std::abs(z.real()) >= asymp_threshold(p, z)) {
    const cplx phase = p.chi() + p.alpha() * z * z / 4.0;
    return (z.real() > 0 ? -iu : iu) * phase;
  }

  // Ladder Im z into the band |Im| <= a_small/2 where the strip integral
  // converges fastest; each step multiplies by 2 cosh(pi w / a_{-d}).
  const real band = 0.5 * p.a_small() * (1 + 1e-14);
  cplx acc{0, 0};
  long steps = 0;
  while (std::abs(z.imag()) > band) {
    if (++steps > 1000000)
      throw numerics_error("hyperbolic gamma ladder exceeded 1e6 steps");
    real step = p.a_large();
    int d = p.ap >= p.am ? +1 : -1; // period(d) == a_large
    if (std::abs(std::abs(z.imag()) - step) >= std::abs(z.imag())) {
      step = p.a_small();
      d = -d;
    }
    if (z.imag() > 0) {
      z -= iu * step;
      acc += log_two_cosh(pi_v * (z + iu * (step / 2)) / p.coperiod(d));
    } else {
      z += iu * step;
      acc -= log_two_cosh(pi_v * (z - iu * (step / 2)) / p.coperiod(d));
    }
  }

  cplx out;
  if (std::abs(z.real()) >= asymp_threshold(p, z)) {
    const cplx phase = p.chi() + p.alpha() * z * z / 4.0;
    out = acc + (z.real() > 0 ? -iu : iu) * phase;
  } else {
    out = acc + iu * log_gamma_strip(p, z);
  }
  if (!finite_c(out))
    throw numerics_error("log_hyp_gamma lost finiteness off the lattice");
  return out;
}

mero_value hyp_gamma(const scale_params& p, cplx z) {
  mero_value out;
  const lattice_hit hit = classify_lattice(p, z);
  if (hit.sign < 0) {
    out.kind = mero_kind::pole;
    out.order = hit.order;
    if (hit.order == 1 && std::abs(z + iu * p.a()) <= 1e-12 * (1 + std::abs(z))) {
      out.residue = iu * std::sqrt(p.ap * p.am) / (2 * pi_v);
      out.has_residue = true;
    }
    return out;
  }
  if (hit.sign > 0) {
    out.kind = mero_kind::zero;
    out.order = hit.order;
    out.value = {0, 0};
    return out;
  }
  out.near_singular = hit.near;
  out.value = std::exp(log_hyp_gamma(p, z));
  if (!finite_c(out.value))
    throw numerics_error("hyperbolic gamma overflowed outside the lattice");
  return out;
}

cplx hyp_gamma_value(const scale_params& p, cplx z) {
  return hyp_gamma(p, z).finite();
}

// --- E function --------------------------------------------------------------

cplx log_e_pair_strip(const scale_params& p, cplx z) {
  if (!(std::abs(z.imag()) < p.a()))
    throw domain_error("log_e_pair_strip: |Im z| must be below (a+ + a-)/2");
  if (z == cplx(0, 0)) return {0, 0};

  const real ap = p.ap, am = p.am, prod = ap * am;
  const real A2 = ap * ap + am * am;
  const real A3 = ap * ap * ap + am * am * am;
  const real A4 = ap * ap * ap * ap + am * am * am * am;
  const real A5 = A4 * (ap + am) - prod * A3; // a+^5 + a-^5
  const real sq = ap * ap * am * am;
  const cplx z2 = z * z;
  const cplx e0 = z2 * (ap + am) / prod;
  const cplx e1 = -(z2 / prod) * (7 * A2 / 6 + z2 / 3.0);
  const cplx e2 = (z2 / prod) * (2.0 / 3.0) * A3;
  const cplx e3 =
      (z2 / prod) * (-113 * A4 / 360.0 + sq / 36.0 + A2 * z2 / 18.0 +
                     2.0 * z2 * z2 / 45.0);
  const cplx e4 = (z2 / prod) * (2.0 / 15.0) * A5;
  // This series has both parities, so the first neglected term is O(y^5);
  // the switch point sits lower than for the odd-only integrand above.
  const real y_switch = std::max(1e-4 * std::min(1.0, p.a_small()),
                                 0.01 / std::max(std::abs(z), p.a_large()));

  // (1 - cos(2yz)) / (sinh(a+ y) sinh(a- y)) with the sinh product expanded
  // as e^{2ay}(1-e^{-2a+y})(1-e^{-2a-y})/4 so no exponential can overflow.
  // 1 - cos(2yz) is evaluated as 2 sin^2(yz): the exponential form cancels
  // near every real zero of 1 - cos and 1/m would amplify that noise.
  const real two_a = ap + am;
  auto integrand = [&](real y) -> cplx {
    if (y < y_switch)
      return e0 + y * (e1 + y * (e2 + y * (e3 + y * e4)));
    const cplx w = y * z;
    const real m = std::expm1(-2 * ap * y) * std::expm1(-2 * am * y);
    cplx core;
    if (std::abs(w.imag()) <= 60.0) {
      const cplx sn = std::sin(w);
      core = 8.0 * std::exp(-two_a * y) * sn * sn / m;
    } else {
      const cplx up = std::exp(2.0 * iu * w - two_a * y);
      const cplx dn = std::exp(-2.0 * iu * w - two_a * y);
      core = (4.0 * std::exp(-two_a * y) - 2.0 * (up + dn)) / m;
    }
    return (core -
            z2 / prod * (std::exp(-2 * ap * y) + std::exp(-2 * am * y))) /
           (2.0 * y);
  };

  const real rate =
      std::min(2.0 * p.a_small(), 2.0 * (p.a() - std::abs(z.imag())));
  quad_config cfg = inner_cfg();
  cfg.initial_half_width = std::max(4.0 / p.a_large(), 40.0 / rate);
  // Same counterterm-cancellation floor as in the gamma integral; here the
  // noise decays like 1/y, hence the logarithmic factor.
  const real eps = std::numeric_limits<real>::epsilon();
  const real noise_span = std::log(2.0 + 1.0 / (p.a_small() * y_switch));
  cfg.abs_tol = std::max(cfg.abs_tol, 4.0 * eps * std::norm(z) / prod *
                                          noise_span);
  quad_result r = integrate_half_line([&](real t) { return integrand(t); },
                                      rate, cfg);
  return r.value;
}

namespace {

// Ladder factor of E across one step of size a_d centred at w:
//   E(w + i a_d/2) = E(w - i a_d/2) * sqrt(2 pi) e^{i w K_d} / Gamma(i w / a_{-d} + 1/2)
cplx log_e_step(const scale_params& p, int d, cplx w) {
  const real k_d = std::log(p.period(d) / p.coperiod(d)) / (2 * p.coperiod(d));
  return 0.5 * std::log(2 * pi_v) + iu * w * k_d -
         log_euler_gamma(iu * w / p.coperiod(d) + 0.5);
}

} // namespace

mero_value e_func(const scale_params& p, cplx z) {
  mero_value out;
  const lattice_hit hit = classify_lattice(p, z);
  if (hit.sign > 0) { // zeros on the upper lattice only
    out.kind = mero_kind::zero;
    out.order = hit.order;
    return out;
  }
  out.near_singular = hit.near && z.imag() > 0;

  const real band = 0.5 * p.a_small() * (1 + 1e-14);
  cplx acc{0, 0};
  cplx w = z;
  long steps = 0;
  while (std::abs(w.imag()) > band) {
    if (++steps > 1000000)
      throw numerics_error("E-function ladder exceeded 1e6 steps");
    int d = p.ap >= p.am ? +1 : -1; // prefer the larger period (fewer steps)
    real h = p.period(d);
    if (std::abs(std::abs(w.imag()) - h) >= std::abs(w.imag())) {
      d = -d;
      h = p.period(d);
    }
    if (w.imag() > 0) {
      w -= iu * h;
      acc += log_e_step(p, d, w + iu * (h / 2));
    } else {
      w += iu * h;
      acc -= log_e_step(p, d, w - iu * (h / 2));
    }
  }

  const cplx log_e =
      0.5 * (iu * log_gamma_strip(p, w) + log_e_pair_strip(p, w)) + acc;
  out.value = std::exp(log_e);
  if (!finite_c(out.value))
    throw numerics_error("E-function overflowed away from its zero lattice");
  return out;
}

cplx e_func_value(const scale_params& p, cplx z) { return e_func(p, z).finite(); }

// --- G_R / G_L ---------------------------------------------------------------

cplx log_g_right(const scale_params& p, cplx z) {
  if (z.real() >= asymp_threshold(p, z)) return {0, 0};
  if (z.real() <= -asymp_threshold(p, z))
    return 2.0 * iu * (p.chi() + p.alpha() * z * z / 4.0);

  // ladder with step a_{-d} where a_d = a_small, i.e. the larger coperiod
  const int d = p.ap <= p.am ? +1 : -1;
  const real step = p.coperiod(d);
  const real band = 0.5 * p.a_small() * (1 + 1e-14);
  cplx acc{0, 0};
  long steps = 0;
  while (std::abs(z.imag()) > band) {
    if (++steps > 1000000)
      throw numerics_error("G_R ladder exceeded 1e6 steps");
    real h = step;
    if (std::abs(std::abs(z.imag()) - h) >= std::abs(z.imag()))
      h = p.a_small();
    // factor 1 + e_d(-2w) at the midpoint w (same identity for either step
    // size: the coperiod of the step appears in the exponential scale)
    const real scale = h == step ? p.period(d) : p.coperiod(d);
    if (z.imag() > 0) {
      z -= iu * h;
      acc += log_one_plus_exp(-2.0 * pi_v * (z + iu * (h / 2)) / scale);
    } else {
      z += iu * h;
      acc -= log_one_plus_exp(-2.0 * pi_v * (z - iu * (h / 2)) / scale);
    }
  }
  const cplx out =
      acc + iu * (log_gamma_strip(p, z) + p.chi() + p.alpha() * z * z / 4.0);
  if (!finite_c(out))
    throw numerics_error("log_g_right lost finiteness (pole/zero pinch)");
  return out;
}

cplx log_g_left(const scale_params& p, cplx z) { return -log_g_right(p, -z); }

cplx g_right(const scale_params& p, cplx z) { return std::exp(log_g_right(p, z)); }

cplx g_left(const scale_params& p, cplx z) { return std::exp(log_g_left(p, z)); }

// --- Euler gamma -------------------------------------------------------------

namespace {

// 13-term Lanczos rational approximation, shift 6.024680040776729583740234375.
constexpr real lanczos_g = 6.024680040776729583740234375;
constexpr real lanczos_num[13] = {
    23531376880.410759688572007674451636754734846804940,
    42919803642.649098768957899047001988850926355848959,
    35711959237.355668049440185451547166705960488635843,
    17921034426.037209699919755754458931112671403265390,
    6039542586.3520280050642916443072979210699388420708,
    1439720407.3117216736632230727949123939715485786772,
    248874557.86205415651146038641322942321632125127801,
    31426415.585400194380614231628318205362874684987640,
    2876370.6289353724412254090516208496135991145378768,
    186056.26539522349504029498971604569928220784236328,
    8071.6720023658162106380029022722506138218516325024,
    210.82427775157934587250973392071336271166969580291,
    2.5066282746310002701649081771338373386264310793408};
constexpr real lanczos_den[13] = {0,       39916800, 120543840, 150917976,
                                  105258076, 45995730, 13339535,  2637558,
                                  357423,    32670,    1925,      66,
                                  1};

cplx lanczos_sum(cplx z) {
  cplx num = lanczos_num[12], den = lanczos_den[12];
  for (int k = 11; k >= 0; --k) {
    num = num * z + lanczos_num[k];
    den = den * z + lanczos_den[k];
  }
  return num / den;
}

cplx log_gamma_lanczos(cplx z) {
  // valid for Re z >= 0.5
  const cplx t = z + (lanczos_g - 0.5);
  return std::log(lanczos_sum(z)) + (z - 0.5) * std::log(t) - t;
}

} // namespace

cplx log_euler_gamma(cplx z) {
  const real tol = 1e-12 * (1 + std::abs(z));
  const real n = std::round(z.real());
  if (n <= 0 && std::abs(z - cplx(n, 0)) <= tol)
    throw domain_error("log_euler_gamma: argument at a pole");
  if (z.real() >= 0.5) return log_gamma_lanczos(z);
  // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
  return std::log(pi_v) - std::log(std::sin(pi_v * z)) -
         log_gamma_lanczos(1.0 - z);
}

mero_value euler_gamma(cplx z) {
  mero_value out;
  const real tol = 1e-12 * (1 + std::abs(z));
  const real near_tol = 1e-8 * (1 + std::abs(z));
  const real nr = std::round(z.real());
  if (nr <= 0 && std::abs(z - cplx(nr, 0)) <= near_tol) {
    const long n = std::lround(-nr);
    if (std::abs(z - cplx(nr, 0)) <= tol) {
      out.kind = mero_kind::pole;
      out.order = 1;
      real fact = 1;
      for (long j = 2; j <= n; ++j) fact *= real(j);
      out.residue = cplx((n % 2 == 0 ? 1.0 : -1.0) / fact, 0);
      out.has_residue = true;
      return out;
    }
    out.near_singular = true;
  }
  out.value = std::exp(log_euler_gamma(z));
  return out;
}

cplx euler_gamma_value(cplx z) { return euler_gamma(z).finite(); }

// --- Fourier transform pair --------------------------------------------------

cplx fourier_F(const scale_params& p, cplx mu, cplx nu, cplx y,
               fourier_mode mode, const quad_config& cfg) {
  const cplx kappa = (nu - mu) / 2.0;
  if (!(kappa.imag() > 0) || !(kappa.imag() < p.a()))
    throw domain_error("fourier_F: Im (nu - mu)/2 must lie in (0, a)");

  if (mode == fourier_mode::closed) {
    return std::sqrt(p.ap * p.am) *
           std::exp(iu * p.alpha() * y * (mu + nu) / 2.0) *
           hyp_gamma_value(p, iu * p.a() - 2.0 * kappa) *
           hyp_gamma_value(p, y - iu * p.a() + kappa) *
           hyp_gamma_value(p, -y - iu * p.a() + kappa);
  }

  const real margin = 0.05 * p.a_small();
  if (nu.imag() > p.a() - margin || mu.imag() < -p.a() + margin)
    throw domain_error("fourier_F: integrand pole on or too close to the contour");
  const real rate = p.alpha() * (kappa.imag() - std::abs(y.imag()));
  if (!(rate > 0))
    throw domain_error("fourier_F: |Im y| must be below Im (nu - mu)/2");

  quad_config qc = cfg;
  qc.initial_half_width =
      std::max(3.0 * p.a_large(), 45.0 / rate) +
      std::max({std::abs(mu.real()), std::abs(nu.real()), std::abs(y.real())});
  auto f = [&](cplx x) {
    return std::exp(iu * p.alpha() * x * y + log_hyp_gamma(p, x - nu) -
                    log_hyp_gamma(p, x - mu));
  };
  return integrate_line(f, 0.0, 0.8 * rate, qc).value;
}

pair_transform_result gauss_pair_transform(const scale_params& p, real y,
                                           real s, const quad_config& cfg) {
  if (!(s > 0) || !(s < p.a() / 2))
    throw domain_error("gauss_pair_transform: s must lie in (0, a/2)");
  const cplx z(y, s);

  const real rate = p.alpha() * s;
  quad_config qc = cfg;
  qc.initial_half_width = std::max(3.0 * p.a_large(), 45.0 / rate) + std::abs(y);
  auto f = [&](cplx w) {
    return std::exp(iu * p.alpha() * w * z + log_g_right(p, w - iu * p.a()));
  };
  pair_transform_result out;
  out.lhs = std::sqrt(p.alpha() / (2 * pi_v)) *
            integrate_line(f, p.a() - 2 * s, 0.7 * rate, qc).value;
  out.rhs = std::exp(-iu * pi_v / 4.0 - 2.0 * iu * p.chi()) *
            std::exp(log_g_left(p, z - iu * p.a()));
  return out;
}

plateau_probe_result appendix_b_probe(const scale_params& p, int lambda,
                                      cplx z) {
  if (lambda < 1) throw domain_error("appendix_b_probe: lambda must be >= 1");
  const real shift = p.ap / (2 * pi_v) * std::log(1.0 / p.am);
  const cplx w = z + real(lambda) * shift;
  plateau_probe_result out;
  out.measured =
      log_gamma_strip(p, w) + p.chi() + p.alpha() * w * w / 4.0;
  out.predicted = std::pow(p.am, lambda) /
                  (2.0 * std::sin(pi_v * p.am / p.ap)) * p.e(+1, -2.0 * z);
  return out;
}

} // namespace hc
