#include "hc/corefn.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <vector>

#include "hc/errors.hpp"
#include "hc/quad.hpp"

namespace hc {
namespace {

// Distance from t to the nearest point of -(a + k a+ + l a-), k,l >= 0.
// Used to measure how close an integrand pole ladder comes to the real
// contour: a numerator factor G(z + c) has poles at Im z = Im c + a + ...,
// a denominator factor G(z + d) has zeros at Im z = -Im d + a + ... (both
// measured downward/upward from the contour).
real min_lattice_dist(const scale_params& p, real t) {
  const real a = p.a();
  if (t >= -a) return t + a;
  real best = std::numeric_limits<real>::infinity();
  for (int k = 0; a + k * p.ap <= -t + p.ap; ++k) {
    for (int l = 0;; ++l) {
      const real s = a + k * p.ap + l * p.am;
      best = std::min(best, std::abs(t + s));
      if (s > -t) break;
    }
  }
  return best;
}

// A contour integral over the real line of
//   prod_n G(z + num[n]) / prod_d G(z + den[d]) * exp(i alpha wave z).
struct line_spec {
  std::vector<cplx> num;
  std::vector<cplx> den;
  cplx wave{0.0, 0.0};
};

void check_b_interval(const scale_params& p, real b, const corefn_config& cfg) {
  const real eps = cfg.eps_b_frac * p.a();
  if (!(b >= eps && b <= 2.0 * p.a() - eps)) {
    std::ostringstream os;
    os << "coupling b = " << b << " lies outside the guarded interval ["
       << eps << ", " << 2.0 * p.a() - eps
       << "]; pass a smaller eps_b_frac to evaluate closer to the endpoints";
    throw domain_error(os.str());
  }
}

cplx integrate_spec(const scale_params& p, const line_spec& s,
                    const corefn_config& cfg, bool complex_args) {
  const real al = p.alpha();

  cplx shift_sum{0.0, 0.0};
  real smax = 0.0;
  for (const cplx& c : s.num) {
    shift_sum += c;
    smax = std::max(smax, std::abs(c.real()));
  }
  for (const cplx& c : s.den) {
    shift_sum -= c;
    smax = std::max(smax, std::abs(c.real()));
  }

  // Exact two-sided decay exponents of log|integrand| per unit |z|.  The
  // gamma-ratio contributes (alpha/2) Im(sum shifts) on both sides, the
  // plane wave -alpha Im(wave) on the right and +alpha Im(wave) on the left.
  const real base = 0.5 * al * shift_sum.imag();
  const real r_right = base - al * s.wave.imag();
  const real r_left = base + al * s.wave.imag();
  const real eps_b = cfg.eps_b_frac * p.a();
  if (!(std::max(r_right, r_left) < -0.25 * al * eps_b)) {
    throw domain_error(
        "tail divergence: the integrand does not decay on the real contour "
        "for these arguments");
  }

  // For complex x or y the pole ladders of the integrand move off their
  // default positions and may approach the contour; reject a near pinch.
  if (complex_args) {
    const real margin = cfg.pole_margin_frac * p.a_small();
    for (const cplx& c : s.num) {
      if (min_lattice_dist(p, c.imag()) <= margin)
        throw domain_error(
            "pole pinch: an integrand pole lies within the contour margin");
    }
    for (const cplx& c : s.den) {
      if (min_lattice_dist(p, -c.imag()) <= margin)
        throw domain_error(
            "pole pinch: a denominator zero lies within the contour margin");
    }
  }

  const real hint = 0.5 * std::min(-r_right, -r_left);

  quad_config q = cfg.quad;
  // Make sure the initial probe window covers every shifted gamma core.
  const real core = 50.0 / (al * p.a_small()) + 2.0;
  q.initial_half_width = std::max(q.initial_half_width, smax + core);

  auto f = [&](cplx z) -> cplx {
    cplx acc = iu * al * s.wave * z;
    for (const cplx& c : s.num) acc += log_hyp_gamma(p, z + c);
    for (const cplx& c : s.den) acc -= log_hyp_gamma(p, z + c);
    return std::exp(acc);
  };

  // The absolute tolerance is meant relative to the natural size of the
  // integral.  Probe the magnitude near the lobes and scale it down when the
  // whole integrand lives at a tiny scale (large |Re x| or |Re y|), so the
  // accept test stays a relative one.
  real mag = 0.0;
  for (real t : {0.0, 0.5 * smax, -0.5 * smax, smax, -smax, smax + 1.0,
                 -smax - 1.0})
    mag = std::max(mag, std::abs(f(cplx(t + 0.1357, 0.0))));
  const real mass = mag * (2.0 * smax + 2.0 / hint + 2.0);
  if (mass > 0.0 && mass < 1.0) q.abs_tol = cfg.quad.abs_tol * mass;

  return integrate_line(f, 0.0, hint, q).value;
}

// Representation picker.  Very small b forces the wave-free form: its tails
// keep a constant phase, while the plane-wave forms would oscillate over the
// whole O(1/(alpha b)) tail.  Otherwise attach the plane wave to the variable
// with the smaller |Re| (slowest oscillation), provided its imaginary part
// leaves the tail exponents negative, and choose the variant whose pole
// ladders sit farthest from the contour: the i b/2 shifts keep distance
// a - b/2 (comfortable for b <= a), the i(a - b/2) shifts keep distance b/2
// (comfortable for b > a).  When neither variable can carry the wave, fall
// back to the wave-free form, whose tails decay for every argument.
int pick_rep(const scale_params& p, real b, cplx x, cplx y,
             const corefn_config& cfg) {
  if (b <= 0.05 * p.a()) return 1;
  const real budget = (b <= p.a() ? b : 2.0 * p.a() - b) -
                      0.25 * cfg.eps_b_frac * p.a();
  const bool prefer_x = std::abs(x.real()) <= std::abs(y.real());
  bool wave_x = prefer_x;
  if (std::abs((wave_x ? x : y).imag()) >= budget) wave_x = !wave_x;
  if (std::abs((wave_x ? x : y).imag()) >= budget) return 1;
  if (b <= p.a()) return wave_x ? 3 : 5;
  return wave_x ? 4 : 2;
}

line_spec make_rcal_spec(real b, cplx x, cplx y, int rep) {
  const cplx ib2 = iu * (0.5 * b);
  line_spec s;
  switch (rep) {
    case 1:
      s.num = {0.5 * (x - y) - ib2, -0.5 * (x - y) - ib2};
      s.den = {0.5 * (x + y) + ib2, -0.5 * (x + y) + ib2};
      break;
    case 3:
      s.num = {0.5 * y - ib2, -0.5 * y - ib2};
      s.den = {0.5 * y + ib2, -0.5 * y + ib2};
      s.wave = x;
      break;
    case 5:
      s.num = {0.5 * x - ib2, -0.5 * x - ib2};
      s.den = {0.5 * x + ib2, -0.5 * x + ib2};
      s.wave = y;
      break;
    default:
      break;
  }
  return s;
}

line_spec make_rcal_spec_dual(const scale_params& p, real b, cplx x, cplx y,
                              int rep) {
  // Representations 2 and 4 use the shift i(a - b/2) in place of i b/2 and
  // swap which variable rides the plane wave.
  const cplx sh = iu * (p.a() - 0.5 * b);
  line_spec s;
  if (rep == 2) {
    s.num = {0.5 * x - sh, -0.5 * x - sh};
    s.den = {0.5 * x + sh, -0.5 * x + sh};
    s.wave = y;
  } else {
    s.num = {0.5 * y - sh, -0.5 * y - sh};
    s.den = {0.5 * y + sh, -0.5 * y + sh};
    s.wave = x;
  }
  return s;
}

// Log of the finite prefactor attached to each renormalized representation,
// including the overall 1/sqrt(a+ a-).
cplx rcal_r_log_prefactor(const scale_params& p, real b, cplx x, cplx y,
                          int rep) {
  const cplx iab = iu * (p.a() - b);  // i(a-b)
  cplx lp = -0.5 * std::log(p.ap * p.am);
  switch (rep) {
    case 1:
      lp += log_hyp_gamma(p, iab);
      break;
    case 2:
      lp += log_hyp_gamma(p, iab) + log_hyp_gamma(p, x + iab) +
            log_hyp_gamma(p, -x + iab);
      break;
    case 3:
      lp += -log_hyp_gamma(p, iab) + log_hyp_gamma(p, x + iab) +
            log_hyp_gamma(p, -x + iab);
      break;
    case 4:
      lp += log_hyp_gamma(p, iab) + log_hyp_gamma(p, y + iab) +
            log_hyp_gamma(p, -y + iab);
      break;
    case 5:
      lp += -log_hyp_gamma(p, iab) + log_hyp_gamma(p, y + iab) +
            log_hyp_gamma(p, -y + iab);
      break;
    default:
      break;
  }
  return lp;
}

bool has_complex_args(cplx x, cplx y) {
  return x.imag() != 0.0 || y.imag() != 0.0;
}

// Accumulates a product of meromorphic factors as exp(sum of logs) while
// tracking the net lattice order contributed by exact pole/zero hits.
struct mero_product {
  cplx log_acc{0.0, 0.0};
  int net_order = 0;  // positive: net zero, negative: net pole
  int hits = 0;

  void mul(const mero_value& m) { push(m, +1); }
  void div(const mero_value& m) { push(m, -1); }

  void push(const mero_value& m, int sgn) {
    if (m.kind == mero_kind::regular) {
      log_acc += static_cast<real>(sgn) * std::log(m.value);
      return;
    }
    ++hits;
    const int ord = (m.kind == mero_kind::zero) ? m.order : -m.order;
    net_order += sgn * ord;
  }

  cplx value() const {
    if (hits > 0 && net_order == 0) {
      const real nan = std::numeric_limits<real>::quiet_NaN();
      return {nan, nan};
    }
    if (net_order > 0) return {0.0, 0.0};
    if (net_order < 0) {
      const real inf = std::numeric_limits<real>::infinity();
      return {inf, inf};
    }
    return std::exp(log_acc);
  }
};

}  // namespace

mero_value kernel_K(const scale_params& p, cplx b, cplx x, cplx v) {
  mero_value out;
  out.kind = mero_kind::regular;
  out.value = cplx(1.0, 0.0);
  int zero_ord = 0;
  int pole_ord = 0;
  bool near = false;
  for (real s1 : {1.0, -1.0}) {
    for (real s2 : {1.0, -1.0}) {
      const mero_value g = hyp_gamma(p, 0.5 * (s1 * x + s2 * v - iu * b));
      near = near || g.near_singular;
      if (g.kind == mero_kind::regular) {
        out.value *= g.value;
      } else if (g.kind == mero_kind::zero) {
        zero_ord += g.order;
      } else {
        pole_ord += g.order;
      }
    }
  }
  if (zero_ord > 0 && pole_ord > 0)
    throw domain_error(
        "kernel product is indeterminate: the arguments hit both a pole and "
        "a zero of the gamma factors");
  if (zero_ord > 0) {
    out.kind = mero_kind::zero;
    out.order = zero_ord;
    out.value = cplx(0.0, 0.0);
  } else if (pole_ord > 0) {
    out.kind = mero_kind::pole;
    out.order = pole_ord;
    out.value = cplx(0.0, 0.0);
  }
  out.near_singular = near;
  return out;
}

cplx conical_C(const scale_params& p, real b, cplx x, cplx y,
               const corefn_config& cfg) {
  check_b_interval(p, b, cfg);
  const line_spec s = make_rcal_spec(b, x, y, 1);
  const cplx integral = integrate_spec(p, s, cfg, has_complex_args(x, y));
  return integral / std::sqrt(p.ap * p.am);
}

cplx rcal_r(const scale_params& p, real b, cplx x, cplx y, int rep,
            const corefn_config& cfg) {
  check_b_interval(p, b, cfg);
  if (rep == 0) rep = pick_rep(p, b, x, y, cfg);
  if (rep < 1 || rep > 5)
    throw domain_error("representation index must be 0 (automatic) or 1..5");
  const line_spec s = (rep == 2 || rep == 4)
                          ? make_rcal_spec_dual(p, b, x, y, rep)
                          : make_rcal_spec(b, x, y, rep);
  const cplx integral = integrate_spec(p, s, cfg, has_complex_args(x, y));
  return std::exp(rcal_r_log_prefactor(p, b, x, y, rep)) * integral;
}

cplx rcal(const scale_params& p, real b, cplx x, cplx y, int rep,
          const corefn_config& cfg) {
  const cplx rr = rcal_r(p, b, x, y, rep, cfg);
  // rcal = G(2ib - ia) G(ia - ib) rcal_r.  The first factor can sit exactly
  // on a lattice zero (then the function vanishes identically in y); it is
  // evaluated meromorphically so those points come out as exact zeros.
  const mero_value g2 = hyp_gamma(p, iu * (2.0 * b - p.a()));
  if (g2.kind == mero_kind::zero) return {0.0, 0.0};
  return g2.finite() * hyp_gamma_value(p, iu * (p.a() - b)) * rr;
}

cplx conical_B(const scale_params& p, real b, cplx x, cplx y, int rep,
               const corefn_config& cfg) {
  check_b_interval(p, b, cfg);
  line_spec s;
  cplx log_pref{0.0, 0.0};
  const cplx ib2 = iu * (0.5 * b);
  const cplx sh = iu * (p.a() - 0.5 * b);
  const cplx iab = iu * (p.a() - b);
  switch (rep) {
    case 1:
      // Folded form of the kernel Fourier transform: a pure gamma ratio with
      // the plane wave in y and no prefactor.
      s.num = {0.5 * x - ib2, -0.5 * x - ib2};
      s.den = {-0.5 * x + ib2, 0.5 * x + ib2};
      s.wave = y;
      break;
    case 2:
      s.num = {0.5 * (x - y) - sh, -0.5 * (x - y) - sh};
      s.den = {0.5 * (x + y) + sh, -0.5 * (x + y) + sh};
      log_pref = log_hyp_gamma(p, x + iab) + log_hyp_gamma(p, -x + iab);
      break;
    case 3:
      s.num = {0.5 * y - sh, -0.5 * y - sh};
      s.den = {0.5 * y + sh, -0.5 * y + sh};
      s.wave = x;
      log_pref = 2.0 * log_hyp_gamma(p, iab);
      break;
    default:
      throw domain_error("B-function representation index must be 1, 2 or 3");
  }
  const cplx integral = integrate_spec(p, s, cfg, has_complex_args(x, y));
  return std::exp(log_pref) * integral;
}

weight_values weight_package(const scale_params& p, cplx b, cplx z) {
  const cplx ia = iu * p.a();
  const cplx ib = iu * b;
  weight_values out;

  const mero_value g_pb = hyp_gamma(p, z + ia - ib);
  const mero_value g_p = hyp_gamma(p, z + ia);
  const mero_value g_mb = hyp_gamma(p, -z + ia - ib);
  const mero_value g_m = hyp_gamma(p, -z + ia);

  {
    mero_product c;
    c.mul(g_pb);
    c.div(g_p);
    out.c = c.value();
  }
  {
    mero_product u;
    u.mul(g_pb);
    u.mul(g_m);
    u.div(g_p);
    u.div(g_mb);
    out.u = -u.value();
  }
  {
    mero_product w;
    w.mul(g_p);
    w.mul(g_m);
    w.div(g_pb);
    w.div(g_mb);
    out.w = w.value();
  }
  {
    mero_product wr;
    wr.mul(hyp_gamma(p, z - ia + ib));
    wr.mul(hyp_gamma(p, -z - ia + ib));
    out.w_r = wr.value();
  }
  out.phi = std::exp(iu * p.alpha() * b * (b - 2.0 * p.a()) / 4.0);
  return out;
}

cplx efn_E(const scale_params& p, real b, cplx x, cplx y, int rep,
           const corefn_config& cfg) {
  const cplx rr = rcal_r(p, b, x, y, rep, cfg);
  const weight_values wx = weight_package(p, cplx(b, 0.0), x);
  const weight_values wy = weight_package(p, cplx(b, 0.0), y);
  return wx.phi * rr / (wx.c * wy.c);
}

cplx ffn_F(const scale_params& p, real b, real x, real y, int rep,
           const corefn_config& cfg) {
  if (!(b > 0.0 && x > 0.0 && y > 0.0))
    throw domain_error("the symmetrized function requires b, x, y > 0");
  const cplx rr = rcal_r(p, b, x, y, rep, cfg);
  const weight_values wx = weight_package(p, cplx(b, 0.0), x);
  const weight_values wy = weight_package(p, cplx(b, 0.0), y);
  const real wxv = wx.w.real();
  const real wyv = wy.w.real();
  if (!(wxv > 0.0) || !(wyv > 0.0))
    throw domain_error("weight function is not positive at these arguments");
  return std::sqrt(wxv) * std::sqrt(wyv) * rr;
}

cplx gegenbauer_P_value(const scale_params& p, real b, int n, cplx cval) {
  if (n < 0) throw domain_error("polynomial degree must be nonnegative");
  if (n == 0) return {1.0, 0.0};
  const cplx ib = iu * b;
  const real breakdown_tol = 1e-12;
  auto sp = [&](cplx w) { return p.s(+1, w); };

  // Cleared three-term recurrence
  //   P_{m+1} = (2 c P_m s+(y_m) - s+(y_m - ib) P_{m-1}) / s+(y_m + ib),
  // with y_m = i(b + m a-).  At m = 0 the down-coefficient s+(y_0 - ib)
  // vanishes identically, so P_{-1} never enters.
  cplx prev{0.0, 0.0};
  cplx cur{1.0, 0.0};  // P_0
  for (int m = 0; m < n; ++m) {
    const cplx ym = iu * (b + static_cast<real>(m) * p.am);
    const cplx sm = sp(ym);
    const cplx up = sp(ym + ib);
    if (std::abs(sm) < breakdown_tol || std::abs(up) < breakdown_tol)
      throw domain_error(
          "recurrence breakdown: a sinh coefficient vanishes at this "
          "coupling (resonant ratio of b and the periods)");
    const cplx down = (m == 0) ? cplx(0.0, 0.0) : sp(ym - ib);
    const cplx next = (2.0 * cval * cur * sm - down * prev) / up;
    prev = cur;
    cur = next;
  }
  return cur;
}

cplx gegenbauer_P(const scale_params& p, real b, int n, cplx x) {
  return gegenbauer_P_value(p, b, n, p.c(+1, x));
}

cplx elementary_RN(const scale_params& p, int N, cplx x, cplx y) {
  if (N < 0) throw domain_error("level index must be nonnegative");
  if (!((N + 1) * p.ap < p.ap + p.am))
    throw domain_error(
        "level index too large: (N+1) a+ must stay below a+ + a-");
  const real prod = p.ap * p.am;
  const real tiny = 1e-13;

  if (N == 0) {
    const cplx den = 2.0 * p.s(-1, x) * p.s(-1, y);
    if (std::abs(den) < tiny)
      throw domain_error("evaluation point lies on a zero of the sinh factors");
    return std::sin(pi_v * x * y / prod) / den;
  }

  // Denominator products P_N(z) = prod_{j=-N..N} 2 sinh(pi (z + i j a+)/a-).
  auto PN = [&](cplx z) -> cplx {
    cplx v{1.0, 0.0};
    for (int j = -N; j <= N; ++j)
      v *= 2.0 * p.s(-1, z + iu * (static_cast<real>(j) * p.ap));
    return v;
  };

  // Lagrange-style sinh sum with an explicit plane wave in front.
  auto KN = [&](cplx xx, cplx yy) -> cplx {
    cplx pref = std::exp(iu * pi_v * xx * yy / prod);
    for (int l = 1; l <= N; ++l)
      pref *= 2.0 * std::sin(pi_v * static_cast<real>(l) * p.ap / p.am);
    cplx sum{0.0, 0.0};
    for (int j = 0; j <= N; ++j) {
      cplx t = p.e(-1, (2.0 * j - N) * xx);
      for (int k = j + 1; k <= N; ++k)
        t *= p.s(-1, yy - iu * (static_cast<real>(k) * p.ap));
      for (int k = N - j + 1; k <= N; ++k)
        t *= p.s(-1, yy + iu * (static_cast<real>(k) * p.ap));
      real dn = 1.0;
      for (int k = 0; k <= N; ++k) {
        if (k == j) continue;
        dn *= std::sin(pi_v * static_cast<real>(j - k) * p.ap / p.am);
      }
      if (std::abs(dn) < tiny)
        throw domain_error(
            "degenerate period ratio: a sine denominator vanishes");
      sum += t / dn;
    }
    return pref * sum;
  };

  const cplx px = PN(x);
  const cplx py = PN(y);
  if (std::abs(px) < tiny || std::abs(py) < tiny)
    throw domain_error("evaluation point lies on a zero of the sinh factors");

  cplx ipow;
  switch ((N + 1) & 3) {
    case 0: ipow = {1.0, 0.0}; break;
    case 1: ipow = {0.0, -1.0}; break;
    case 2: ipow = {-1.0, 0.0}; break;
    default: ipow = {0.0, 1.0}; break;
  }
  return ipow * (KN(x, y) - KN(x, -y)) / (px * py);
}

}  // namespace hc
