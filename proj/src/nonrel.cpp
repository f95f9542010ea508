#include "hc/nonrel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "hc/errors.hpp"
#include "hc/hypgamma.hpp"

namespace hc {
namespace {

// Branch of log Gamma that stays finite for small real part at large |Im z|,
// where the reflection formula overflows: shift into Re z >= 1/2 by the
// recurrence log Gamma(z) = log Gamma(z+1) - log z.  Only differences of
// these logs are ever exponentiated, so 2 pi i branch offsets are harmless.
cplx lgamma_shift(cplx z) {
  cplx acc{0.0, 0.0};
  for (int i = 0; i < 64 && z.real() < 0.5; ++i) {
    if (std::abs(z) < 1e-12)
      throw domain_error("log gamma argument at a pole");
    acc -= std::log(z);
    z += 1.0;
  }
  return acc + log_euler_gamma(z);
}

// |Gamma(lambda + ik)|^2, underflow-safe for large k.
real gamma_abs2(real lambda, real k) {
  return std::exp(2.0 * lgamma_shift(cplx(lambda, k)).real());
}

// log cosh(u) without overflow.
real log_cosh(real u) {
  const real au = std::abs(u);
  return au + std::log1p(std::exp(-2.0 * au)) - std::log(2.0);
}

cplx series_2f1(cplx a, cplx b, cplx c, real w) {
  cplx term{1.0, 0.0};
  cplx sum{1.0, 0.0};
  int quiet = 0;
  for (int n = 0; n < 200000; ++n) {
    const real rn = static_cast<real>(n);
    term *= (a + rn) * (b + rn) / ((c + rn) * (rn + 1.0)) * w;
    sum += term;
    if (std::abs(term) <= 1e-17 + 1e-16 * std::abs(sum)) {
      if (++quiet >= 2) return sum;
    } else {
      quiet = 0;
    }
  }
  throw numerics_error("hypergeometric series did not converge");
}

bool near_nonpositive_integer(cplx z) {
  const real n = std::round(z.real());
  return n <= 0.0 && std::abs(z - cplx(n, 0.0)) < 1e-10;
}

}  // namespace

cplx hyp2f1(const hyp_args& args) {
  if (near_nonpositive_integer(args.c))
    throw domain_error("hypergeometric lower parameter at a nonpositive integer");
  if (args.z > 0.0)
    throw domain_error("hypergeometric argument must be nonpositive");
  auto mode = args.branch;
  if (mode == hyp_args::branch_mode::automatic)
    mode = (args.z < -4.0) ? hyp_args::branch_mode::inversion
                           : hyp_args::branch_mode::pfaff;
  if (mode == hyp_args::branch_mode::pfaff) {
    const real w = args.z / (args.z - 1.0);  // in [0, 1)
    return std::exp(-args.a * std::log1p(-args.z)) *
           series_2f1(args.a, args.c - args.b, args.c, w);
  }
  if (args.z == 0.0) return {1.0, 0.0};
  const cplx d = args.a - args.b;
  if (std::abs(d - cplx(std::round(d.real()), 0.0)) < 1e-8)
    throw numerics_error(
        "inversion branch degenerate: upper parameters differ by an integer");
  const real log_mz = std::log(-args.z);
  const cplx lgc = lgamma_shift(args.c);
  auto half = [&](cplx A, cplx B) {
    const cplx lw = lgc + lgamma_shift(B - A) - lgamma_shift(B) -
                    lgamma_shift(args.c - A);
    return std::exp(lw - A * log_mz) *
           series_2f1(A, A - args.c + 1.0, A - B + 1.0, 1.0 / args.z);
  };
  return half(args.a, args.b) + half(args.b, args.a);
}

cplx psi_nr_k(real lambda, real r, cplx k, psi_variant v) {
  if (lambda < 0.0)
    throw domain_error("psi_nr requires a nonnegative coupling");
  hyp_args h;
  h.c = cplx(lambda + 0.5, 0.0);
  if (v == psi_variant::one) {
    h.a = 0.5 * (lambda + iu * k);
    h.b = 0.5 * (lambda - iu * k);
    const real sh = std::sinh(r);
    h.z = -sh * sh;
  } else {
    h.a = lambda + iu * k;
    h.b = lambda - iu * k;
    const real sh = std::sinh(0.5 * r);
    h.z = -sh * sh;
  }
  return hyp2f1(h);
}

real psi_nr(const nr_params& n, psi_variant v) {
  return psi_nr_k(n.lambda, n.r, cplx(n.k, 0.0), v).real();
}

real conical_P(const nr_params& n) {
  if (n.lambda <= 0.0 || n.r <= 0.0)
    throw domain_error("conical function requires lambda, r > 0");
  const real pref = std::pow(std::sinh(n.r), n.lambda - 0.5) /
                    (std::pow(2.0, n.lambda - 0.5) * std::tgamma(n.lambda + 0.5));
  return pref * psi_nr(n, psi_variant::two);
}

real conical_P_integral(const nr_params& n, const quad_config& cfg) {
  if (n.lambda <= 0.0 || n.r <= 0.0)
    throw domain_error("conical function requires lambda, r > 0");
  const real lam = n.lambda, r = n.r, k = n.k;
  const real chr = std::cosh(r);
  auto f = [&](real t) {
    return cplx(std::cos(k * t) * std::pow(chr + std::cosh(t), -lam), 0.0);
  };
  const quad_result q = integrate_half_line(f, 0.9 * lam, cfg);
  const real pref = std::sqrt(2.0 / pi_v) * std::tgamma(lam) *
                    std::pow(std::sinh(r), lam - 0.5) / gamma_abs2(lam, k);
  return pref * q.value.real();
}

real psi_nr_rep(const nr_params& n, nr_rep rep, const quad_config& cfg) {
  if (n.lambda <= 0.0 || n.r <= 0.0 || n.k <= 0.0)
    throw domain_error("integral representations require lambda, r, k > 0");
  const real lam = n.lambda, r = n.r, k = n.k;
  switch (rep) {
    case nr_rep::rep_i: {
      const real chr = std::cosh(r);
      const real pref = std::tgamma(2.0 * lam) /
                        (std::pow(2.0, lam) * std::pow(std::tgamma(lam), 2));
      auto f = [&](cplx z) {
        const real t = z.real();
        const real d = log_cosh(0.5 * (t + r)) - log_cosh(0.5 * (t - r));
        return cplx(std::pow(chr + std::cosh(t), -lam) * std::cos(k * d), 0.0);
      };
      return pref * integrate_line(f, 0.0, 0.9 * lam, cfg).value.real();
    }
    case nr_rep::rep_v: {
      const real chr = std::cosh(r);
      const real pref =
          std::tgamma(2.0 * lam) / (std::pow(2.0, lam) * gamma_abs2(lam, k));
      auto f = [&](cplx z) {
        const real t = z.real();
        return std::exp(iu * (t * k)) * std::pow(chr + std::cosh(t), -lam);
      };
      return pref * integrate_line(f, 0.0, 0.9 * lam, cfg).value.real();
    }
    case nr_rep::rep_iv: {
      const real pref =
          std::tgamma(2.0 * lam) /
          (4.0 * pi_v * std::pow(std::tgamma(lam), 2) * gamma_abs2(lam, k));
      auto f = [&](cplx z) {
        const real t = z.real();
        const cplx s = lgamma_shift(0.5 * cplx(lam, t + k)) +
                       lgamma_shift(0.5 * cplx(lam, t - k)) +
                       lgamma_shift(0.5 * cplx(lam, -t + k)) +
                       lgamma_shift(0.5 * cplx(lam, -t - k)) +
                       iu * (t * r);
        return std::exp(s);
      };
      return pref * integrate_line(f, 0.0, 0.85 * pi_v, cfg).value.real();
    }
    case nr_rep::rep_iii: {
      if (lam <= 0.5)
        throw domain_error(
            "the vertical-line representation requires lambda > 1/2");
      // Vertical-line offset: keeps the shifted gamma arguments clear of
      // their poles uniformly in lambda.
      const real c = std::max(0.0, lam - 1.0) + 0.5;
      const real pref = std::tgamma(2.0 * lam) *
                        std::pow(std::sinh(r), 1.0 - 2.0 * lam) /
                        (std::pow(2.0, 2.0 * lam + 1.0) * pi_v) *
                        std::exp(c * r);
      auto g = [&](real t) {
        return std::exp(lgamma_shift(0.5 * cplx(c + 1.0 - lam, t + k)) +
                        lgamma_shift(0.5 * cplx(c + 1.0 - lam, t - k)) -
                        lgamma_shift(0.5 * cplx(c + 1.0 + lam, t + k)) -
                        lgamma_shift(0.5 * cplx(c + 1.0 + lam, t - k)));
      };
      // The integrand decays only algebraically, like t^{-2 lambda}, under
      // the oscillation e^{itr}.  Fold the line onto [0, T] (the integrand
      // at -t is the conjugate of the one at t), integrate in sub-period
      // segments, and close with a two-term integration-by-parts tail whose
      // remainder is ~ |g''(T)| / r^3.
      const real target = std::max(cfg.abs_tol, 1e-10) /
                          std::max(2.0 * std::abs(pref), 1e-6);
      real tcut = 80.0;
      while (tcut < 20000.0) {
        const real rem = std::abs(g(tcut)) * 2.0 * lam * (2.0 * lam + 1.0) /
                         (tcut * tcut * r * r * r);
        if (rem < 0.3 * target) break;
        tcut *= 1.4;
      }
      auto f = [&](cplx z) {
        const real t = z.real();
        return g(t) * std::exp(iu * (t * r));
      };
      const real seg = std::min(tcut, std::max(5.0, pi_v / r));
      quad_config scfg = cfg;
      scfg.abs_tol = std::max(0.5 * target * seg / tcut, 1e-14);
      scfg.rel_tol = std::min(cfg.rel_tol, 1e-12);
      cplx total{0.0, 0.0};
      real left = 0.0;
      while (left < tcut) {
        const real right = std::min(left + seg, tcut);
        total +=
            integrate_segment(f, cplx(left, 0.0), cplx(right, 0.0), scfg).value;
        left = right;
      }
      const real h = 0.5;
      const cplx g_end = g(tcut);
      const cplx dg_end = (g(tcut + h) - g(tcut - h)) / (2.0 * h);
      total += std::exp(iu * (tcut * r)) * (iu * g_end / r - dg_end / (r * r));
      return pref * 2.0 * total.real();
    }
  }
  throw domain_error("unknown integral representation");
}

real w_nr(real lambda, real r) {
  if (lambda < 0.0 || r <= 0.0)
    throw domain_error("weight requires lambda >= 0 and r > 0");
  return std::pow(2.0 * std::sinh(r), 2.0 * lambda);
}

cplx c_hat_nr(real lambda, real k) {
  if (lambda <= 0.0)
    throw domain_error("scattering function requires lambda > 0");
  if (k == 0.0)
    throw domain_error("scattering function has a pole at k = 0");
  return 2.0 * std::tgamma(2.0 * lambda) / std::tgamma(lambda) *
         std::exp(lgamma_shift(cplx(0.0, k)) - lgamma_shift(cplx(lambda, k)));
}

cplx u_hat_nr(real lambda, real k) {
  return -c_hat_nr(lambda, k) / c_hat_nr(lambda, -k);
}

nr_scattering_values nr_scattering(const nr_params& n) {
  if (n.lambda <= 0.0 || n.r <= 0.0 || n.k <= 0.0)
    throw domain_error("scattering data require lambda, r, k > 0");
  nr_scattering_values out;
  out.c_hat = c_hat_nr(n.lambda, n.k);
  out.u_hat = u_hat_nr(n.lambda, n.k);
  out.e_fn = 2.0 * std::sqrt(w_nr(n.lambda, n.r)) * psi_nr(n) / out.c_hat;
  return out;
}

std::vector<nr_limit_point> nr_limit_probe(const nr_limit_setup& s,
                                           const std::vector<real>& betas,
                                           const corefn_config& cfg) {
  if (s.mu <= 0.0 || s.hbar <= 0.0 || s.g <= 0.0 || s.x <= 0.0 || s.p <= 0.0)
    throw domain_error("limit probe requires positive mu, hbar, g, x, p");
  const real lambda = s.g / s.hbar;
  const real r = 0.5 * s.mu * s.x;
  const real k = s.p / (s.hbar * s.mu);
  const real psi = psi_nr({lambda, r, k});
  const cplx target_cx = std::sqrt(cplx(w_nr(lambda, r), 0.0));
  const cplx target_cy = 2.0 / c_hat_nr(lambda, k);
  std::vector<nr_limit_point> out;
  out.reserve(betas.size());
  for (const real beta : betas) {
    if (beta <= 0.0)
      throw domain_error("limit probe requires positive beta");
    const scale_params ps{2.0 * pi_v / s.mu, s.hbar * beta};
    const real b = s.g * beta;
    const cplx x{s.x, 0.0};
    const cplx y{beta * s.p / s.mu, 0.0};
    // The limit sends the coupling to zero together with the small scale, so
    // the generic small-coupling guard must not trip: the decay rate of the
    // defining integral is alpha * b = g * mu / hbar, independent of beta.
    corefn_config local = cfg;
    local.eps_b_frac = std::min(cfg.eps_b_frac, 0.4 * b / ps.a());
    nr_limit_point pt;
    pt.beta = beta;
    pt.deviation = std::abs(rcal(ps, b, x, y, 0, local) - psi);
    const weight_values wx = weight_package(ps, cplx(b, 0.0), x);
    pt.cx_residual = std::abs(wx.phi / wx.c - target_cx);
    const weight_values wy = weight_package(ps, cplx(b, 0.0), y);
    const cplx g1 = hyp_gamma_value(ps, iu * (ps.a() - 2.0 * b));
    const cplx g2 = hyp_gamma_value(ps, -iu * (ps.a() - b));
    pt.cy_residual = std::abs(g1 * g2 / wy.c - target_cy);
    out.push_back(pt);
  }
  return out;
}

}  // namespace hc
