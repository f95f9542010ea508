#include "hc/quad.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "hc/errors.hpp"

namespace hc {
namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
// Nodes are symmetric about 0; only the non-negative half is tabulated.
constexpr real xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr real wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr real wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

[[noreturn]] void fail_eval(real where) {
  std::ostringstream os;
  os << "quadrature integrand returned a non-finite value near t = " << where;
  throw numerics_error(os.str());
}

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// One G7/K15 application on the parameter interval [lo, hi].  `path` maps the
// real parameter to the integrand value (any constant Jacobian is folded in
// by the caller).  Returns the K15 value; err holds the QUADPACK-style
// conservative error estimate for the panel.
struct panel {
  real lo, hi;
  cplx value;
  real err;
};

panel eval_panel(const std::function<cplx(real)>& path, real lo, real hi,
                 long& n_evals) {
  const real mid = 0.5 * (lo + hi);
  const real hw = 0.5 * (hi - lo);

  cplx fv[15];
  for (int j = 0; j < 7; ++j) {
    fv[j] = path(mid - hw * xgk[j]);
    fv[14 - j] = path(mid + hw * xgk[j]);
  }
  fv[7] = path(mid);
  n_evals += 15;

  cplx k15{0, 0}, g7{0, 0};
  for (int j = 0; j < 7; ++j) k15 += wgk[j] * (fv[j] + fv[14 - j]);
  k15 += wgk[7] * fv[7];
  for (int j = 0; j < 3; ++j) g7 += wg[j] * (fv[2 * j + 1] + fv[13 - 2 * j]);
  g7 += wg[3] * fv[7];

  if (!finite(k15)) {
    for (int j = 0; j < 15; ++j)
      if (!finite(fv[j])) fail_eval(mid + hw * (j < 8 ? -xgk[j] : xgk[14 - j]));
    fail_eval(mid);
  }

  // resasc-style scaling: measure deviation of |f| from the panel mean so the
  // error estimate stays meaningful when the integrand nearly cancels.
  const cplx mean = k15 * 0.5; // K15 integrates over [-1,1] in the unit variable

  real resasc = 0;
  for (int j = 0; j < 7; ++j)
    resasc += wgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  resasc += wgk[7] * std::abs(fv[7] - mean);
  resasc *= hw;

  const real raw = std::abs(k15 - g7) * hw;
  real err = raw;
  if (resasc != 0 && raw != 0)
    err = resasc * std::min(1.0, std::pow(200.0 * raw / resasc, 1.5));

  return panel{lo, hi, k15 * hw, std::max(err, raw * 1e-2)};
}

struct heavier {
  bool operator()(const panel& a, const panel& b) const { return a.err < b.err; }
};

// Adaptive bisection driver over [lo, hi] in the real parameter.
quad_result adapt(const std::function<cplx(real)>& path, real lo, real hi,
                  const quad_config& cfg, long n_evals_so_far) {
  quad_result out;
  out.n_evals = n_evals_so_far;
  out.trunc_left = lo;
  out.trunc_right = hi;
  if (hi <= lo) return out;

  const real width = hi - lo;
  const int m0 = std::clamp(static_cast<int>(width / 2) + 1, 8, 96);

  std::priority_queue<panel, std::vector<panel>, heavier> work;
  cplx total{0, 0};
  real total_err = 0;
  for (int k = 0; k < m0; ++k) {
    panel p = eval_panel(path, lo + width * k / m0, lo + width * (k + 1) / m0,
                         out.n_evals);
    total += p.value;
    total_err += p.err;
    work.push(p);
  }

  const real min_width = width * 1e-13;
  int splits = 0;
  while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total))) {
    if (splits >= cfg.max_subdivisions) {
      std::ostringstream os;
      os << "adaptive quadrature did not converge: err_est = " << total_err
         << " after " << splits << " bisections";
      throw numerics_error(os.str());
    }
    panel worst = work.top();
    work.pop();
    if (worst.hi - worst.lo < min_width) {
      std::ostringstream os;
      os << "quadrature panel width underflow near t = " << worst.lo
         << " (integrand too singular)";
      throw numerics_error(os.str());
    }
    const real mid = 0.5 * (worst.lo + worst.hi);
    panel left = eval_panel(path, worst.lo, mid, out.n_evals);
    panel right = eval_panel(path, mid, worst.hi, out.n_evals);
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    work.push(left);
    work.push(right);
    ++splits;
  }

  out.value = total;
  out.err_est = total_err;
  return out;
}

// Magnitude probe that is robust against landing on a zero of an oscillatory
// integrand: looks at two nearby abscissae and takes the larger magnitude.
real probe(const std::function<cplx(real)>& path, real t, real scale,
           long& n_evals) {
  cplx a = path(t);
  cplx b = path(t + 0.381966011 * scale);
  n_evals += 2;
  if (!finite(a)) fail_eval(t);
  if (!finite(b)) fail_eval(t);
  return std::max(std::abs(a), std::abs(b));
}

} // namespace

quad_result integrate_line(const std::function<cplx(cplx)>& f, real im_offset,
                           real decay_rate_hint, const quad_config& cfg) {
  if (!(decay_rate_hint > 0))
    throw domain_error("integrate_line requires a positive decay_rate_hint");
  auto path = [&](real t) { return f(cplx(t, im_offset)); };

  long n_evals = 0;
  const real w0 = cfg.initial_half_width;

  // Peak magnitude over the initial window; sets truncation thresholds.
  real fmax = 0;
  for (int k = 0; k <= 24; ++k) {
    cplx v = path(-w0 + 2 * w0 * k / 24.0);
    ++n_evals;
    if (!finite(v)) fail_eval(-w0 + 2 * w0 * k / 24.0);
    fmax = std::max(fmax, std::abs(v));
  }
  if (fmax == 0) {
    quad_result z;
    z.n_evals = n_evals;
    z.trunc_left = -w0;
    z.trunc_right = w0;
    return z;
  }

  auto threshold = [&] {
    return std::max({cfg.tail_cut * fmax,
                     0.1 * cfg.abs_tol * decay_rate_hint,
                     0.01 * cfg.rel_tol * fmax * decay_rate_hint});
  };

  // Expand each side until the tail-mass bound |f(cut)|/rate is negligible,
  // then walk back inward over dead regions.
  real cut[2];
  for (int side = 0; side < 2; ++side) {
    const real sgn = side == 0 ? -1.0 : 1.0;
    real t = w0;
    const real step0 = std::max(w0 / 8, 1.0 / decay_rate_hint);
    int guard = 0;
    while (probe(path, sgn * t, sgn * step0 * 0.25, n_evals) > threshold()) {
      t = t * 1.30 + step0;
      if (++guard > 64) {
        std::ostringstream os;
        os << "integrand tail at " << (side ? "+" : "-")
           << "inf does not fall below the truncation threshold (last t = "
           << t << ")";
        throw numerics_error(os.str());
      }
      // A larger magnitude found outside the window raises the peak estimate.
      cplx v = path(sgn * t);
      ++n_evals;
      if (!finite(v)) fail_eval(sgn * t);
      fmax = std::max(fmax, std::abs(v));
    }
    real shrink = t / 8;
    while (t - shrink > step0 &&
           probe(path, sgn * (t - shrink), sgn * shrink * 0.3, n_evals) <=
               threshold()) {
      t -= shrink;
      shrink = std::max(t / 8, step0 * 0.5);
    }
    cut[side] = sgn * (t + 1.0 / decay_rate_hint);
  }

  quad_result r = adapt(path, cut[0], cut[1], cfg, n_evals);
  r.err_est += 2 * threshold() / decay_rate_hint; // truncated tail bound
  return r;
}

quad_result integrate_half_line(const std::function<cplx(real)>& f,
                                real decay_rate_hint, const quad_config& cfg) {
  if (!(decay_rate_hint > 0))
    throw domain_error("integrate_half_line requires a positive decay_rate_hint");
  auto path = [&](real t) { return f(t); };

  long n_evals = 0;
  const real w0 = cfg.initial_half_width;

  real fmax = 0;
  for (int k = 0; k <= 24; ++k) {
    real t = w0 * k / 24.0;
    cplx v = path(t);
    ++n_evals;
    if (!finite(v)) fail_eval(t);
    fmax = std::max(fmax, std::abs(v));
  }
  if (fmax == 0) {
    quad_result z;
    z.n_evals = n_evals;
    z.trunc_right = w0;
    return z;
  }

  auto threshold = [&] {
    return std::max({cfg.tail_cut * fmax,
                     0.1 * cfg.abs_tol * decay_rate_hint,
                     0.01 * cfg.rel_tol * fmax * decay_rate_hint});
  };

  real t = w0;
  const real step0 = std::max(w0 / 8, 1.0 / decay_rate_hint);
  int guard = 0;
  while (probe(path, t, step0 * 0.25, n_evals) > threshold()) {
    t = t * 1.30 + step0;
    if (++guard > 64)
      throw numerics_error(
          "half-line integrand tail does not fall below the truncation "
          "threshold");
    cplx v = path(t);
    ++n_evals;
    if (!finite(v)) fail_eval(t);
    fmax = std::max(fmax, std::abs(v));
  }
  real shrink = t / 8;
  while (t - shrink > step0 &&
         probe(path, t - shrink, shrink * 0.3, n_evals) <= threshold()) {
    t -= shrink;
    shrink = std::max(t / 8, step0 * 0.5);
  }
  t += 1.0 / decay_rate_hint;

  quad_result r = adapt(path, 0.0, t, cfg, n_evals);
  r.err_est += threshold() / decay_rate_hint;
  return r;
}

quad_result integrate_segment(const std::function<cplx(cplx)>& f, cplx a,
                              cplx b, const quad_config& cfg) {
  const cplx jac = b - a;
  auto path = [&](real s) { return f(a + s * jac) * jac; };
  return adapt(path, 0.0, 1.0, cfg, 0);
}

} // namespace hc
