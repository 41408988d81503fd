#include "lgcrit/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lgcrit/parallel.hpp"

namespace lgcrit {

namespace {

struct Vec {
  std::vector<cplx> z, w;
};

Vec to_vec(const CritPoint& p) { return {p.z, p.w}; }

bool finite(const Vec& v) {
  for (const cplx& x : v.z)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  for (const cplx& x : v.w)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  return true;
}

Vec axpy(const Vec& p, double h, const std::vector<cplx>& k, int s, int r) {
  Vec out = p;
  for (int i = 0; i < s; ++i) out.z[i] += h * k[i];
  for (int j = 0; j < r; ++j) out.w[j] += h * k[s + j];
  return out;
}

double sup_dist(const Vec& p, const Vec& q) {
  double d = 0.0;
  for (size_t i = 0; i < p.z.size(); ++i) d = std::max(d, std::abs(p.z[i] - q.z[i]));
  for (size_t j = 0; j < p.w.size(); ++j) d = std::max(d, std::abs(p.w[j] - q.w[j]));
  return d;
}

// Davidenko right-hand side: dp/dtau = -J(p)^-1 * (d grad/d tau)(p).
std::vector<cplx> flow(const BundleSpec& spec, const CoeffVector& c, const CoeffVector& dc,
                       const Vec& p) {
  const int n = spec.s + spec.r();
  std::vector<cplx> rhs = grad(spec, dc, p.z, p.w);
  for (cplx& v : rhs) v = -v;
  return lu_solve(jacobian(spec, c, p.z, p.w), std::move(rhs), n);
}

// Newton on the frozen-coefficient gradient; true on reaching the scaled
// residual target.
bool correct(const BundleSpec& spec, const CoeffVector& c, Vec& p, double tol, int iters,
             double* residual_out) {
  const int n = spec.s + spec.r();
  for (int it = 0; it <= iters; ++it) {
    const std::vector<cplx> g = grad(spec, c, p.z, p.w);
    double sup = 0.0;
    for (const cplx& gi : g) sup = std::max(sup, std::abs(gi));
    if (residual_out) *residual_out = sup;
    if (sup <= tol * grad_scale(spec, c, p.z, p.w)) return true;
    if (it == iters) return false;
    std::vector<cplx> rhs(n);
    for (int q = 0; q < n; ++q) rhs[q] = -g[q];
    const std::vector<cplx> delta = lu_solve(jacobian(spec, c, p.z, p.w), rhs, n);
    for (int q = 0; q < spec.s; ++q) p.z[q] += delta[q];
    for (int q = 0; q < spec.r(); ++q) p.w[q] += delta[spec.s + q];
    if (!finite(p)) return false;
  }
  return false;
}

}  // namespace

CoeffPath segment_path(const BundleSpec& spec, double u0, double u1) {
  CoeffPath path;
  path.value = [spec, u0, u1](double tau) {
    return CoeffVector::with_u(spec, u0 + (u1 - u0) * tau);
  };
  path.deriv = [spec, u0, u1](double tau) {
    CoeffVector dc;
    dc.cz.assign(spec.s, cplx(0.0));
    dc.cw.assign(spec.r(), cplx(0.0));
    dc.cv0 = (u1 - u0) * std::exp(u0 + (u1 - u0) * tau);
    dc.ce0 = cplx(0.0);
    return dc;
  };
  return path;
}

CoeffPath loop_path(const BundleSpec& spec, const CoeffVector& base, const ToricDivisor& D) {
  validate_divisor(spec, D);
  const cplx two_pi_i(0.0, 2.0 * M_PI);
  auto at = [spec, base, D](double theta) {
    CoeffVector c = base;
    auto phase = [&](long long wind) {
      const double ang = 2.0 * M_PI * wind * theta;
      return cplx(std::cos(ang), std::sin(ang));
    };
    for (int i = 0; i < spec.s; ++i) c.cz[i] *= phase(D.n[i + 1]);
    for (int j = 0; j < spec.r(); ++j) c.cw[j] *= phase(D.m[j + 1]);
    c.cv0 *= phase(D.n[0]);
    c.ce0 *= phase(D.m[0]);
    return c;
  };
  CoeffPath path;
  path.value = at;
  path.deriv = [spec, D, at, two_pi_i](double theta) {
    CoeffVector c = at(theta);
    for (int i = 0; i < spec.s; ++i) c.cz[i] *= two_pi_i * static_cast<double>(D.n[i + 1]);
    for (int j = 0; j < spec.r(); ++j) c.cw[j] *= two_pi_i * static_cast<double>(D.m[j + 1]);
    c.cv0 *= two_pi_i * static_cast<double>(D.n[0]);
    c.ce0 *= two_pi_i * static_cast<double>(D.m[0]);
    return c;
  };
  return path;
}

std::vector<CritPoint> track_panel(const BundleSpec& spec, const std::vector<CritPoint>& start,
                                   const CoeffPath& path, const TrackOptions& opts) {
  const int n = static_cast<int>(start.size());
  const int s = spec.s, r = spec.r();
  const int threads = resolve_threads(opts.threads);

  std::vector<Vec> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = to_vec(start[i]);

  double tau = 0.0, h = opts.h_init;
  int streak = 0;
  while (tau < 1.0 - 1e-15) {
    h = std::min({h, opts.h_max, 1.0 - tau});
    const CoeffVector c0 = path.value(tau), dc0 = path.deriv(tau);
    const CoeffVector ch = path.value(tau + 0.5 * h), dch = path.deriv(tau + 0.5 * h);
    const CoeffVector c1 = path.value(tau + h), dc1 = path.deriv(tau + h);

    std::vector<Vec> next(n);
    std::vector<char> ok(n, 0);
    parallel_for(n, threads, [&](int i) {
      try {
        const Vec& p = cur[i];
        const std::vector<cplx> k1 = flow(spec, c0, dc0, p);
        const std::vector<cplx> k2 = flow(spec, ch, dch, axpy(p, 0.5 * h, k1, s, r));
        const std::vector<cplx> k3 = flow(spec, ch, dch, axpy(p, 0.5 * h, k2, s, r));
        const std::vector<cplx> k4 = flow(spec, c1, dc1, axpy(p, h, k3, s, r));
        Vec pred = p;
        for (int q = 0; q < s; ++q)
          pred.z[q] += h / 6.0 * (k1[q] + 2.0 * k2[q] + 2.0 * k3[q] + k4[q]);
        for (int q = 0; q < r; ++q)
          pred.w[q] += h / 6.0 * (k1[s + q] + 2.0 * k2[s + q] + 2.0 * k3[s + q] + k4[s + q]);
        if (!finite(pred)) return;
        if (!correct(spec, c1, pred, opts.corrector_tol, opts.corrector_iters, nullptr)) return;
        next[i] = std::move(pred);
        ok[i] = 1;
      } catch (const Error&) {
        // singular step or vanishing coordinate: counts as a failed step
      }
    });

    bool all_ok = true;
    for (int i = 0; i < n; ++i) all_ok = all_ok && ok[i];
    if (!all_ok) {
      h *= 0.5;
      streak = 0;
      if (h < opts.h_min) {
        std::ostringstream msg;
        msg << "step underflow at tau = " << tau << "; failing points:";
        for (int i = 0; i < n; ++i)
          if (!ok[i]) msg << " " << i;
        fail(ErrorCode::PathCollision, msg.str());
      }
      continue;
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (sup_dist(next[i], next[j]) < opts.collision_dist) {
          std::ostringstream msg;
          msg << "points " << i << " and " << j << " merged at tau = " << tau + h;
          fail(ErrorCode::PathCollision, msg.str());
        }
    cur = std::move(next);
    tau += h;
    if (++streak >= opts.grow_after) {
      h *= opts.grow;
      streak = 0;
    }
  }

  // Exact correction at the endpoint coefficients.
  const CoeffVector cend = path.value(1.0);
  std::vector<CritPoint> out(n);
  std::vector<char> ok(n, 0);
  parallel_for(n, threads, [&](int i) {
    try {
      Vec p = cur[i];
      double res = 0.0;
      if (!correct(spec, cend, p, opts.corrector_tol, 30, &res)) return;
      out[i].z = std::move(p.z);
      out[i].w = std::move(p.w);
      out[i].residual = res;
      out[i].label = start[i].label;
      ok[i] = 1;
    } catch (const Error&) {
    }
  });
  for (int i = 0; i < n; ++i)
    if (!ok[i])
      fail(ErrorCode::NewtonDivergence,
           "endpoint correction failed for point " + std::to_string(i));
  return out;
}

CritSet track_segment(const CritSet& start, double u0, double u1, const TrackOptions& opts) {
  const BundleSpec& spec = start.spec;
  if (std::abs(start.coeffs.cv0 - cplx(std::exp(u0), 0.0)) > 1e-9 * std::exp(u0))
    fail(ErrorCode::InvalidArgument, "start set does not sit at the u0 coefficients");
  CritSet out = start;
  out.coeffs = CoeffVector::with_u(spec, u1);
  out.points = track_panel(spec, start.points, segment_path(spec, u0, u1), opts);
  return out;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.map.resize(n);
  for (int i = 0; i < n; ++i) p.map[i] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < map.size(); ++i)
    if (map[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.map.size() != map.size()) fail(ErrorCode::SizeMismatch, "permutation sizes differ");
  Permutation out;
  out.map.resize(map.size());
  for (size_t i = 0; i < map.size(); ++i) out.map[i] = next.map[map[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.map.assign(map.size(), -1);
  for (size_t i = 0; i < map.size(); ++i) out.map[map[i]] = static_cast<int>(i);
  return out;
}

Permutation track_loop(const CritSet& base, const ToricDivisor& D, const TrackOptions& opts) {
  const BundleSpec& spec = base.spec;
  validate_divisor(spec, D);
  if (!is_effective(D))
    fail(ErrorCode::InvalidArgument, "loop divisor must be effective");
  const int n = static_cast<int>(base.points.size());
  const std::vector<CritPoint> end =
      track_panel(spec, base.points, loop_path(spec, base.coeffs, D), opts);

  Permutation sigma;
  sigma.map.assign(n, -1);
  std::vector<int> hit(n, 0);
  for (int i = 0; i < n; ++i) {
    const Vec e = to_vec(end[i]);
    double d1 = 1e300, d2 = 1e300;
    int best = -1;
    for (int j = 0; j < n; ++j) {
      const double d = sup_dist(e, to_vec(base.points[j]));
      if (d < d1) {
        d2 = d1;
        d1 = d;
        best = j;
      } else if (d < d2) {
        d2 = d;
      }
    }
    if (n > 1 && d2 < opts.match_ratio * d1)
      fail(ErrorCode::AmbiguousMatch,
           "endpoint " + std::to_string(i) + " matches base points " +
               std::to_string(best) + " and a rival within the safety ratio");
    sigma.map[i] = best;
    hit[best] += 1;
  }
  for (int j = 0; j < n; ++j)
    if (hit[j] != 1)
      fail(ErrorCode::AmbiguousMatch, "endpoint matching is not a bijection");
  return sigma;
}

}  // namespace lgcrit
