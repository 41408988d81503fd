#include "lgcrit/crit_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "lgcrit/parallel.hpp"

namespace lgcrit {

namespace {

// Canonical ordering of reduced keys: lexicographic by (Re C, Im C, Re B,
// Im B), except that component values whose gap is below the tie threshold
// count as equal.  Conjugate roots recover bit-for-bit equal real parts from
// one polish path but not from another, and an exact comparator would let
// that last-bit jitter swap well-separated keys.  Clusters are cut at gaps
// in the sorted component values, so the result does not depend on the
// initial order of `idx`.
void canonical_sort(std::vector<int>& idx, const std::vector<ReducedPoint>& keys) {
  double scale = 1.0;
  for (const ReducedPoint& k : keys) scale = std::max({scale, std::abs(k.C), std::abs(k.B)});
  const double tie = 1e-9 * scale;
  auto comp_val = [](const ReducedPoint& k, int comp) {
    switch (comp) {
      case 0: return k.C.real();
      case 1: return k.C.imag();
      case 2: return k.B.real();
      default: return k.B.imag();
    }
  };
  std::vector<std::array<int, 3>> work;
  work.push_back({0, static_cast<int>(idx.size()), 0});
  while (!work.empty()) {
    const auto [lo, hi, comp] = work.back();
    work.pop_back();
    std::stable_sort(idx.begin() + lo, idx.begin() + hi, [&](int i, int j) {
      return comp_val(keys[i], comp) < comp_val(keys[j], comp);
    });
    if (comp == 3) continue;
    int start = lo;
    for (int k = lo + 1; k <= hi; ++k) {
      if (k == hi || comp_val(keys[idx[k]], comp) - comp_val(keys[idx[k - 1]], comp) > tie) {
        if (k - start > 1) work.push_back({start, k, comp + 1});
        start = k;
      }
    }
  }
}

double reduced_dist(const ReducedPoint& p, const ReducedPoint& q) {
  return std::max(std::abs(p.C - q.C), std::abs(p.B - q.B));
}

// Sylvester determinant in B of two ascending-coefficient polynomials with
// fixed structural degrees dp and dq.
cplx sylvester_det(const std::vector<cplx>& p, int dp, const std::vector<cplx>& q, int dq) {
  const int n = dp + dq;
  std::vector<cplx> m(static_cast<size_t>(n) * n, cplx(0.0));
  for (int row = 0; row < dq; ++row)
    for (int k = 0; k <= dp; ++k)
      m[static_cast<size_t>(row) * n + row + k] = p[dp - k];
  for (int row = 0; row < dp; ++row)
    for (int k = 0; k <= dq; ++k)
      m[static_cast<size_t>(dq + row) * n + row + k] = q[dq - k];
  return lu_det(std::move(m), n);
}

// Newton on the pair (P1, P2); returns false if the iteration fails to reach
// cluster-level relative residuals.
bool polish_pair(const ReducedSystem& sys, const BiPoly& p1C, const BiPoly& p1B,
                 const BiPoly& p2C, const BiPoly& p2B, ReducedPoint& pt) {
  for (int it = 0; it < 50; ++it) {
    const cplx f1 = sys.P1.eval(pt.C, pt.B);
    const cplx f2 = sys.P2.eval(pt.C, pt.B);
    const double s1 = sys.P1.eval_abs(std::abs(pt.C), std::abs(pt.B)) + 1.0;
    const double s2 = sys.P2.eval_abs(std::abs(pt.C), std::abs(pt.B)) + 1.0;
    if (std::abs(f1) <= 1e-13 * s1 && std::abs(f2) <= 1e-13 * s2) return true;
    const cplx a = p1C.eval(pt.C, pt.B), b = p1B.eval(pt.C, pt.B);
    const cplx c = p2C.eval(pt.C, pt.B), d = p2B.eval(pt.C, pt.B);
    const cplx det = a * d - b * c;
    if (std::abs(det) < 1e-280) return false;
    pt.C -= (f1 * d - b * f2) / det;
    pt.B -= (a * f2 - f1 * c) / det;
    if (!std::isfinite(pt.C.real()) || !std::isfinite(pt.C.imag()) ||
        !std::isfinite(pt.B.real()) || !std::isfinite(pt.B.imag()))
      return false;
  }
  return false;
}

bool passes_guards(const BundleSpec& spec, const ReducedPoint& pt) {
  const double sc = std::max({1.0, std::abs(pt.C), std::abs(pt.B)});
  if (std::abs(pt.C) <= 1e-10 * sc) return false;
  for (int aj : spec.a)
    if (std::abs(pt.B - static_cast<double>(aj) * pt.C) <= 1e-10 * sc) return false;
  return true;
}

std::vector<ReducedPoint> dedupe_sorted(std::vector<ReducedPoint> pts, double separation) {
  std::vector<int> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  canonical_sort(idx, pts);
  std::vector<ReducedPoint> kept;
  for (int i : idx) {
    const ReducedPoint& p = pts[i];
    bool fresh = true;
    for (const ReducedPoint& q : kept)
      if (reduced_dist(p, q) < separation) {
        fresh = false;
        break;
      }
    if (fresh) kept.push_back(p);
  }
  return kept;
}

}  // namespace

std::vector<ReducedPoint> solve_reduced(const BundleSpec& spec, const CoeffVector& c,
                                        const SolveOptions& opts) {
  validate_spec(spec);
  const ReducedSystem sys = reduced_system(spec, c);
  const BiPoly p1C = sys.P1.deriv_C(), p1B = sys.P1.deriv_B();
  const BiPoly p2C = sys.P2.deriv_C(), p2B = sys.P2.deriv_B();
  const int N = spec.n_points();
  const int A = spec.twist_total();
  const int r = spec.r();
  const int threads = resolve_threads(opts.threads);

  std::vector<cplx> c_roots;
  if (A == 0) {
    // P1 carries no B: a pure power equation in C.
    std::vector<cplx> p1c(sys.P1.nc);
    for (int i = 0; i < sys.P1.nc; ++i) p1c[i] = sys.P1.at(i, 0);
    c_roots = poly_roots(poly_trim(p1c, 1e-14));
  } else {
    // Sample the B-resultant of (P1, P2) on a circle and reconstruct it.
    const int M = N + 1;
    const double rho = opts.sample_radius;
    std::vector<cplx> samples(M);
    parallel_for(M, threads, [&](int k) {
      const double ang = 2.0 * M_PI * k / M;
      const cplx tk = rho * cplx(std::cos(ang), std::sin(ang));
      samples[k] = sylvester_det(sys.P1.coeffs_in_B(tk), A, sys.P2.coeffs_in_B(tk), r + 1);
    });
    std::vector<cplx> res(M, cplx(0.0));
    for (int m = 0; m < M; ++m) {
      cplx acc(0.0);
      for (int k = 0; k < M; ++k) {
        const double ang = -2.0 * M_PI * k * m / M;
        acc += samples[k] * cplx(std::cos(ang), std::sin(ang));
      }
      res[m] = acc / (static_cast<double>(M) * std::pow(rho, m));
    }
    c_roots = poly_roots(poly_trim(res, 1e-10));
  }

  // Pair every C-root with the B-roots of the monic fiber polynomial.
  const int nc = static_cast<int>(c_roots.size());
  std::vector<std::vector<ReducedPoint>> slots(nc);
  parallel_for(nc, threads, [&](int i) {
    const cplx C = c_roots[i];
    for (const cplx& B : poly_roots(sys.P2.coeffs_in_B(C))) {
      if (A != 0) {
        const double sc = sys.P1.eval_abs(std::abs(C), std::abs(B)) + 1.0;
        if (std::abs(sys.P1.eval(C, B)) >= 1e-3 * sc) continue;
      }
      slots[i].push_back({C, B});
    }
  });

  auto polish_set = [&](const std::vector<ReducedPoint>& cand) {
    const int n = static_cast<int>(cand.size());
    std::vector<ReducedPoint> out(n);
    std::vector<char> ok(n, 0);
    parallel_for(n, threads, [&](int i) {
      ReducedPoint pt = cand[i];
      if (polish_pair(sys, p1C, p1B, p2C, p2B, pt) && passes_guards(spec, pt)) {
        out[i] = pt;
        ok[i] = 1;
      }
    });
    std::vector<ReducedPoint> good;
    for (int i = 0; i < n; ++i)
      if (ok[i]) good.push_back(out[i]);
    return dedupe_sorted(std::move(good), opts.separation);
  };

  std::vector<ReducedPoint> candidates;
  for (const auto& s : slots) candidates.insert(candidates.end(), s.begin(), s.end());
  std::vector<ReducedPoint> kept = polish_set(candidates);

  if (static_cast<int>(kept.size()) != N && A != 0) {
    // Filter may have dropped a true root with a marginal residual: polish
    // every (C-root, B-root) pairing instead.
    std::vector<ReducedPoint> all;
    for (int i = 0; i < nc; ++i)
      for (const cplx& B : poly_roots(sys.P2.coeffs_in_B(c_roots[i])))
        all.push_back({c_roots[i], B});
    kept = polish_set(all);
  }

  if (static_cast<int>(kept.size()) != N)
    fail(ErrorCode::NonGenericParameter,
         "found " + std::to_string(kept.size()) + " isolated roots, expected " +
             std::to_string(N));
  return kept;
}

CritSet solve_crit(const BundleSpec& spec, const CoeffVector& c, const SolveOptions& opts) {
  const std::vector<ReducedPoint> red = solve_reduced(spec, c, opts);
  const int N = spec.n_points();
  const int n = spec.s + spec.r();
  const int threads = resolve_threads(opts.threads);

  std::vector<CritPoint> pts(N);
  std::vector<char> diverged(N, 0);
  parallel_for(N, threads, [&](int i) {
    CritPoint p;
    try {
      lift(spec, c, red[i].C, red[i].B, p.z, p.w);
      bool ok = false;
      for (int it = 0; it < 40; ++it) {
        const std::vector<cplx> g = grad(spec, c, p.z, p.w);
        double sup = 0.0;
        for (const cplx& gi : g) sup = std::max(sup, std::abs(gi));
        p.residual = sup;
        if (sup <= 1e-13 * grad_scale(spec, c, p.z, p.w)) {
          ok = true;
          break;
        }
        std::vector<cplx> rhs(n);
        for (int q = 0; q < n; ++q) rhs[q] = -g[q];
        const std::vector<cplx> delta = lu_solve(jacobian(spec, c, p.z, p.w), rhs, n);
        for (int q = 0; q < spec.s; ++q) p.z[q] += delta[q];
        for (int q = 0; q < spec.r(); ++q) p.w[q] += delta[spec.s + q];
      }
      if (!ok) diverged[i] = 1;
    } catch (const Error&) {
      diverged[i] = 1;
    }
    pts[i] = std::move(p);
  });
  for (int i = 0; i < N; ++i)
    if (diverged[i])
      fail(ErrorCode::NewtonDivergence,
           "full-system correction failed for root " + std::to_string(i));

  // Re-derive the canonical keys from the converged points and order by them.
  std::vector<int> order(N);
  std::vector<ReducedPoint> keys(N);
  for (int i = 0; i < N; ++i) {
    order[i] = i;
    keys[i] = reduce_point(spec, c, pts[i].z, pts[i].w);
  }
  canonical_sort(order, keys);

  CritSet set;
  set.spec = spec;
  set.coeffs = c;
  set.tol = opts.tol;
  set.separation = opts.separation;
  set.points.reserve(N);
  for (int i : order) set.points.push_back(std::move(pts[i]));

  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      double d = 0.0;
      for (int q = 0; q < spec.s; ++q)
        d = std::max(d, std::abs(set.points[i].z[q] - set.points[j].z[q]));
      for (int q = 0; q < spec.r(); ++q)
        d = std::max(d, std::abs(set.points[i].w[q] - set.points[j].w[q]));
      if (d < opts.separation)
        fail(ErrorCode::NonGenericParameter,
             "critical points " + std::to_string(i) + " and " + std::to_string(j) +
                 " coincide to within the separation threshold");
    }
  return set;
}

CoeffVector random_coeffs(const BundleSpec& spec, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  auto draw = [&]() {
    const double rr = radius(rng), th = angle(rng);
    return cplx(rr * std::cos(th), rr * std::sin(th));
  };
  CoeffVector c = CoeffVector::unit(spec);
  for (cplx& v : c.cz) v = draw();
  for (cplx& v : c.cw) v = draw();
  c.cv0 = draw();
  c.ce0 = draw();
  return c;
}

}  // namespace lgcrit
