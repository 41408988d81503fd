#include "lgcrit/poly.hpp"

#include <algorithm>
#include <cmath>

namespace lgcrit {

cplx poly_eval(const std::vector<cplx>& c, cplx x) {
  cplx acc(0.0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

std::vector<cplx> poly_deriv(const std::vector<cplx>& c) {
  if (c.size() <= 1) return {cplx(0.0)};
  std::vector<cplx> d(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) d[i - 1] = static_cast<double>(i) * c[i];
  return d;
}

std::vector<cplx> poly_trim(const std::vector<cplx>& c, double rel_tol) {
  double mx = 0.0;
  for (const cplx& v : c) mx = std::max(mx, std::abs(v));
  std::vector<cplx> out = c;
  while (out.size() > 1 && std::abs(out.back()) < rel_tol * mx) out.pop_back();
  return out;
}

std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs, int max_iter) {
  std::vector<cplx> c = coeffs;
  while (c.size() > 1 && c.back() == cplx(0.0)) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n <= 0) return {};
  if (n == 1) return {-c[0] / c[1]};

  const std::vector<cplx> dc = poly_deriv(c);
  // Deterministic starting circle sized by the leading/constant ratio.
  double rad = std::pow(std::max(std::abs(c[0] / c[n]), 1e-12), 1.0 / n);
  rad = std::clamp(rad, 1e-3, 1e6);
  std::vector<cplx> z(n);
  for (int k = 0; k < n; ++k) {
    double ang = 2.0 * M_PI * k / n + 0.4;
    z[k] = rad * cplx(std::cos(ang), std::sin(ang));
  }

  // Backward-error stop: |p(z)| below machine-level noise of the Horner sum.
  auto converged = [&](cplx zi, cplx pv) {
    double bound = 0.0, ax = std::abs(zi), pw = 1.0;
    for (int i = 0; i <= n; ++i) {
      bound += std::abs(c[i]) * pw;
      pw *= ax;
    }
    return std::abs(pv) <= 1e-14 * (bound + 1e-300);
  };

  std::vector<bool> done(n, false);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool all = true;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      cplx p = poly_eval(c, z[i]);
      if (converged(z[i], p)) {
        done[i] = true;
        continue;
      }
      all = false;
      cplx dp = poly_eval(dc, z[i]);
      if (dp == cplx(0.0)) {
        z[i] += cplx(1e-8, 1e-8);
        continue;
      }
      cplx ratio = p / dp;
      cplx rep(0.0);
      for (int k = 0; k < n; ++k) {
        if (k == i) continue;
        cplx diff = z[i] - z[k];
        if (std::abs(diff) < 1e-300) diff = cplx(1e-300, 0.0);
        rep += 1.0 / diff;
      }
      cplx denom = cplx(1.0) - ratio * rep;
      if (std::abs(denom) < 1e-300) denom = cplx(1e-300, 0.0);
      z[i] -= ratio / denom;
    }
    if (all) break;
  }

  // Final Newton touch-up for simple roots.
  for (int i = 0; i < n; ++i) {
    for (int it = 0; it < 3; ++it) {
      cplx p = poly_eval(c, z[i]);
      cplx dp = poly_eval(dc, z[i]);
      if (std::abs(dp) < 1e-300) break;
      cplx step = p / dp;
      z[i] -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(z[i]))) break;
    }
  }
  return z;
}

cplx BiPoly::eval(cplx C, cplx B) const {
  cplx acc(0.0);
  for (int i = nc - 1; i >= 0; --i) {
    cplx row(0.0);
    for (int j = nb - 1; j >= 0; --j) row = row * B + at(i, j);
    acc = acc * C + row;
  }
  return acc;
}

double BiPoly::eval_abs(double C, double B) const {
  double acc = 0.0;
  for (int i = nc - 1; i >= 0; --i) {
    double row = 0.0;
    for (int j = nb - 1; j >= 0; --j) row = row * B + std::abs(at(i, j));
    acc = acc * C + row;
  }
  return acc;
}

BiPoly BiPoly::deriv_C() const {
  if (nc <= 1) return BiPoly(1, nb);
  BiPoly d(nc - 1, nb);
  for (int i = 1; i < nc; ++i)
    for (int j = 0; j < nb; ++j) d.at(i - 1, j) = static_cast<double>(i) * at(i, j);
  return d;
}

BiPoly BiPoly::deriv_B() const {
  if (nb <= 1) return BiPoly(nc, 1);
  BiPoly d(nc, nb - 1);
  for (int i = 0; i < nc; ++i)
    for (int j = 1; j < nb; ++j) d.at(i, j - 1) = static_cast<double>(j) * at(i, j);
  return d;
}

std::vector<cplx> BiPoly::coeffs_in_B(cplx C) const {
  std::vector<cplx> out(nb, cplx(0.0));
  for (int j = 0; j < nb; ++j) {
    cplx acc(0.0);
    for (int i = nc - 1; i >= 0; --i) acc = acc * C + at(i, j);
    out[j] = acc;
  }
  return out;
}

int BiPoly::degree_B() const {
  for (int j = nb - 1; j >= 0; --j)
    for (int i = 0; i < nc; ++i)
      if (at(i, j) != cplx(0.0)) return j;
  return 0;
}

BiPoly bi_mul(const BiPoly& p, const BiPoly& q) {
  BiPoly out(p.nc + q.nc - 1, p.nb + q.nb - 1);
  for (int i = 0; i < p.nc; ++i)
    for (int j = 0; j < p.nb; ++j) {
      const cplx pij = p.at(i, j);
      if (pij == cplx(0.0)) continue;
      for (int k = 0; k < q.nc; ++k)
        for (int l = 0; l < q.nb; ++l) out.at(i + k, j + l) += pij * q.at(k, l);
    }
  return out;
}

BiPoly bi_sub(const BiPoly& p, const BiPoly& q) {
  BiPoly out(std::max(p.nc, q.nc), std::max(p.nb, q.nb));
  for (int i = 0; i < p.nc; ++i)
    for (int j = 0; j < p.nb; ++j) out.at(i, j) += p.at(i, j);
  for (int i = 0; i < q.nc; ++i)
    for (int j = 0; j < q.nb; ++j) out.at(i, j) -= q.at(i, j);
  return out;
}

cplx lu_det(std::vector<cplx> m, int n) {
  cplx det(1.0);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(m[static_cast<size_t>(col) * n + col]);
    for (int row = col + 1; row < n; ++row) {
      double v = std::abs(m[static_cast<size_t>(row) * n + col]);
      if (v > best) {
        best = v;
        piv = row;
      }
    }
    if (best == 0.0) return cplx(0.0);
    if (piv != col) {
      for (int j = col; j < n; ++j)
        std::swap(m[static_cast<size_t>(piv) * n + j], m[static_cast<size_t>(col) * n + j]);
      det = -det;
    }
    const cplx d = m[static_cast<size_t>(col) * n + col];
    det *= d;
    for (int row = col + 1; row < n; ++row) {
      const cplx f = m[static_cast<size_t>(row) * n + col] / d;
      if (f == cplx(0.0)) continue;
      for (int j = col + 1; j < n; ++j)
        m[static_cast<size_t>(row) * n + j] -= f * m[static_cast<size_t>(col) * n + j];
    }
  }
  return det;
}

std::vector<cplx> lu_solve(std::vector<cplx> m, std::vector<cplx> b, int n) {
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(m[static_cast<size_t>(col) * n + col]);
    for (int row = col + 1; row < n; ++row) {
      double v = std::abs(m[static_cast<size_t>(row) * n + col]);
      if (v > best) {
        best = v;
        piv = row;
      }
    }
    if (best < 1e-300)
      fail(ErrorCode::NewtonDivergence, "singular linear system in correction step");
    if (piv != col) {
      for (int j = col; j < n; ++j)
        std::swap(m[static_cast<size_t>(piv) * n + j], m[static_cast<size_t>(col) * n + j]);
      std::swap(b[piv], b[col]);
    }
    const cplx d = m[static_cast<size_t>(col) * n + col];
    for (int row = col + 1; row < n; ++row) {
      const cplx f = m[static_cast<size_t>(row) * n + col] / d;
      if (f == cplx(0.0)) continue;
      for (int j = col + 1; j < n; ++j)
        m[static_cast<size_t>(row) * n + j] -= f * m[static_cast<size_t>(col) * n + j];
      b[row] -= f * b[col];
    }
  }
  std::vector<cplx> x(n);
  for (int row = n - 1; row >= 0; --row) {
    cplx acc = b[row];
    for (int j = row + 1; j < n; ++j) acc -= m[static_cast<size_t>(row) * n + j] * x[j];
    x[row] = acc / m[static_cast<size_t>(row) * n + row];
  }
  return x;
}

}  // namespace lgcrit
