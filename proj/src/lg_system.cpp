#include "lgcrit/lg_system.hpp"

#include <algorithm>
#include <cmath>

namespace lgcrit {

namespace {

void check_nonzero(const std::vector<cplx>& v, const char* what) {
  for (const cplx& x : v)
    if (std::abs(x) < 1e-300) fail(ErrorCode::ZeroCoordinate, std::string(what) + " coordinate vanishes");
}

}  // namespace

CoeffVector CoeffVector::unit(const BundleSpec& spec) {
  CoeffVector c;
  c.cz.assign(spec.s, cplx(1.0));
  c.cw.assign(spec.r(), cplx(1.0));
  return c;
}

CoeffVector CoeffVector::with_u(const BundleSpec& spec, double u) {
  CoeffVector c = unit(spec);
  c.cv0 = cplx(std::exp(u), 0.0);
  return c;
}

void validate_coeffs(const BundleSpec& spec, const CoeffVector& c) {
  if (static_cast<int>(c.cz.size()) != spec.s || static_cast<int>(c.cw.size()) != spec.r())
    fail(ErrorCode::SizeMismatch, "coefficient vector does not match the ray layout");
  check_nonzero(c.cz, "coefficient");
  check_nonzero(c.cw, "coefficient");
  if (std::abs(c.cv0) < 1e-300 || std::abs(c.ce0) < 1e-300)
    fail(ErrorCode::ZeroCoordinate, "coefficient vanishes");
}

cplx mono_WZ(const BundleSpec& spec, const std::vector<cplx>& z, const std::vector<cplx>& w) {
  check_nonzero(z, "torus");
  check_nonzero(w, "torus");
  cplx num(1.0);
  for (int j = 0; j < spec.r(); ++j)
    for (int p = 0; p < spec.a[j]; ++p) num *= w[j];
  cplx den(1.0);
  for (const cplx& zi : z) den *= zi;
  return num / den;
}

cplx mono_prod_w(const std::vector<cplx>& w) {
  check_nonzero(w, "torus");
  cplx p(1.0);
  for (const cplx& wj : w) p *= wj;
  return p;
}

std::vector<cplx> grad(const BundleSpec& spec, const CoeffVector& c,
                       const std::vector<cplx>& z, const std::vector<cplx>& w) {
  const int s = spec.s, r = spec.r();
  if (static_cast<int>(z.size()) != s || static_cast<int>(w.size()) != r)
    fail(ErrorCode::SizeMismatch, "point does not match the ray layout");
  const cplx T = c.cv0 * mono_WZ(spec, z, w);
  const cplx U = c.ce0 / mono_prod_w(w);
  std::vector<cplx> g(s + r);
  for (int i = 0; i < s; ++i) g[i] = c.cz[i] * z[i] - T;
  for (int j = 0; j < r; ++j) g[s + j] = c.cw[j] * w[j] + static_cast<double>(spec.a[j]) * T - U;
  return g;
}

std::vector<cplx> jacobian(const BundleSpec& spec, const CoeffVector& c,
                           const std::vector<cplx>& z, const std::vector<cplx>& w) {
  const int s = spec.s, r = spec.r(), n = s + r;
  const cplx T = c.cv0 * mono_WZ(spec, z, w);
  const cplx U = c.ce0 / mono_prod_w(w);
  std::vector<cplx> J(static_cast<size_t>(n) * n, cplx(0.0));
  auto at = [&](int row, int col) -> cplx& { return J[static_cast<size_t>(row) * n + col]; };
  for (int i = 0; i < s; ++i) {
    for (int k = 0; k < s; ++k) at(i, k) = T / z[k];
    at(i, i) += c.cz[i];
    for (int j = 0; j < r; ++j) at(i, s + j) = -static_cast<double>(spec.a[j]) * T / w[j];
  }
  for (int j = 0; j < r; ++j) {
    const double aj = spec.a[j];
    for (int k = 0; k < s; ++k) at(s + j, k) = -aj * T / z[k];
    for (int m = 0; m < r; ++m)
      at(s + j, s + m) = aj * static_cast<double>(spec.a[m]) * T / w[m] + U / w[m];
    at(s + j, s + j) += c.cw[j];
  }
  return J;
}

double grad_scale(const BundleSpec& spec, const CoeffVector& c,
                  const std::vector<cplx>& z, const std::vector<cplx>& w) {
  double scale = 1.0;
  scale = std::max(scale, std::abs(c.cv0 * mono_WZ(spec, z, w)));
  scale = std::max(scale, std::abs(c.ce0 / mono_prod_w(w)));
  for (int i = 0; i < spec.s; ++i) scale = std::max(scale, std::abs(c.cz[i] * z[i]));
  for (int j = 0; j < spec.r(); ++j) scale = std::max(scale, std::abs(c.cw[j] * w[j]));
  return scale;
}

ReducedPoint reduce_point(const BundleSpec& spec, const CoeffVector& c,
                          const std::vector<cplx>& z, const std::vector<cplx>& w) {
  return {c.cv0 * mono_WZ(spec, z, w), c.ce0 / mono_prod_w(w)};
}

ReducedSystem reduced_system(const BundleSpec& spec, const CoeffVector& c) {
  validate_coeffs(spec, c);
  const int r = spec.r();
  cplx K1 = c.cv0;
  for (const cplx& v : c.cz) K1 *= v;
  cplx K2 = c.ce0;
  for (int j = 0; j < r; ++j) {
    K2 *= c.cw[j];
    for (int p = 0; p < spec.a[j]; ++p) K1 /= c.cw[j];
  }

  // prod_j (B - a_j C)^{a_j} and B * prod_j (B - a_j C)
  BiPoly twist_prod(1, 1);
  twist_prod.at(0, 0) = cplx(1.0);
  BiPoly full_prod = twist_prod;
  for (int j = 0; j < r; ++j) {
    BiPoly lin(2, 2);
    lin.at(0, 1) = cplx(1.0);                              // B
    lin.at(1, 0) = cplx(-static_cast<double>(spec.a[j]));  // -a_j C
    for (int p = 0; p < spec.a[j]; ++p) twist_prod = bi_mul(twist_prod, lin);
    full_prod = bi_mul(full_prod, lin);
  }

  BiPoly cpow(spec.s + 2, 1);
  cpow.at(spec.s + 1, 0) = cplx(1.0);
  BiPoly k1term = twist_prod;
  for (cplx& v : k1term.c) v *= K1;
  ReducedSystem sys;
  sys.P1 = bi_sub(cpow, k1term);

  BiPoly bfac(1, 2);
  bfac.at(0, 1) = cplx(1.0);
  BiPoly p2 = bi_mul(bfac, full_prod);
  p2.at(0, 0) -= K2;
  sys.P2 = p2;
  return sys;
}

void lift(const BundleSpec& spec, const CoeffVector& c, cplx C, cplx B,
          std::vector<cplx>& z_out, std::vector<cplx>& w_out) {
  const double scale = std::max({1.0, std::abs(C), std::abs(B)});
  if (std::abs(C) <= 1e-10 * scale)
    fail(ErrorCode::DegenerateLift, "C vanishes; root lies on a contracted locus");
  z_out.assign(spec.s, cplx(0.0));
  w_out.assign(spec.r(), cplx(0.0));
  for (int i = 0; i < spec.s; ++i) z_out[i] = C / c.cz[i];
  for (int j = 0; j < spec.r(); ++j) {
    const cplx num = B - static_cast<double>(spec.a[j]) * C;
    if (std::abs(num) <= 1e-10 * scale)
      fail(ErrorCode::DegenerateLift,
           "B - a_j C vanishes for j = " + std::to_string(j + 1) +
               "; root lies on a contracted locus");
    w_out[j] = num / c.cw[j];
  }
}

}  // namespace lgcrit
