#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "lgcrit/crit_solver.hpp"

using namespace lgcrit;

namespace {
const std::vector<BundleSpec> suite = {{1, {1}},    {2, {1}}, {2, {0, 2}},
                                       {3, {1, 2}}, {1, {0}}, {2, {0}}};

std::vector<cplx> random_point(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::vector<cplx> v(n);
  for (cplx& x : v) {
    const double rr = radius(rng), th = angle(rng);
    x = cplx(rr * std::cos(th), rr * std::sin(th));
  }
  return v;
}
}  // namespace

TEST_CASE("gradient at the unit point of the first Hirzebruch surface") {
  const BundleSpec h{1, {1}};
  const auto g = grad(h, CoeffVector::unit(h), {cplx(1)}, {cplx(1)});
  REQUIRE(g.size() == 2);
  CHECK(std::abs(g[0] - cplx(0)) < 1e-15);
  CHECK(std::abs(g[1] - cplx(1)) < 1e-15);
}

TEST_CASE("gradient rejects malformed input") {
  const BundleSpec h{1, {1}};
  CHECK_THROWS_AS(grad(h, CoeffVector::unit(h), {cplx(1), cplx(1)}, {cplx(1)}), Error);
  CHECK_THROWS_AS(grad(h, CoeffVector::unit(h), {cplx(0)}, {cplx(1)}), Error);
  CoeffVector bad = CoeffVector::unit(h);
  bad.cz.clear();
  CHECK_THROWS_AS(validate_coeffs(h, bad), Error);
  bad = CoeffVector::unit(h);
  bad.ce0 = cplx(0);
  CHECK_THROWS_AS(validate_coeffs(h, bad), Error);
}

TEST_CASE("jacobian matches central finite differences") {
  std::mt19937_64 rng(20260822);
  for (const BundleSpec& spec : suite) {
    const int n = spec.s + spec.r();
    for (int rep = 0; rep < 5; ++rep) {
      const CoeffVector c = random_coeffs(spec, rng);
      std::vector<cplx> z = random_point(spec.s, rng);
      std::vector<cplx> w = random_point(spec.r(), rng);
      const auto J = jacobian(spec, c, z, w);
      const double h = 1e-6;
      double worst = 0.0;
      for (int col = 0; col < n; ++col) {
        auto zp = z, zm = z;
        auto wp = w, wm = w;
        if (col < spec.s) {
          zp[col] += h;
          zm[col] -= h;
        } else {
          wp[col - spec.s] += h;
          wm[col - spec.s] -= h;
        }
        const auto gp = grad(spec, c, zp, wp);
        const auto gm = grad(spec, c, zm, wm);
        for (int row = 0; row < n; ++row) {
          const cplx fd = (gp[row] - gm[row]) / (2.0 * h);
          const cplx an = J[static_cast<size_t>(row) * n + col];
          worst = std::max(worst, std::abs(fd - an) / (1.0 + std::abs(an)));
        }
      }
      const std::string spec_name = spec.name();
      CAPTURE(spec_name);
      CHECK(worst < 1e-6);
    }
  }
}

TEST_CASE("reduced pair of the first Hirzebruch surface at unit coefficients") {
  const BundleSpec h{1, {1}};
  const ReducedSystem sys = reduced_system(h, CoeffVector::unit(h));
  // P1 = C^2 + C - B
  CHECK(std::abs(sys.P1.at(2, 0) - cplx(1)) < 1e-15);
  CHECK(std::abs(sys.P1.at(1, 0) - cplx(1)) < 1e-15);
  CHECK(std::abs(sys.P1.at(0, 1) - cplx(-1)) < 1e-15);
  CHECK(std::abs(sys.P1.at(0, 0)) < 1e-15);
  // P2 = B^2 - C B - 1
  CHECK(std::abs(sys.P2.at(0, 2) - cplx(1)) < 1e-15);
  CHECK(std::abs(sys.P2.at(1, 1) - cplx(-1)) < 1e-15);
  CHECK(std::abs(sys.P2.at(0, 0) - cplx(-1)) < 1e-15);
}

TEST_CASE("reduced pair matches direct substitution at random arguments") {
  std::mt19937_64 rng(7);
  for (const BundleSpec& spec : suite) {
    const CoeffVector c = random_coeffs(spec, rng);
    const ReducedSystem sys = reduced_system(spec, c);
    cplx K1 = c.cv0, K2 = c.ce0;
    for (const cplx& v : c.cz) K1 *= v;
    for (int j = 0; j < spec.r(); ++j) {
      K2 *= c.cw[j];
      for (int p = 0; p < spec.a[j]; ++p) K1 /= c.cw[j];
    }
    for (int rep = 0; rep < 8; ++rep) {
      const cplx C = random_point(1, rng)[0], B = random_point(1, rng)[0];
      cplx twist(1.0), full(1.0);
      for (int j = 0; j < spec.r(); ++j) {
        const cplx lin = B - static_cast<double>(spec.a[j]) * C;
        full *= lin;
        for (int p = 0; p < spec.a[j]; ++p) twist *= lin;
      }
      const cplx p1_direct = std::pow(C, spec.s + 1) - K1 * twist;
      const cplx p2_direct = B * full - K2;
      const std::string spec_name = spec.name();
      CAPTURE(spec_name);
      CHECK(std::abs(sys.P1.eval(C, B) - p1_direct) < 1e-10 * (1.0 + std::abs(p1_direct)));
      CHECK(std::abs(sys.P2.eval(C, B) - p2_direct) < 1e-10 * (1.0 + std::abs(p2_direct)));
    }
  }
}

TEST_CASE("lift inverts the reduction and flags contracted loci") {
  const BundleSpec h{1, {1}};
  const CoeffVector c = CoeffVector::unit(h);
  std::vector<cplx> z, w;
  lift(h, c, cplx(0.5, 0.25), cplx(2.0), z, w);
  const ReducedPoint back = reduce_point(h, c, z, w);
  // reduction of a lifted point recovers C only on actual roots; the w-part
  // identity B = a C + cw w holds unconditionally:
  CHECK(std::abs(w[0] - (cplx(2.0) - cplx(0.5, 0.25))) < 1e-15);
  CHECK(std::abs(z[0] - cplx(0.5, 0.25)) < 1e-15);
  CHECK(std::isfinite(back.C.real()));

  CHECK_THROWS_AS(lift(h, c, cplx(1.0), cplx(1.0), z, w), Error);  // B = a_1 C
  try {
    lift(h, c, cplx(1.0), cplx(1.0), z, w);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateLift);
  }
  CHECK_THROWS_AS(lift(h, c, cplx(0.0), cplx(1.0), z, w), Error);  // C = 0
}

TEST_CASE("gradient scale tracks the dominant term") {
  const BundleSpec h{1, {1}};
  const CoeffVector c = CoeffVector::with_u(h, 3.0);
  const double sc = grad_scale(h, c, {cplx(2.0)}, {cplx(1.5)});
  CHECK(sc >= std::exp(3.0) * 1.5 / 2.0 - 1e-12);  // the cv0 W/Z term
  CHECK(grad_scale(h, CoeffVector::unit(h), {cplx(1e-3)}, {cplx(1e-3)}) >= 1.0);
}
