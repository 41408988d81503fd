#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "lgcrit/crit_solver.hpp"
#include "lgcrit/json_io.hpp"

using namespace lgcrit;

namespace {
const std::vector<BundleSpec> suite = {{1, {1}},    {2, {1}}, {2, {0, 2}},
                                       {3, {1, 2}}, {1, {0}}, {2, {0}}};

// Frozen roots of C^4 + C^3 - 1 = 0 in canonical order, with their B = C^2 + C.
struct Golden {
  cplx C, B;
};
const std::vector<Golden> golden = {
    {cplx(-1.3802775690976130, 0.0), cplx(0.52488859865640503, 0.0)},
    {cplx(-0.21944747214927537, -0.91447366296772736),
     cplx(-1.0075523593781788, -0.51311579559701526)},
    {cplx(-0.21944747214927537, 0.91447366296772736),
     cplx(-1.0075523593781788, 0.51311579559701526)},
    {cplx(0.81917251339616404, 0.0), cplx(1.4902161200999531, 0.0)},
};
}  // namespace

TEST_CASE("reduced solutions of the first Hirzebruch surface at unit coefficients") {
  const BundleSpec h{1, {1}};
  const auto pts = solve_reduced(h, CoeffVector::unit(h), SolveOptions{});
  REQUIRE(pts.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(pts[i].C - golden[i].C) < 1e-12);
    CHECK(std::abs(pts[i].B - golden[i].B) < 1e-12);
    // exact algebraic relation on this surface: B = C^2 + C
    CHECK(std::abs(pts[i].B - (pts[i].C * pts[i].C + pts[i].C)) < 1e-12);
  }
}

TEST_CASE("critical points of the first Hirzebruch surface at unit coefficients") {
  const BundleSpec h{1, {1}};
  const CritSet cs = solve_crit(h, CoeffVector::unit(h), SolveOptions{});
  REQUIRE(cs.points.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    const CritPoint& p = cs.points[i];
    // z = C and w = C^2 on this surface
    CHECK(std::abs(p.z[0] - golden[i].C) < 1e-12);
    CHECK(std::abs(p.w[0] - golden[i].C * golden[i].C) < 1e-12);
    CHECK(p.residual < 1e-10);
    const auto g = grad(h, cs.coeffs, p.z, p.w);
    CHECK(std::abs(g[0]) < 1e-10);
    CHECK(std::abs(g[1]) < 1e-10);
  }
}

TEST_CASE("products of projective spaces solve to exact roots of unity") {
  for (const BundleSpec& spec : {BundleSpec{1, {0}}, BundleSpec{2, {0}}}) {
    const CritSet cs = solve_crit(spec, CoeffVector::unit(spec), SolveOptions{});
    REQUIRE(cs.points.size() == static_cast<size_t>(spec.n_points()));
    for (const CritPoint& p : cs.points) {
      for (const cplx& zi : p.z) CHECK(std::abs(std::pow(zi, spec.s + 1) - cplx(1)) < 1e-10);
      for (const cplx& wj : p.w) CHECK(std::abs(std::pow(wj, spec.r() + 1) - cplx(1)) < 1e-10);
      // all fiber coordinates agree and all base coordinates agree
      for (const cplx& zi : p.z) CHECK(std::abs(zi - p.z[0]) < 1e-12);
    }
  }
}

TEST_CASE("point count is invariant over random coefficients") {
  std::mt19937_64 rng(424242);
  for (const BundleSpec& spec : suite) {
    int failures = 0;
    for (int rep = 0; rep < 12; ++rep) {
      const CoeffVector c = random_coeffs(spec, rng);
      try {
        const CritSet cs = solve_crit(spec, c, SolveOptions{});
        const std::string spec_name = spec.name();
      CAPTURE(spec_name);
        CHECK(cs.points.size() == static_cast<size_t>(spec.n_points()));
        for (const CritPoint& p : cs.points) CHECK(p.residual < 1e-8 * (1.0 + std::abs(c.cv0)));
      } catch (const Error& e) {
        REQUIRE(e.code() == ErrorCode::NonGenericParameter);
        ++failures;
      }
    }
    CHECK(failures == 0);
  }
}

TEST_CASE("solutions are independent of the sampling radius") {
  std::mt19937_64 rng(99);
  const BundleSpec spec{3, {1, 2}};
  const CoeffVector c = random_coeffs(spec, rng);
  SolveOptions a, b;
  a.sample_radius = 1.37;
  b.sample_radius = 0.9;
  const auto pa = solve_reduced(spec, c, a);
  const auto pb = solve_reduced(spec, c, b);
  REQUIRE(pa.size() == pb.size());
  for (size_t i = 0; i < pa.size(); ++i) {
    CHECK(std::abs(pa[i].C - pb[i].C) < 1e-8);
    CHECK(std::abs(pa[i].B - pb[i].B) < 1e-8);
  }
}

TEST_CASE("reduced solutions satisfy both polynomials") {
  std::mt19937_64 rng(5);
  for (const BundleSpec& spec : suite) {
    const CoeffVector c = random_coeffs(spec, rng);
    const ReducedSystem sys = reduced_system(spec, c);
    for (const ReducedPoint& p : solve_reduced(spec, c, SolveOptions{})) {
      const double s1 = sys.P1.eval_abs(std::abs(p.C), std::abs(p.B));
      const double s2 = sys.P2.eval_abs(std::abs(p.C), std::abs(p.B));
      const std::string spec_name = spec.name();
      CAPTURE(spec_name);
      CHECK(std::abs(sys.P1.eval(p.C, p.B)) < 1e-9 * (1.0 + s1));
      CHECK(std::abs(sys.P2.eval(p.C, p.B)) < 1e-9 * (1.0 + s2));
    }
  }
}

TEST_CASE("thread count does not change the serialized result") {
  std::mt19937_64 rng(31337);
  const BundleSpec spec{3, {1, 2}};
  const CoeffVector c = random_coeffs(spec, rng);
  SolveOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const CritSet ca = solve_crit(spec, c, one);
  const CritSet cb = solve_crit(spec, c, four);
  CHECK(critset_json(ca) == critset_json(cb));
}

TEST_CASE("an impossible separation demand reports a non-generic parameter") {
  const BundleSpec h{1, {1}};
  SolveOptions opts;
  opts.separation = 10.0;  // no four points in a bounded set are 10 apart
  try {
    solve_crit(h, CoeffVector::unit(h), opts);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonGenericParameter);
  }
}
