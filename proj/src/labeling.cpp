#include "lgcrit/labeling.hpp"

#include <algorithm>
#include <cmath>

namespace lgcrit {

namespace {

double frac(double x) {
  double f = x - std::floor(x);
  if (f >= 1.0) f -= 1.0;
  return f;
}

double circ_to_zero(double x) {
  const double f = frac(x);
  return std::min(f, 1.0 - f);
}

}  // namespace

double circ_dist(double x, double y) { return circ_to_zero(x - y); }

double torus_dist(const TorusPoint& p, const TorusPoint& q) {
  return std::max(circ_dist(p[0], q[0]), circ_dist(p[1], q[1]));
}

TorusPoint theta(const BundleSpec& spec, const std::vector<cplx>& z,
                 const std::vector<cplx>& w) {
  const double two_pi = 2.0 * M_PI;
  const double t1 = std::arg(mono_WZ(spec, z, w)) / two_pi;
  const double t2 = std::arg(1.0 / mono_prod_w(w)) / two_pi;
  return {frac(t1), frac(t2)};
}

std::vector<GridNode> limit_grid(const BundleSpec& spec) {
  const int s = spec.s, r = spec.r();
  const double A = spec.twist_total(), N = spec.n_points();
  std::vector<GridNode> grid;
  grid.reserve(spec.n_points());
  for (const ExcLabel& p : collection(spec)) {
    TorusPoint node{frac(p.l * A / N + static_cast<double>(p.k) / (s + 1)),
                    frac(static_cast<double>(p.l) / (r + 1))};
    grid.push_back({p, node});
  }
  for (size_t i = 0; i < grid.size(); ++i)
    for (size_t j = i + 1; j < grid.size(); ++j)
      if (torus_dist(grid[i].node, grid[j].node) < 1e-9)
        fail(ErrorCode::GridDegenerate,
             "grid nodes of " + label_to_string(grid[i].label) + " and " +
                 label_to_string(grid[j].label) + " coincide");
  return grid;
}

double grid_tolerance(const BundleSpec& spec) {
  const std::vector<GridNode> grid = limit_grid(spec);
  double min_spacing = 1.0;
  for (size_t i = 0; i < grid.size(); ++i)
    for (size_t j = i + 1; j < grid.size(); ++j)
      min_spacing = std::min(min_spacing, torus_dist(grid[i].node, grid[j].node));
  return 0.25 * min_spacing;
}

AssignReport assign_labels(CritSet& set) {
  const std::vector<GridNode> grid = limit_grid(set.spec);
  AssignReport report;
  report.tolerance = grid_tolerance(set.spec);
  std::vector<int> claimed(grid.size(), -1);
  for (size_t i = 0; i < set.points.size(); ++i) {
    const TorusPoint th = theta(set.spec, set.points[i].z, set.points[i].w);
    double best = 1e300;
    int at = -1;
    for (size_t g = 0; g < grid.size(); ++g) {
      const double d = torus_dist(th, grid[g].node);
      if (d < best) {
        best = d;
        at = static_cast<int>(g);
      }
    }
    if (best > report.tolerance)
      fail(ErrorCode::LabelAmbiguity,
           "point " + std::to_string(i) + " sits " + std::to_string(best) +
               " from the nearest grid node; acceptance radius " +
               std::to_string(report.tolerance));
    if (claimed[at] >= 0)
      fail(ErrorCode::LabelAmbiguity,
           "points " + std::to_string(claimed[at]) + " and " + std::to_string(i) +
               " both claim node " + label_to_string(grid[at].label));
    claimed[at] = static_cast<int>(i);
    set.points[i].label = grid[at].label;
    report.max_dist = std::max(report.max_dist, best);
  }
  return report;
}

double hyperplane_residual(const CritSet& set) {
  const BundleSpec& spec = set.spec;
  const double two_pi = 2.0 * M_PI;
  double worst = 0.0;
  for (const CritPoint& p : set.points) {
    std::vector<double> th(spec.s), de(spec.r());
    for (int i = 0; i < spec.s; ++i) th[i] = std::arg(p.z[i]) / two_pi;
    for (int j = 0; j < spec.r(); ++j) de[j] = std::arg(p.w[j]) / two_pi;
    double sum_th = 0.0, sum_de = 0.0, twist_de = 0.0;
    for (double v : th) sum_th += v;
    for (int j = 0; j < spec.r(); ++j) {
      sum_de += de[j];
      twist_de += spec.a[j] * de[j];
    }
    for (int i = 0; i < spec.s; ++i)
      worst = std::max(worst, circ_to_zero(th[i] + sum_th - twist_de));
    for (int j = 0; j < spec.r(); ++j)
      worst = std::max(worst, circ_to_zero(de[j] + sum_de));
  }
  return worst;
}

std::vector<LabeledTheta> theta_plus(const BundleSpec& spec, double T,
                                     const TrackOptions& topts, const SolveOptions& sopts) {
  const CritSet base = solve_crit(spec, CoeffVector::unit(spec), sopts);
  CritSet deep = track_segment(base, 0.0, -T, topts);
  assign_labels(deep);
  const CritSet far = track_segment(base, 0.0, T, topts);
  std::vector<LabeledTheta> rows;
  rows.reserve(base.points.size());
  for (size_t i = 0; i < base.points.size(); ++i)
    rows.push_back({deep.points[i].label, theta(spec, far.points[i].z, far.points[i].w)});
  std::sort(rows.begin(), rows.end(), [&](const LabeledTheta& x, const LabeledTheta& y) {
    return label_index(spec, x.label) < label_index(spec, y.label);
  });
  return rows;
}

std::vector<CurveRow> sample_curve(const BundleSpec& spec, const std::vector<double>& ts,
                                   const TrackOptions& topts, const SolveOptions& sopts) {
  const CritSet base = solve_crit(spec, CoeffVector::unit(spec), sopts);
  std::vector<CurveRow> rows;
  for (double t : ts) {
    const CritSet at = (t == 0.0) ? base : track_segment(base, 0.0, t, topts);
    for (size_t i = 0; i < at.points.size(); ++i) {
      CurveRow row;
      row.t = t;
      row.index = static_cast<int>(i);
      row.WZ = mono_WZ(spec, at.points[i].z, at.points[i].w);
      row.invW = 1.0 / mono_prod_w(at.points[i].w);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace lgcrit
