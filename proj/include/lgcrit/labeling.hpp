#pragma once

#include <array>

#include "lgcrit/tracker.hpp"

namespace lgcrit {

/// Point of the two-torus R^2 / Z^2, each coordinate in [0,1).
using TorusPoint = std::array<double, 2>;

/// Distance on R/Z and its sup extension to the two-torus.
double circ_dist(double x, double y);
double torus_dist(const TorusPoint& p, const TorusPoint& q);

/// Angular image of a critical point: the normalized arguments of the two
/// bare monomials (W/Z, 1/prod w).
TorusPoint theta(const BundleSpec& spec, const std::vector<cplx>& z,
                 const std::vector<cplx>& w);

/// Predicted asymptotic positions, one per collection label:
///   theta_1 = l*A/N + k/(s+1)  (mod 1),  theta_2 = l/(r+1)  (mod 1),
/// with A the twist total and N the collection size. Collection order.
struct GridNode {
  ExcLabel label;
  TorusPoint node;
};
std::vector<GridNode> limit_grid(const BundleSpec& spec);

/// Quarter of the minimal pairwise grid spacing: the acceptance radius for
/// label assignment.
double grid_tolerance(const BundleSpec& spec);

/// Label every point by the nearest grid node. Throws LabelAmbiguity when a
/// point sits outside the acceptance radius or two points claim one node.
struct AssignReport {
  double max_dist = 0.0;
  double tolerance = 0.0;
};
AssignReport assign_labels(CritSet& set);

/// Largest circular defect, over all points and both relation families, of
/// the angular relations satisfied in the asymptotic regime:
///   arg z_i + sum arg z - sum a_j arg w_j = 0,  arg w_j + sum arg w = 0  (mod 1).
double hyperplane_residual(const CritSet& set);

/// Angular images in the opposite asymptotic regime, keyed by the labels
/// found in the deep regime: solve at u = 0, label via a track to u = -T,
/// read angles after a track of the same panel to u = +T. Collection order.
struct LabeledTheta {
  ExcLabel label;
  TorusPoint theta;
};
std::vector<LabeledTheta> theta_plus(const BundleSpec& spec, double T,
                                     const TrackOptions& topts = {},
                                     const SolveOptions& sopts = {});

/// Monomial arguments of the whole panel along the one-parameter family,
/// one row per (t, point index); points carry the canonical base-order index.
struct CurveRow {
  double t = 0.0;
  int index = 0;
  cplx WZ;
  cplx invW;
};
std::vector<CurveRow> sample_curve(const BundleSpec& spec, const std::vector<double>& ts,
                                   const TrackOptions& topts = {},
                                   const SolveOptions& sopts = {});

}  // namespace lgcrit
