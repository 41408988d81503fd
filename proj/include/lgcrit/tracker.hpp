#pragma once

#include <functional>

#include "lgcrit/crit_solver.hpp"

namespace lgcrit {

/// Coefficient path over tau in [0,1] with its tau-derivative in the same
/// layout. Both callables must be pure.
struct CoeffPath {
  std::function<CoeffVector(double)> value;
  std::function<CoeffVector(double)> deriv;
};

/// One-parameter family cv0 = exp(u), u linear from u0 to u1, all other
/// coefficients held at 1.
CoeffPath segment_path(const BundleSpec& spec, double u0, double u1);

/// Coefficient loop attached to a divisor: each ray coefficient of the base
/// vector acquires the phase exp(2 pi i * coeff * theta), with the divisor
/// coefficient of that ray as winding number. Closes at theta = 1.
CoeffPath loop_path(const BundleSpec& spec, const CoeffVector& base, const ToricDivisor& D);

struct TrackOptions {
  double corrector_tol = 1e-12;  // scaled residual target of the corrector
  int corrector_iters = 8;
  double h_init = 1e-2;
  double h_min = 1e-9;   // falling below this raises PathCollision
  double h_max = 0.1;
  double grow = 1.5;     // step growth after a streak of clean steps
  int grow_after = 5;
  double collision_dist = 1e-6;  // panel points may never get this close
  double match_ratio = 3.0;      // endpoint matching must win by this factor
  int threads = 0;
};

/// Advance every point of the panel along the path with one shared adaptive
/// step (predictor: fourth-order Runge-Kutta on the Davidenko flow;
/// corrector: Newton on the frozen-coefficient gradient). A shared step keeps
/// the panel synchronized so near-collisions are observable; any corrector
/// failure halves the step for the whole panel. Ends with an exact correction
/// at tau = 1. Index order is preserved.
std::vector<CritPoint> track_panel(const BundleSpec& spec, const std::vector<CritPoint>& start,
                                   const CoeffPath& path, const TrackOptions& opts = {});

/// Continue a critical set along cv0 = exp(u) from u0 to u1. The start set
/// must sit at the u0 coefficients.
CritSet track_segment(const CritSet& start, double u0, double u1,
                      const TrackOptions& opts = {});

/// Index permutation: tracked point i returns to base point map[i].
struct Permutation {
  std::vector<int> map;
  static Permutation identity(int n);
  bool is_identity() const;
  /// First this loop, then next: (this.then(next)).map[i] = next.map[this.map[i]].
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

/// Monodromy of the critical set around the loop of D based at base.coeffs.
/// Matches endpoints to base points by nearest neighbor in the sup metric and
/// requires the match to be unambiguous by match_ratio and bijective.
Permutation track_loop(const CritSet& base, const ToricDivisor& D,
                       const TrackOptions& opts = {});

}  // namespace lgcrit
