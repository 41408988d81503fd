#pragma once

#include <random>

#include "lgcrit/lg_system.hpp"

namespace lgcrit {

struct SolveOptions {
  double tol = 1e-10;         // absolute residual recorded per point must sit below this at desk scales
  double separation = 1e-6;   // minimum pairwise sup-distance between kept points
  double sample_radius = 1.37;  // interpolation circle for the elimination step
  int threads = 0;            // 0 = hardware default; output is thread-count independent
};

/// All isolated roots of the reduced pair (P1, P2) with the contracted loci
/// removed, canonically ordered by (Re C, Im C, Re B, Im B). The count must
/// equal (s+1)(r+1); anything else raises NonGenericParameter.
///
/// Strategy: when every twist vanishes the pair splits into two univariate
/// power equations; otherwise P1 and P2 are crossed by a Sylvester resultant
/// in B, sampled on a circle of interpolation nodes in C, reconstructed by an
/// inverse DFT, and rooted. Each candidate pair is sharpened by a bivariate
/// Newton iteration before filtering and deduplication.
std::vector<ReducedPoint> solve_reduced(const BundleSpec& spec, const CoeffVector& c,
                                        const SolveOptions& opts = {});

/// Critical set of the potential at the given coefficients: reduced roots,
/// lifted to torus points and re-converged on the full gradient. Points are
/// ordered by the canonical order of their reduced images.
CritSet solve_crit(const BundleSpec& spec, const CoeffVector& c,
                   const SolveOptions& opts = {});

/// Independent-coefficient sample for robustness sweeps: every coefficient
/// drawn from the annulus 0.5 <= |c| <= 2 with uniform radius and angle.
CoeffVector random_coeffs(const BundleSpec& spec, std::mt19937_64& rng);

}  // namespace lgcrit
