#pragma once

#include <optional>
#include <vector>

#include "lgcrit/bundle.hpp"
#include "lgcrit/poly.hpp"

namespace lgcrit {

/// One complex coefficient per ray of the fan, grouped by role:
/// cz[i-1] scales the monomial of v_i, cw[j-1] that of e_j, cv0 and ce0 those
/// of v_0 and e_0.
struct CoeffVector {
  std::vector<cplx> cz;
  std::vector<cplx> cw;
  cplx cv0{1.0, 0.0};
  cplx ce0{1.0, 0.0};

  static CoeffVector unit(const BundleSpec& spec);
  /// Unit coefficients with cv0 = exp(u): the one-parameter family used by
  /// the asymptotic-label pipeline.
  static CoeffVector with_u(const BundleSpec& spec, double u);
};

void validate_coeffs(const BundleSpec& spec, const CoeffVector& c);

/// Critical-point candidate: fiber torus coordinates split as z (size s) and
/// w (size r), with the sup-norm residual of the gradient at the point and an
/// optional collection label.
struct CritPoint {
  std::vector<cplx> z;
  std::vector<cplx> w;
  double residual = 0.0;
  ExcLabel label;  // invalid() until assigned
};

struct CritSet {
  BundleSpec spec;
  CoeffVector coeffs;
  double tol = 1e-10;
  double separation = 1e-6;
  std::vector<CritPoint> points;
};

/// W/Z-type monomials of a point. Throws ZeroCoordinate on vanishing input.
cplx mono_WZ(const BundleSpec& spec, const std::vector<cplx>& z, const std::vector<cplx>& w);
cplx mono_prod_w(const std::vector<cplx>& w);

/// Gradient of the potential in logarithmic coordinates, one row per torus
/// direction:
///   G_i     = cz_i z_i - cv0 W/Z              (i = 1..s)
///   G_{s+j} = cw_j w_j + a_j cv0 W/Z - ce0 / prod(w)   (j = 1..r)
/// with W = prod w_j^{a_j} and Z = prod z_i. Linear in the coefficient
/// vector, so the same routine evaluates coefficient-direction derivatives.
std::vector<cplx> grad(const BundleSpec& spec, const CoeffVector& c,
                       const std::vector<cplx>& z, const std::vector<cplx>& w);

/// Dense row-major Jacobian of grad with respect to (z_1..z_s, w_1..w_r).
std::vector<cplx> jacobian(const BundleSpec& spec, const CoeffVector& c,
                           const std::vector<cplx>& z, const std::vector<cplx>& w);

/// Natural magnitude of the gradient rows at this point; residuals are
/// compared against scale * (relative tolerance).
double grad_scale(const BundleSpec& spec, const CoeffVector& c,
                  const std::vector<cplx>& z, const std::vector<cplx>& w);

/// The two aggregate coordinates that determine a critical point:
/// C = cv0 W/Z and B = ce0 / prod(w).
struct ReducedPoint {
  cplx C;
  cplx B;
};
ReducedPoint reduce_point(const BundleSpec& spec, const CoeffVector& c,
                          const std::vector<cplx>& z, const std::vector<cplx>& w);

/// Eliminating z and w from the gradient by z_i = C / cz_i and
/// w_j = (B - a_j C) / cw_j leaves two polynomial conditions:
///   P1 = C^{s+1} - K1 * prod_j (B - a_j C)^{a_j},  K1 = cv0 prod(cz) / prod(cw^{a_j})
///   P2 = B * prod_j (B - a_j C) - K2,              K2 = ce0 prod(cw)
/// P2 is monic of degree r+1 in B. Solutions with C != 0 and all
/// B - a_j C != 0 correspond exactly to critical points.
struct ReducedSystem {
  BiPoly P1;
  BiPoly P2;
};
ReducedSystem reduced_system(const BundleSpec& spec, const CoeffVector& c);

/// Invert the reduction at one root. Throws DegenerateLift when C or some
/// B - a_j C vanishes to within 1e-10 of the point scale.
void lift(const BundleSpec& spec, const CoeffVector& c, cplx C, cplx B,
          std::vector<cplx>& z_out, std::vector<cplx>& w_out);

}  // namespace lgcrit
