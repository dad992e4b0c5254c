#pragma once

#include <functional>

namespace torusbound {

// Surface of revolution in Monge form: r(rho, phi) = rho e_rho + S(rho) e_z.
// The caller supplies S and its first two radial derivatives; internal
// numerical differentiation is deliberately avoided so results stay
// deterministic. Valid for rho > 0 (the axis point is excluded).
struct MongeSurface {
  std::function<double(double)> shape;     // S(rho)        [length]
  std::function<double(double)> shape_d1;  // dS/drho       [1]
  std::function<double(double)> shape_d2;  // d2S/drho2     [1/length]

  // |central difference of shape at step h - shape_d1(rho)|, used to check
  // that the supplied derivatives belong to the supplied shape (O(h^2)).
  double derivative_gap(double rho, double h) const;
};

// Torus with minor radius a and major radius R; alpha = a/R is fixed at
// construction and must lie in (0, 1) so the surface does not self-intersect.
struct TorusGeometry {
  double a;
  double R;
  double alpha;

  TorusGeometry(double minor_radius, double major_radius);

  // Distance from the symmetry axis, F = R + a cos(theta). Always > 0.
  double axis_distance(double theta) const;
};

// Principal curvatures at a surface point together with the mean curvature
// H = (k1+k2)/2, the Gaussian curvature K = k1 k2, and the confinement
// potential Vc = -(H^2 - K)/2 = -((k1-k2)/2)^2 / 2 in units hbar = mass = 1.
// Vc <= 0 always; Vc = 0 exactly at umbilic points.
struct CurvatureBundle {
  double k1;
  double k2;
  double H;
  double K;
  double Vc;

  static CurvatureBundle from_principal(double k1, double k2);
};

// Curvatures of a Monge surface of revolution at radial coordinate rho:
//   k1 = -S_rhorho / Z^3,   k2 = -S_rho / (rho Z),   Z = sqrt(1 + S_rho^2).
// Signs follow the [1 + q k] convention of the near-surface metric, so the
// torus patch gives k1 = +1/a. (The k2 denominator uses rho, not rho^2; the
// rho^2 variant fails the closed-form torus cross-check.)
// Throws std::domain_error for rho <= 0 or non-finite shape derivatives.
CurvatureBundle monge_curvatures(const MongeSurface& surface, double rho);

// Closed-form torus curvatures at poloidal angle theta (theta = 0 on the
// outer equator): k1 = 1/a, k2 = cos(theta)/F, Vc = -R^2 / (8 a^2 F^2).
CurvatureBundle torus_curvatures(const TorusGeometry& geom, double theta);

// Norm-conserving rescaling weight W = 1 + 2qH + q^2 K at normal offset q.
double norm_weight(double q, const CurvatureBundle& bundle);

}  // namespace torusbound
