#include "torusbound/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace torusbound {

double MongeSurface::derivative_gap(double rho, double h) const {
  const double fd = (shape(rho + h) - shape(rho - h)) / (2.0 * h);
  return std::abs(fd - shape_d1(rho));
}

TorusGeometry::TorusGeometry(double minor_radius, double major_radius)
    : a(minor_radius), R(major_radius), alpha(minor_radius / major_radius) {
  if (!(a > 0.0) || !(R > 0.0)) {
    throw std::invalid_argument("TorusGeometry: radii must be positive");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument(
        "TorusGeometry: a/R must lie in (0, 1), surface self-intersects");
  }
}

double TorusGeometry::axis_distance(double theta) const {
  return R + a * std::cos(theta);
}

CurvatureBundle CurvatureBundle::from_principal(double k1, double k2) {
  CurvatureBundle b;
  b.k1 = k1;
  b.k2 = k2;
  b.H = 0.5 * (k1 + k2);
  b.K = k1 * k2;
  // H^2 - K == ((k1-k2)/2)^2; the difference form keeps Vc <= 0 exactly.
  const double half_gap = 0.5 * (k1 - k2);
  b.Vc = -0.5 * half_gap * half_gap;
  return b;
}

CurvatureBundle monge_curvatures(const MongeSurface& surface, double rho) {
  if (!(rho > 0.0)) {
    throw std::domain_error("monge_curvatures: rho must be positive");
  }
  const double d1 = surface.shape_d1(rho);
  const double d2 = surface.shape_d2(rho);
  if (!std::isfinite(d1) || !std::isfinite(d2)) {
    throw std::domain_error(
        "monge_curvatures: shape derivative is not finite at rho");
  }
  const double z = std::sqrt(1.0 + d1 * d1);
  const double k1 = -d2 / (z * z * z);
  const double k2 = -d1 / (rho * z);
  return CurvatureBundle::from_principal(k1, k2);
}

CurvatureBundle torus_curvatures(const TorusGeometry& geom, double theta) {
  const double f = geom.axis_distance(theta);
  CurvatureBundle b =
      CurvatureBundle::from_principal(1.0 / geom.a, std::cos(theta) / f);
  // Closed form, kept exactly as written; agrees with -(H^2-K)/2 to roundoff.
  b.Vc = -(geom.R * geom.R) / (8.0 * geom.a * geom.a * f * f);
  return b;
}

double norm_weight(double q, const CurvatureBundle& bundle) {
  return 1.0 + 2.0 * q * bundle.H + q * q * bundle.K;
}

}  // namespace torusbound
