#include "torusbound/assembly.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace torusbound {

const char* to_string(Parity parity) {
  return parity == Parity::even ? "even" : "odd";
}

namespace {

void validate_mode(double alpha, int m, int n_basis) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("assembly: alpha must lie in (0, 1)");
  }
  if (m < 0) {
    throw std::invalid_argument("assembly: m must be >= 0");
  }
  if (n_basis < 4) {
    throw std::invalid_argument("assembly: truncation must be >= 4");
  }
}

}  // namespace

FullOperatorPair assemble_full(double alpha, int m, int n_basis,
                               bool include_vc) {
  validate_mode(alpha, m, n_basis);
  const int n = n_basis;
  const int dim = 2 * n + 1;

  const double f0 = 1.0 + 0.5 * alpha * alpha;
  const double f1 = alpha;
  const double f2 = 0.25 * alpha * alpha;
  // (m*alpha) squared as a product so the potential term cancels bit-exactly
  // at the magic ratios alpha = 1/(2m).
  const double ma = m * alpha;
  const double pot = ma * ma - (include_vc ? 0.25 : 0.0);

  FullOperatorPair pair;
  pair.a = Eigen::MatrixXd::Zero(dim, dim);
  pair.b = Eigen::MatrixXd::Zero(dim, dim);
  pair.alpha = alpha;
  pair.m = m;
  pair.n_basis = n;
  pair.include_vc = include_vc;

  for (int k = -n; k <= n; ++k) {
    const int i = k + n;
    pair.b(i, i) = f0;
    pair.a(i, i) = static_cast<double>(k) * k * f0 + pot;
    if (k + 1 <= n) {
      pair.b(i, i + 1) = f1;
      pair.a(i, i + 1) = alpha * (k + 1) * (k + 0.5);
    }
    if (k - 1 >= -n) {
      pair.b(i, i - 1) = f1;
      pair.a(i, i - 1) = alpha * (k - 1) * (k - 0.5);
    }
    if (k + 2 <= n) {
      pair.b(i, i + 2) = f2;
      pair.a(i, i + 2) = f2 * (k + 2) * (k + 1);
    }
    if (k - 2 >= -n) {
      pair.b(i, i - 2) = f2;
      pair.a(i, i - 2) = f2 * (k - 2) * (k - 1);
    }
  }
  return pair;
}

OperatorPair parity_project(const FullOperatorPair& full, Parity parity) {
  const int n = full.n_basis;
  const auto& a = full.a;
  const auto& b = full.b;

  OperatorPair sector;
  sector.alpha = full.alpha;
  sector.spec = ModeSpec{full.m, parity, n, full.include_vc};

  if (parity == Parity::even) {
    // Columns j >= 1 represent cos(j theta) = (z^j + z^{-j})/2; rows k >= 0
    // suffice by reflection symmetry. dim = N + 1.
    sector.a.resize(n + 1, n + 1);
    sector.b.resize(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) {
      sector.a(k, 0) = a(k + n, n);
      sector.b(k, 0) = b(k + n, n);
      for (int j = 1; j <= n; ++j) {
        sector.a(k, j) = 0.5 * (a(k + n, j + n) + a(k + n, n - j));
        sector.b(k, j) = 0.5 * (b(k + n, j + n) + b(k + n, n - j));
      }
    }
  } else {
    // sin(j theta) subspace c_n = -c_{-n}; dim = N.
    sector.a.resize(n, n);
    sector.b.resize(n, n);
    for (int k = 1; k <= n; ++k) {
      for (int j = 1; j <= n; ++j) {
        sector.a(k - 1, j - 1) = 0.5 * (a(k + n, j + n) - a(k + n, n - j));
        sector.b(k - 1, j - 1) = 0.5 * (b(k + n, j + n) - b(k + n, n - j));
      }
    }
  }
  return sector;
}

OperatorPair assemble_sector(double alpha, const ModeSpec& spec) {
  return parity_project(
      assemble_full(alpha, spec.m, spec.n_basis, spec.include_vc),
      spec.parity);
}

double quadrature_oracle(double alpha, int m, bool include_vc, int k, int n,
                         int grid_points) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("quadrature_oracle: alpha must lie in (0, 1)");
  }
  if (grid_points < 1024 || (grid_points & (grid_points - 1)) != 0) {
    throw std::invalid_argument(
        "quadrature_oracle: grid_points must be a power of two >= 1024");
  }
  const double ma = m * alpha;
  const double pot = ma * ma - (include_vc ? 0.25 : 0.0);
  const double step = 2.0 * std::numbers::pi / grid_points;

  // (1/2pi) int e^{-ik theta} Op[e^{in theta}] dtheta by the trapezoid rule;
  // exact for this band-limited integrand. Extended precision accumulation
  // keeps the bound states of roundoff below 1e-13.
  long double acc_re = 0.0L;
  long double acc_im = 0.0L;
  for (int j = 0; j < grid_points; ++j) {
    const double theta = step * j;
    const double f = 1.0 + alpha * std::cos(theta);
    const std::complex<double> op(n * static_cast<double>(n) * f * f + pot,
                                  n * alpha * std::sin(theta) * f);
    const double phase = (n - k) * theta;
    const std::complex<double> term =
        op * std::complex<double>(std::cos(phase), std::sin(phase));
    acc_re += term.real();
    acc_im += term.imag();
  }
  acc_re /= grid_points;
  acc_im /= grid_points;
  (void)acc_im;  // vanishes identically for band-limited integrands
  return static_cast<double>(acc_re);
}

Eigen::MatrixXd measure_gram(Eigen::Index dim, double alpha, Parity parity) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
  if (parity == Parity::even) {
    // basis {1, cos, ..., cos N}: (1/2pi) int w_k w_j (1 + a cos) dtheta
    g(0, 0) = 1.0;
    for (Eigen::Index k = 1; k < dim; ++k) g(k, k) = 0.5;
    if (dim > 1) g(0, 1) = g(1, 0) = 0.5 * alpha;
    for (Eigen::Index k = 1; k + 1 < dim; ++k) {
      g(k, k + 1) = g(k + 1, k) = 0.25 * alpha;
    }
  } else {
    for (Eigen::Index k = 0; k < dim; ++k) g(k, k) = 0.5;
    for (Eigen::Index k = 0; k + 1 < dim; ++k) {
      g(k, k + 1) = g(k + 1, k) = 0.25 * alpha;
    }
  }
  return g;
}

}  // namespace torusbound
