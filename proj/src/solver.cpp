#include "torusbound/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace torusbound {

namespace {

constexpr double kPolishThreshold = 2e-10;
constexpr double kDegenerateGap = 1e-12;

// One step of inverse iteration on the pencil, used only when the dense
// solver's backward error leaves a residual above kPolishThreshold (seen
// near the N = 1024 cap where ||A|| ~ N^2).
void polish(const OperatorPair& pair, double& beta, Eigen::VectorXd& c) {
  for (int iter = 0; iter < 2; ++iter) {
    if (pencil_residual(pair, beta, c) <= kPolishThreshold) return;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(pair.a - beta * pair.b);
    Eigen::VectorXd x = lu.solve(pair.b * c);
    const double nx = x.norm();
    if (!(nx > 0.0) || !x.allFinite()) return;
    x /= nx;
    const double denom = x.dot(pair.b * x);
    if (denom != 0.0) beta = x.dot(pair.a * x) / denom;
    c = x;
  }
}

}  // namespace

std::vector<EigenPair> solve_pair(const OperatorPair& pair) {
  const auto dim = pair.dim();
  Eigen::LLT<Eigen::MatrixXd> llt(pair.b);
  if (llt.info() != Eigen::Success) {
    throw SolverError("solve_pair: Cholesky factorization of B failed");
  }
  const auto l = llt.matrixL();
  // Similar matrix L^{-1} A L^{-T}; shares the pencil's eigenvalues, and
  // eigenvectors map back through c = L^{-T} y.
  Eigen::MatrixXd t = l.solve(pair.a);
  Eigen::MatrixXd similar = l.solve(t.transpose()).transpose();

  Eigen::EigenSolver<Eigen::MatrixXd> es(similar);
  if (es.info() != Eigen::Success) {
    throw SolverError("solve_pair: eigen decomposition did not converge");
  }

  std::vector<EigenPair> pairs;
  pairs.reserve(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const std::complex<double> lambda = es.eigenvalues()(i);
    if (std::abs(lambda.imag()) >
        kEigenImagTol * (1.0 + std::abs(lambda.real()))) {
      throw SolverError(
          "solve_pair: non-real eigenvalue, pencil lost self-adjointness");
    }
    Eigen::VectorXd y = es.eigenvectors().col(i).real();
    EigenPair ep;
    ep.beta = lambda.real();
    ep.coeffs = l.transpose().solve(y);
    pairs.push_back(std::move(ep));
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const EigenPair& x, const EigenPair& y) { return x.beta < y.beta; });
  return pairs;
}

double evaluate_series(const Eigen::VectorXd& coeffs, Parity parity,
                       double theta) {
  // cos/sin recurrences: trig(j+1) = 2 cos(theta) trig(j) - trig(j-1)
  const double c1 = std::cos(theta);
  const double s1 = std::sin(theta);
  const double two_c = 2.0 * c1;
  if (parity == Parity::even) {
    double acc = coeffs(0);
    double prev = 1.0, cur = c1;
    for (Eigen::Index j = 1; j < coeffs.size(); ++j) {
      acc += coeffs(j) * cur;
      const double next = two_c * cur - prev;
      prev = cur;
      cur = next;
    }
    return acc;
  }
  double acc = 0.0;
  double prev = 0.0, cur = s1;
  for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
    acc += coeffs(j) * cur;
    const double next = two_c * cur - prev;
    prev = cur;
    cur = next;
  }
  return acc;
}

int count_nodes(const Eigen::VectorXd& coeffs, Parity parity, int samples) {
  std::vector<double> vals(samples);
  double peak = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / samples;
    vals[i] = evaluate_series(coeffs, parity, theta);
    peak = std::max(peak, std::abs(vals[i]));
  }
  if (peak == 0.0) return 0;
  const double tol = 1e-9 * peak;

  // Cyclic sign changes, skipping near-zero samples (odd states hit exact
  // grid zeros at theta = 0 and pi).
  int count = 0;
  int last_sign = 0;
  int first_sign = 0;
  for (int i = 0; i < samples; ++i) {
    if (std::abs(vals[i]) <= tol) continue;
    const int s = vals[i] > 0.0 ? 1 : -1;
    if (last_sign == 0) {
      first_sign = s;
    } else if (s != last_sign) {
      ++count;
    }
    last_sign = s;
  }
  if (last_sign != 0 && first_sign != last_sign) ++count;  // wrap-around
  return count;
}

Eigenstate normalize_state(const Eigen::VectorXd& coeffs, double alpha,
                           Parity parity, int m, int n_index) {
  if (coeffs.size() == 0 || coeffs.norm() == 0.0) {
    throw std::invalid_argument("normalize_state: zero coefficient vector");
  }
  const Eigen::MatrixXd g = measure_gram(coeffs.size(), alpha, parity);
  const double quad = coeffs.dot(g * coeffs);
  const double norm2 = 2.0 * std::numbers::pi * alpha * quad;
  if (!(norm2 > 0.0)) {
    throw std::invalid_argument("normalize_state: degenerate norm");
  }

  Eigenstate state;
  state.coeffs = coeffs / std::sqrt(norm2);

  // Leading coefficient (constant term / sin theta term) fixes the sign;
  // fall back to the first significant entry when it vanishes.
  double anchor = state.coeffs(0);
  if (std::abs(anchor) <= 1e-14 * state.coeffs.cwiseAbs().maxCoeff()) {
    for (Eigen::Index j = 0; j < state.coeffs.size(); ++j) {
      if (std::abs(state.coeffs(j)) >
          1e-14 * state.coeffs.cwiseAbs().maxCoeff()) {
        anchor = state.coeffs(j);
        break;
      }
    }
  }
  if (anchor < 0.0) state.coeffs = -state.coeffs;

  state.m = m;
  state.parity = parity;
  state.n_index = n_index;
  state.degeneracy = m == 0 ? 1 : 2;
  state.norm_constant = state.coeffs(0);
  state.node_count = count_nodes(state.coeffs, parity);
  return state;
}

double pencil_residual(const OperatorPair& pair, double beta,
                       const Eigen::VectorXd& coeffs) {
  const Eigen::VectorXd bc = pair.b * coeffs;
  return (pair.a * coeffs - beta * bc).norm() / bc.norm();
}

namespace {

Spectrum materialize(const OperatorPair& pair, bool converged) {
  auto pairs = solve_pair(pair);
  Spectrum spectrum;
  spectrum.alpha = pair.alpha;
  spectrum.m = pair.spec.m;
  spectrum.parity = pair.spec.parity;
  spectrum.include_vc = pair.spec.include_vc;
  spectrum.truncation_used = pair.spec.n_basis;
  spectrum.converged = converged;
  spectrum.states.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    double beta = pairs[i].beta;
    Eigen::VectorXd c = pairs[i].coeffs;
    if (pencil_residual(pair, beta, c) > kPolishThreshold) {
      polish(pair, beta, c);
    }
    if (pencil_residual(pair, beta, c) > kResidualTol) {
      throw SolverError("materialize: eigenpair residual above tolerance");
    }
    Eigenstate state = normalize_state(c, pair.alpha, pair.spec.parity,
                                       pair.spec.m, static_cast<int>(i));
    state.beta = beta;
    spectrum.states.push_back(std::move(state));
  }
  for (std::size_t i = 0; i + 1 < spectrum.states.size(); ++i) {
    if (std::abs(spectrum.states[i + 1].beta - spectrum.states[i].beta) <
        kDegenerateGap) {
      spectrum.states[i].degenerate = true;
      spectrum.states[i + 1].degenerate = true;
    }
  }
  return spectrum;
}

}  // namespace

Spectrum converge_spectrum(double alpha, int m, Parity parity, bool include_vc,
                           double tol, int n_start) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("converge_spectrum: tol must be positive");
  }
  if (n_start < 8 || n_start > kMaxTruncation) {
    throw std::invalid_argument(
        "converge_spectrum: n_start must lie in [8, 1024]");
  }

  Eigen::VectorXd prev;
  int n = n_start;
  while (true) {
    const ModeSpec spec{m, parity, n, include_vc};
    const OperatorPair pair = assemble_sector(alpha, spec);
    auto pairs = solve_pair(pair);
    const int low = std::min<int>(5, static_cast<int>(pairs.size()));
    Eigen::VectorXd lows(low);
    for (int i = 0; i < low; ++i) lows(i) = pairs[i].beta;

    if (prev.size() == lows.size() &&
        (lows - prev).cwiseAbs().maxCoeff() < tol) {
      return materialize(pair, true);
    }
    if (n >= kMaxTruncation) {
      return materialize(pair, false);
    }
    prev = lows;
    n = std::min(2 * n, kMaxTruncation);
  }
}

}  // namespace torusbound
