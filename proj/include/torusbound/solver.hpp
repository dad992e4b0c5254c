#pragma once

#include <stdexcept>
#include <vector>

#include "torusbound/assembly.hpp"

namespace torusbound {

// Raised when a decomposition fails, when the pencil spectrum is not real
// within tolerance (an assembly bug, never silently repaired), or when an
// eigenpair residual cannot be driven below tolerance.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EigenPair {
  double beta;
  Eigen::VectorXd coeffs;
};

// One normalized angular eigenstate. coeffs are the coefficients over
// {1, cos theta, ...} (even) or {sin theta, ...} (odd), scaled so that
//   int_0^{2pi} |psi|^2 alpha (1 + alpha cos theta) dtheta = 1
// (the R = 1 surface measure, azimuthal (2pi)^{-1/2} factor excluded) and
// signed so the leading coefficient is >= 0. norm_constant is that leading
// coefficient (for the free constant state it equals 1/sqrt(2 pi alpha)).
struct Eigenstate {
  double beta = 0.0;
  int m = 0;
  Parity parity = Parity::even;
  int n_index = 0;
  int degeneracy = 1;  // 2 for m > 0: the -m sector is identical
  Eigen::VectorXd coeffs;
  double norm_constant = 0.0;
  int node_count = 0;
  bool degenerate = false;  // beta within 1e-12 of a sector neighbour
};

struct Spectrum {
  double alpha = 0.0;
  int m = 0;
  Parity parity = Parity::even;
  bool include_vc = true;
  std::vector<Eigenstate> states;  // sorted ascending by beta
  int truncation_used = 0;
  bool converged = false;
};

inline constexpr double kEigenImagTol = 1e-8;
inline constexpr double kResidualTol = 1e-9;
inline constexpr int kMaxTruncation = 1024;
inline constexpr int kNodeSamples = 4096;

// All eigenpairs of A c = beta B c, sorted ascending. B is Cholesky-factored
// (B = L L^T) and the similar matrix L^{-1} A L^{-T} solved densely; the
// spectrum must be real to within kEigenImagTol * (1 + |beta|) per value.
std::vector<EigenPair> solve_pair(const OperatorPair& pair);

// psi(theta) for a coefficient vector over the sector basis.
double evaluate_series(const Eigen::VectorXd& coeffs, Parity parity,
                       double theta);

// Sign changes of psi over [0, 2pi), counted cyclically on a uniform grid.
int count_nodes(const Eigen::VectorXd& coeffs, Parity parity,
                int samples = kNodeSamples);

// Scales/signs a raw coefficient vector into a normalized Eigenstate.
// Projective: any positive multiple of coeffs yields the same state.
// Throws std::invalid_argument on a zero vector.
Eigenstate normalize_state(const Eigen::VectorXd& coeffs, double alpha,
                           Parity parity, int m = 0, int n_index = 0);

// ||A c - beta B c|| / ||B c||.
double pencil_residual(const OperatorPair& pair, double beta,
                       const Eigen::VectorXd& coeffs);

// Doubles the truncation from n_start until the lowest five betas move by
// less than tol between successive sizes, capping at kMaxTruncation (the
// cap is reported as converged = false). Returns the final solve with all
// states normalized, labeled and residual-checked.
Spectrum converge_spectrum(double alpha, int m, Parity parity, bool include_vc,
                           double tol = 1e-8, int n_start = 16);

}  // namespace torusbound
