#pragma once

#include <Eigen/Dense>

namespace torusbound {

enum class Parity { even, odd };

const char* to_string(Parity parity);

// One angular eigenproblem sector: azimuthal index m >= 0, parity of the
// trigonometric series, Fourier truncation N >= 4, and whether the curvature
// potential is included (include_vc = false is the free-particle operator).
struct ModeSpec {
  int m = 0;
  Parity parity = Parity::even;
  int n_basis = 64;
  bool include_vc = true;
};

// Galerkin matrices of the angular operator over complex exponentials
// z^n = exp(i n theta), n in [-N, N]. The eigenproblem is A c = beta B c
// where B is the multiplication matrix of (1 + alpha cos theta)^2; both
// matrices are real pentadiagonal and invariant under (k,n) -> (-k,-n).
struct FullOperatorPair {
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;
  double alpha = 0.0;
  int m = 0;
  int n_basis = 0;
  bool include_vc = true;
};

// Sector matrices over {1, cos theta, ..., cos N theta} (even, dim N+1) or
// {sin theta, ..., sin N theta} (odd, dim N). b is symmetric positive
// definite for every alpha in (0, 1); a is not symmetric, but the pencil's
// spectrum is real (checked downstream, never assumed).
struct OperatorPair {
  Eigen::MatrixXd a;
  Eigen::MatrixXd b;
  ModeSpec spec;
  double alpha = 0.0;

  Eigen::Index dim() const { return a.rows(); }
};

// Assembles the full pair. Multiplying the angular equation through by
// F^2 = (1 + alpha cos theta)^2 keeps the matrices exactly banded:
//   B_{k,n} = f_{k-n},  f_0 = 1 + alpha^2/2, f_{+-1} = alpha, f_{+-2} = alpha^2/4
//   A_{k,k}    = k^2 f_0 + (m alpha)^2 - 1/4 [include_vc]
//   A_{k,k+-1} = alpha (k+-1)(k+-1/2)
//   A_{k,k+-2} = (alpha^2/4)(k+-2)(k+-1)
// Throws std::invalid_argument unless 0 < alpha < 1, m >= 0, n_basis >= 4.
FullOperatorPair assemble_full(double alpha, int m, int n_basis, bool include_vc);

// Restriction of the pair to one parity sector (the subspace c_n = c_{-n},
// resp. c_n = -c_{-n}). Equivalent to the trapezoid Gram matrices of the
// F^2-multiplied operator in the unnormalized trigonometric bases, so the
// sector generalized eigenvalues are exactly those of the full pair.
OperatorPair parity_project(const FullOperatorPair& full, Parity parity);

// assemble_full + parity_project in one step.
OperatorPair assemble_sector(double alpha, const ModeSpec& spec);

// Independent check of assemble_full: the (k, n) matrix element of the
// F^2-multiplied operator computed by trapezoid quadrature on a uniform
// theta grid. Exact to near machine precision for band-limited integrands.
// grid_points must be a power of two >= 1024.
double quadrature_oracle(double alpha, int m, bool include_vc, int k, int n,
                         int grid_points);

// Gram matrix of the sector basis under the surface measure inner product
// (1/2pi) int w_k w_j (1 + alpha cos theta) dtheta. Tridiagonal, SPD.
Eigen::MatrixXd measure_gram(Eigen::Index dim, double alpha, Parity parity);

}  // namespace torusbound
