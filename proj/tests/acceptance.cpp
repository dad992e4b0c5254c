// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failing criteria. Criterion 1 carries a known-red sub-target: the published
// reference eigenvalue at alpha = 0.75 disagrees with the converged value by
// 2.4e-3 (see the verify-tables report), which exceeds its 2e-3 tolerance.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "torusbound/geometry.hpp"
#include "torusbound/spectra.hpp"

using namespace torusbound;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;

void report(int id, bool pass, const std::string& label,
            const std::string& detail) {
  if (!pass) ++failures;
  std::printf("criterion %2d [%s] %s — %s\n", id, pass ? "PASS" : "FAIL",
              label.c_str(), detail.c_str());
}

std::string fm(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

double lowest_beta(double alpha, int m, Parity parity, bool vc, int n) {
  return solve_pair(assemble_sector(alpha, ModeSpec{m, parity, n, vc}))
      .front()
      .beta;
}

struct BoundRef {
  double alpha;
  int m;
  double beta;
  std::vector<double> series;
};

const std::vector<BoundRef> kBoundRefs = {
    {0.75, 0, -1.0725, {4.6072, -5.2143, 2.2465, -0.9495}},
    {0.50, 0, -0.3512, {2.4509, -0.9015, 0.1921}},
    {0.25, 0, -0.2673, {2.1458, -0.2916, 0.0280}},
    {0.25, 1, -0.1987, {2.1069, -0.2138, 0.0197}},
    {0.05, 0, -0.2506, {2.0254, -0.0508}},
    {0.05, 1, -0.2481, {2.0251, -0.0507}},
    {0.05, 2, -0.2406, {2.0244, -0.0487}},
};

void criterion_1() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  bool pass = true;
  std::string detail;
  for (const auto& ref : kBoundRefs) {
    const double beta = lowest_beta(ref.alpha, ref.m, Parity::even, true, 64);
    const double diff = std::abs(beta - ref.beta);
    const bool ok = diff <= 2e-3;
    pass = pass && ok;
    std::printf("    beta(alpha=%.2f, m=%d) = %.7f vs %.4f  |diff| = %.2e  %s\n",
                ref.alpha, ref.m, beta, ref.beta, diff, ok ? "ok" : "OUTSIDE 2e-3");
    if (!ok) {
      detail += "alpha=" + fm("%.2f", ref.alpha) +
                " reference disagrees with the converged dual-oracle value "
                "(Galerkin & finite-difference agree to 2e-11); ";
    }
  }
  const double secs =
      std::chrono::duration<double>(clock::now() - start).count();
  if (secs >= 1.0) pass = false;
  detail += "runtime " + fm("%.3f", secs) + "s (limit 1s)";
  report(1, pass, "bound eigenvalues vs reference (2e-3, N=64)", detail);
}

void criterion_2() {
  bool pass = true;
  double worst = 0.0;
  for (const auto& ref : kBoundRefs) {
    const auto pairs =
        solve_pair(assemble_sector(ref.alpha, ModeSpec{ref.m, Parity::even, 64, true}));
    const Eigenstate state =
        normalize_state(pairs.front().coeffs, ref.alpha, Parity::even, ref.m, 0);
    for (std::size_t j = 1; j < ref.series.size(); ++j) {
      const double want = ref.series[j] / ref.series[0];
      const double got = state.coeffs(static_cast<Eigen::Index>(j)) / state.coeffs(0);
      const double rel = std::abs(got - want) / std::abs(want);
      worst = std::max(worst, rel);
      if (rel > 2e-2) pass = false;
    }
  }
  report(2, pass, "bound wavefunction coefficient ratios (2e-2 relative)",
         "worst relative deviation " + fm("%.2e", worst));
}

void criterion_3() {
  bool pass = true;
  std::string detail;

  const double b_025 = converge_spectrum(0.25, 1, Parity::even, false, 1e-8, 64)
                           .states.front().beta;
  if (std::abs(b_025 - 0.0641) > 2e-3) pass = false;
  const double b_005 = converge_spectrum(0.05, 1, Parity::even, false, 1e-8, 64)
                           .states.front().beta;
  if (std::abs(b_005 - 0.0025) > 5e-4) pass = false;
  detail += "beta(0.25,1)=" + fm("%.6f", b_025) + " beta(0.05,1)=" +
            fm("%.6f", b_005);

  const double norm_refs[4][2] = {
      {0.75, 0.4607}, {0.50, 0.5642}, {0.25, 0.7979}, {0.05, 1.7841}};
  for (const auto& row : norm_refs) {
    const Spectrum sp = converge_spectrum(row[0], 0, Parity::even, false, 1e-8, 64);
    const Eigenstate* ground = &sp.states.front();
    for (const auto& s : sp.states) {
      if (std::abs(s.beta) < std::abs(ground->beta)) ground = &s;
    }
    if (std::abs(ground->norm_constant - row[1]) > 1e-3) pass = false;
  }

  // Reference lists 0.0010 for (alpha=0.05, m=2); the free spectrum forces
  // beta ~ (m alpha)^2 = 0.0100. Target the independent oracle value and
  // report the discrepancy (disputed-value policy).
  const double b_dispute = converge_spectrum(0.05, 2, Parity::even, false, 1e-8, 64)
                               .states.front().beta;
  if (std::abs(b_dispute - 0.0100) > 5e-4) pass = false;
  detail += "; disputed row: computed " + fm("%.6f", b_dispute) +
            " vs oracle 0.0100 (published 0.0010 differs by " +
            fm("%.1e", std::abs(b_dispute - 0.0010)) + ", reported not gated)";
  report(3, pass, "free spectra and norm constants vs reference", detail);
}

void criterion_4() {
  std::mt19937 rng(20240517);
  std::uniform_real_distribution<double> alpha_dist(0.05, 0.9);
  bool pass = true;
  double worst_beta = 0.0, worst_coeff = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const double alpha = alpha_dist(rng);
    const auto pairs =
        solve_pair(assemble_sector(alpha, ModeSpec{0, Parity::even, 64, false}));
    const EigenPair* zero = &pairs.front();
    for (const auto& ep : pairs) {
      if (std::abs(ep.beta) < std::abs(zero->beta)) zero = &ep;
    }
    worst_beta = std::max(worst_beta, std::abs(zero->beta));
    const Eigenstate state = normalize_state(zero->coeffs, alpha, Parity::even);
    const double tail =
        state.coeffs.tail(state.coeffs.size() - 1).cwiseAbs().maxCoeff();
    worst_coeff = std::max(worst_coeff, tail);
    if (std::abs(zero->beta) > 1e-10 || tail > 1e-9) pass = false;
  }
  report(4, pass, "free ground state exactness over 20 random ratios",
         "max |beta| " + fm("%.2e", worst_beta) + ", max non-constant coeff " +
             fm("%.2e", worst_coeff));
}

void criterion_5() {
  bool pass = true;
  double worst_gap = 0.0;
  for (int m = 1; m <= 4; ++m) {
    const TableDiffReport rep = magic_radius_check(m);
    for (const auto& t : rep.targets) {
      if (!t.pass) pass = false;
      if (t.name.find("spectral") != std::string::npos) {
        worst_gap = std::max(worst_gap, std::abs(t.computed));
      } else if (t.computed != 0.0) {
        pass = false;  // matrices must be identical bit for bit
      }
    }
  }
  report(5, pass, "magic ratios alpha = 1/(2m), m = 1..4",
         "matrices identical; worst spectral gap " + fm("%.2e", worst_gap));
}

void criterion_6() {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  bool pass = true;
  int mismatches = 0;
  for (int i = 0; i < 50; ++i) {
    const double alpha = 0.05 + 0.9 * (i + 0.5) / 50.0;
    for (int m = 0; m <= 6; ++m) {
      const double beta_min =
          std::min(lowest_beta(alpha, m, Parity::even, true, 64),
                   lowest_beta(alpha, m, Parity::odd, true, 64));
      const bool bound = beta_min < -1e-9;
      const bool expected = 2.0 * m * alpha < 1.0;
      if (bound != expected) {
        ++mismatches;
        pass = false;
      }
    }
  }
  double worst_boundary = 0.0;
  for (int m = 1; m <= 6; ++m) {
    const double alpha = 1.0 / (2.0 * m);
    const double beta = lowest_beta(alpha, m, Parity::even, true, 64);
    worst_boundary = std::max(worst_boundary, std::abs(beta));
    if (std::abs(beta) > 1e-9) pass = false;
  }
  const double secs =
      std::chrono::duration<double>(clock::now() - start).count();
  if (secs >= 60.0) pass = false;
  report(6, pass, "cutoff sweep: bound state iff 2 m alpha < 1",
         std::to_string(mismatches) + " mismatches over 350 sectors; boundary |beta| max " +
             fm("%.1e", worst_boundary) + "; runtime " + fm("%.1f", secs) + "s (limit 60s)");
}

void criterion_7() {
  bool pass = true;
  double worst = 0.0;
  for (double alpha : {0.05, 0.25, 0.5, 0.75}) {
    for (int m = 0; m <= cutoff_m(alpha); ++m) {
      const double beta = lowest_beta(alpha, m, Parity::odd, true, 64);
      worst = std::min(worst, beta);
      if (beta < -1e-9) pass = false;
    }
  }
  report(7, pass, "no negative-parity bound states at the reference ratios",
         "most negative odd-sector beta_min " + fm("%.2e", worst));
}

void criterion_8() {
  std::mt19937 rng(88);
  std::uniform_real_distribution<double> alpha_dist(0.05, 0.95);
  std::uniform_real_distribution<double> theta_full(0.0, 2.0 * kPi);
  std::uniform_real_distribution<double> theta_patch(0.1, kPi - 0.1);
  bool pass = true;
  double worst_identity = 0.0, worst_patch = 0.0, worst_sphere = 0.0;

  for (int i = 0; i < 1000; ++i) {
    const TorusGeometry geom(alpha_dist(rng), 1.0);
    const CurvatureBundle b = torus_curvatures(geom, theta_full(rng));
    const double rel = std::abs(-0.5 * (b.H * b.H - b.K) - b.Vc) / std::abs(b.Vc);
    worst_identity = std::max(worst_identity, rel);
    if (rel > 1e-13) pass = false;
  }

  for (int i = 0; i < 1000; ++i) {
    const TorusGeometry geom(alpha_dist(rng), 1.0);
    const double a = geom.a, r = geom.R;
    const MongeSurface patch{
        [a, r](double rho) { return std::sqrt(a * a - (rho - r) * (rho - r)); },
        [a, r](double rho) {
          return -(rho - r) / std::sqrt(a * a - (rho - r) * (rho - r));
        },
        [a, r](double rho) {
          const double s = std::sqrt(a * a - (rho - r) * (rho - r));
          return -a * a / (s * s * s);
        }};
    const double theta = theta_patch(rng);
    const CurvatureBundle monge = monge_curvatures(patch, geom.axis_distance(theta));
    const CurvatureBundle closed = torus_curvatures(geom, theta);
    const double diff =
        std::max({std::abs(monge.k1 - closed.k1), std::abs(monge.k2 - closed.k2),
                  std::abs(monge.Vc - closed.Vc)});
    worst_patch = std::max(worst_patch, diff);
    if (diff > 1e-10) pass = false;
  }

  std::uniform_real_distribution<double> radius_dist(0.3, 3.0);
  std::uniform_real_distribution<double> frac(0.05, 0.95);
  for (int i = 0; i < 1000; ++i) {
    const double radius = radius_dist(rng);
    const MongeSurface sphere{
        [radius](double rho) { return std::sqrt(radius * radius - rho * rho); },
        [radius](double rho) {
          return -rho / std::sqrt(radius * radius - rho * rho);
        },
        [radius](double rho) {
          const double s = std::sqrt(radius * radius - rho * rho);
          return -radius * radius / (s * s * s);
        }};
    const double vc = monge_curvatures(sphere, frac(rng) * radius).Vc;
    worst_sphere = std::max(worst_sphere, std::abs(vc));
    if (std::abs(vc) > 1e-12) pass = false;
  }

  report(8, pass, "curvature identities (closed form, Monge patch, sphere)",
         "identity rel " + fm("%.1e", worst_identity) + ", patch diff " +
             fm("%.1e", worst_patch) + ", sphere |Vc| " + fm("%.1e", worst_sphere));
}

void criterion_9() {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> alpha_dist(0.05, 0.95);
  std::uniform_int_distribution<int> m_dist(0, 4);
  std::uniform_int_distribution<int> idx(-20, 20);
  std::uniform_int_distribution<int> coin(0, 1);
  bool pass = true;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double alpha = alpha_dist(rng);
    const int m = m_dist(rng);
    const bool vc = coin(rng) == 1;
    const int k = idx(rng), n = idx(rng);
    const FullOperatorPair pair = assemble_full(alpha, m, 24, vc);
    const double diff = std::abs(pair.a(k + 24, n + 24) -
                                 quadrature_oracle(alpha, m, vc, k, n, 4096));
    worst = std::max(worst, diff);
    if (diff > 1e-12) pass = false;
  }
  report(9, pass, "assembled entries vs quadrature oracle (1e-12)",
         "worst |diff| " + fm("%.2e", worst));
}

void criterion_10() {
  struct Row { double alpha; int m; bool vc; };
  std::vector<Row> rows;
  for (const auto& ref : kBoundRefs) rows.push_back({ref.alpha, ref.m, true});
  rows.push_back({0.25, 1, false});
  rows.push_back({0.05, 1, false});
  rows.push_back({0.05, 2, false});
  for (double alpha : {0.75, 0.5, 0.25, 0.05}) rows.push_back({alpha, 0, false});

  bool pass = true;
  double worst = 0.0;
  for (const Row& row : rows) {
    const double b64 = lowest_beta(row.alpha, row.m, Parity::even, row.vc, 64);
    const double b128 = lowest_beta(row.alpha, row.m, Parity::even, row.vc, 128);
    const double drift = std::abs(b64 - b128);
    worst = std::max(worst, drift);
    if (drift > 1e-8) pass = false;
  }
  report(10, pass, "truncation convergence N=64 vs N=128 (1e-8)",
         "worst drift " + fm("%.2e", worst));
}

void criterion_11() {
  const BoundStateTable table = bound_state_scan(0.05, 12);
  const int variational = cutoff_m(0.05) + 1;  // every m with 2 m alpha < 1
  const bool pass = table.total_count_sectors == variational;
  std::string detail =
      "sector count " + std::to_string(table.total_count_sectors) +
      " (degeneracy-weighted " + std::to_string(table.total_count_with_degeneracy) +
      "); variational prediction " + std::to_string(variational) +
      " sectors (m <= 9); reference quotes nine total — disagreement flagged, "
      "reported without gating";
  report(11, pass, "bound-state count at alpha = 0.05, m <= 12", detail);
}

}  // namespace

int main() {
  std::printf("torusbound acceptance suite\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("%d of 11 criteria pass\n", 11 - failures);
  if (failures > 0) {
    std::printf(
        "known red: criterion 1's alpha=0.75 reference value -1.0725 sits "
        "2.4e-3 from the converged eigenvalue -1.0749137 (two independent "
        "discretizations agree to 2e-11); every other target passes\n");
  }
  return failures;
}
