#include "torusbound/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace torusbound {

namespace {

// Zero-band guard: at a magic ratio the would-be bound state sits at
// beta = 0 exactly and must not be counted as bound.
constexpr double kBoundStateTol = 1e-9;
constexpr int kScanStartBasis = 64;

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

struct BoundRow {
  double alpha;
  int m;
  double beta;
  std::vector<double> series;  // leading coefficients as published
};

struct FreeRow {
  double alpha;
  int m;
  double beta;
  double beta_tol;
  std::vector<double> series;
  bool disputed;  // reference row suspected of a typo
};

// Reference bound spectra (curvature potential on); all even parity.
const std::vector<BoundRow>& bound_rows() {
  static const std::vector<BoundRow> rows = {
      {0.75, 0, -1.0725, {4.6072, -5.2143, 2.2465, -0.9495}},
      {0.50, 0, -0.3512, {2.4509, -0.9015, 0.1921}},
      {0.25, 0, -0.2673, {2.1458, -0.2916, 0.0280}},
      {0.25, 1, -0.1987, {2.1069, -0.2138, 0.0197}},
      {0.05, 0, -0.2506, {2.0254, -0.0508}},
      {0.05, 1, -0.2481, {2.0251, -0.0507}},
      {0.05, 2, -0.2406, {2.0244, -0.0487}},
  };
  return rows;
}

// Reference free spectra (potential off). The constant ground state exists
// for every alpha with norm constant 1/sqrt(2 pi alpha).
const std::vector<std::pair<double, double>>& free_norm_rows() {
  static const std::vector<std::pair<double, double>> rows = {
      {0.75, 0.4607}, {0.50, 0.5642}, {0.25, 0.7979}, {0.05, 1.7841}};
  return rows;
}

const std::vector<FreeRow>& free_rows() {
  static const std::vector<FreeRow> rows = {
      {0.25, 1, 0.0641, 2e-3, {1.9676, 0.0648}, false},
      {0.05, 1, 0.0025, 5e-4, {1.9998, 0.0005}, false},
      // Published beta 0.0010 is inconsistent with the free spectrum, which
      // forces beta ~ (m alpha)^2 = 0.0100; kept as a disputed row.
      {0.05, 2, 0.0010, 5e-4, {1.9996, 0.0002}, true},
  };
  return rows;
}

TableTarget make_target(std::string name, double reference, double computed,
                        double tolerance, TargetKind kind = TargetKind::required,
                        std::string note = {}) {
  TableTarget t;
  t.name = std::move(name);
  t.reference = reference;
  t.computed = computed;
  t.tolerance = tolerance;
  t.kind = kind;
  t.note = std::move(note);
  t.pass = std::abs(computed - reference) <= tolerance;
  if (kind == TargetKind::info) t.pass = true;
  return t;
}

void add_ratio_targets(TableDiffReport& report, const std::string& prefix,
                       const Eigenstate& state, const std::vector<double>& series,
                       TargetKind kind) {
  for (std::size_t j = 1; j < series.size(); ++j) {
    const double ref_ratio = series[j] / series[0];
    const double computed = state.coeffs(static_cast<Eigen::Index>(j)) /
                            state.coeffs(0);
    report.targets.push_back(make_target(
        prefix + " coeff ratio c" + std::to_string(j) + "/c0", ref_ratio,
        computed, 2e-2 * std::abs(ref_ratio), kind, "relative 2e-2"));
  }
}

}  // namespace

bool TableDiffReport::all_required_pass() const { return failed_required() == 0; }

int TableDiffReport::failed_required() const {
  int failed = 0;
  for (const auto& t : targets) {
    if (t.kind == TargetKind::required && !t.pass) ++failed;
  }
  return failed;
}

BoundStateTable bound_state_scan(double alpha, int m_max) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("bound_state_scan: alpha must lie in (0, 1)");
  }
  if (m_max < 0) {
    throw std::invalid_argument("bound_state_scan: m_max must be >= 0");
  }

  BoundStateTable table;
  table.alpha = alpha;
  table.m_max = m_max;
  for (int m = 0; m <= m_max; ++m) {
    for (Parity parity : {Parity::even, Parity::odd}) {
      Spectrum spectrum =
          converge_spectrum(alpha, m, parity, true, 1e-8, kScanStartBasis);
      for (const Eigenstate& state : spectrum.states) {
        if (state.beta < -kBoundStateTol) {
          table.entries.push_back(state);
        } else {
          break;  // states are sorted ascending
        }
      }
    }
  }
  std::sort(table.entries.begin(), table.entries.end(),
            [](const Eigenstate& x, const Eigenstate& y) {
              return x.m != y.m ? x.m < y.m : x.beta < y.beta;
            });
  table.total_count_sectors = static_cast<int>(table.entries.size());
  table.total_count_with_degeneracy = 0;
  for (const auto& e : table.entries) {
    table.total_count_with_degeneracy += e.degeneracy;
  }
  return table;
}

int cutoff_m(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("cutoff_m: alpha must lie in (0, 1)");
  }
  const double threshold = 1.0 / (2.0 * alpha);
  const int cutoff = static_cast<int>(std::ceil(threshold)) - 1;
  return std::max(0, cutoff);
}

TableDiffReport magic_radius_check(int m) {
  if (m < 1) {
    throw std::invalid_argument("magic_radius_check: m must be >= 1");
  }
  const double alpha = 1.0 / (2.0 * m);
  const FullOperatorPair constrained = assemble_full(alpha, m, 64, true);
  const FullOperatorPair free_pair = assemble_full(alpha, 0, 64, false);

  TableDiffReport report;
  const std::string prefix = "magic m=" + std::to_string(m);
  report.targets.push_back(make_target(
      prefix + " max|A_constrained - A_free|", 0.0,
      (constrained.a - free_pair.a).cwiseAbs().maxCoeff(), 0.0,
      TargetKind::required, "entry-by-entry identity"));
  report.targets.push_back(make_target(
      prefix + " max|B_constrained - B_free|", 0.0,
      (constrained.b - free_pair.b).cwiseAbs().maxCoeff(), 0.0,
      TargetKind::required, "entry-by-entry identity"));

  double worst = 0.0;
  for (Parity parity : {Parity::even, Parity::odd}) {
    const auto betas_c = solve_pair(parity_project(constrained, parity));
    const auto betas_f = solve_pair(parity_project(free_pair, parity));
    for (std::size_t i = 0; i < betas_c.size(); ++i) {
      worst = std::max(worst, std::abs(betas_c[i].beta - betas_f[i].beta));
    }
  }
  report.targets.push_back(make_target(prefix + " max spectral gap", 0.0,
                                       worst, 1e-12));
  return report;
}

TableDiffReport reproduce_tables() {
  TableDiffReport report;

  for (const BoundRow& row : bound_rows()) {
    Spectrum spectrum =
        converge_spectrum(row.alpha, row.m, Parity::even, true, 1e-8, 64);
    const Eigenstate& ground = spectrum.states.front();
    const std::string prefix =
        "bound alpha=" + fmt("%.2f", row.alpha) + " m=" + std::to_string(row.m);
    report.targets.push_back(
        make_target(prefix + " beta", row.beta, ground.beta, 2e-3));
    add_ratio_targets(report, prefix, ground, row.series, TargetKind::required);
  }

  for (const auto& [alpha, norm_ref] : free_norm_rows()) {
    Spectrum spectrum = converge_spectrum(alpha, 0, Parity::even, false, 1e-8, 64);
    const auto& states = spectrum.states;
    const auto ground = std::min_element(
        states.begin(), states.end(), [](const auto& x, const auto& y) {
          return std::abs(x.beta) < std::abs(y.beta);
        });
    const std::string prefix = "free alpha=" + fmt("%.2f", alpha);
    report.targets.push_back(
        make_target(prefix + " ground beta", 0.0, ground->beta, 1e-9));
    report.targets.push_back(make_target(prefix + " constant norm", norm_ref,
                                         ground->norm_constant, 1e-3));
    // The constant state is the comparator the reference tables altered by
    // the potential; the lowest nonconstant state is the alternative choice.
    report.targets.push_back(make_target(
        prefix + " comparator: constant state beta", ground->beta,
        ground->beta, 0.0, TargetKind::info, "comparator used by the tables"));
    for (const auto& state : states) {
      if (state.beta > 1e-6) {
        report.targets.push_back(make_target(
            prefix + " comparator: lowest nonconstant beta", state.beta,
            state.beta, 0.0, TargetKind::info, "alternative comparator"));
        break;
      }
    }
  }

  for (const FreeRow& row : free_rows()) {
    Spectrum spectrum =
        converge_spectrum(row.alpha, row.m, Parity::even, false, 1e-8, 64);
    const Eigenstate& ground = spectrum.states.front();
    const std::string prefix =
        "free alpha=" + fmt("%.2f", row.alpha) + " m=" + std::to_string(row.m);
    if (row.disputed) {
      const double ma = row.m * row.alpha;
      report.targets.push_back(make_target(
          prefix + " beta (oracle m^2 alpha^2)", ma * ma, ground.beta,
          row.beta_tol, TargetKind::required,
          "independent target; published value disputed"));
      report.targets.push_back(make_target(
          prefix + " beta (published)", row.beta, ground.beta, row.beta_tol,
          TargetKind::disputed, "suspected typo, see oracle target"));
      add_ratio_targets(report, prefix, ground, row.series, TargetKind::disputed);
    } else {
      report.targets.push_back(
          make_target(prefix + " beta", row.beta, ground.beta, row.beta_tol));
      add_ratio_targets(report, prefix, ground, row.series, TargetKind::required);
    }
  }

  return report;
}

}  // namespace torusbound
