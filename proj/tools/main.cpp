#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "torusbound/cli.hpp"

namespace {

struct Flags {
  torusbound::RunConfig config;
  std::string parity = "even";
  bool no_curvature = false;
  bool as_json = false;
  bool as_csv = false;
};

void add_common(CLI::App* cmd, Flags& flags, bool needs_format_default_csv) {
  cmd->add_option("--alpha", flags.config.alpha,
                  "Aspect ratio a/R, in (0, 1)")->required();
  cmd->add_option("--n-basis", flags.config.n_basis,
                  "Fourier truncation (default 64)");
  cmd->add_option("--out", flags.config.out_path,
                  "Write the document to PATH instead of stdout");
  auto* json = cmd->add_flag("--json", flags.as_json, "Emit JSON");
  auto* csv = cmd->add_flag("--csv", flags.as_csv, "Emit CSV");
  json->excludes(csv);
  csv->excludes(json);
  if (needs_format_default_csv) {
    flags.config.format = torusbound::OutputFormat::csv;
  }
}

void add_sector(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--m", flags.config.m, "Azimuthal index (default 0)");
  cmd->add_option("--parity", flags.parity, "Sector parity (default even)")
      ->check(CLI::IsMember({"even", "odd"}));
  cmd->add_flag("--no-curvature", flags.no_curvature,
                "Drop the curvature potential (free particle)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Curvature-induced bound states of a particle confined to a torus"};
  app.require_subcommand(1);

  Flags flags;

  auto* spectrum = app.add_subcommand(
      "spectrum", "Eigenvalues and normalized states of one (m, parity) sector");
  add_common(spectrum, flags, false);
  add_sector(spectrum, flags);

  auto* scan = app.add_subcommand(
      "scan", "Bound states (beta < 0) across m = 0..m_max, both parities");
  add_common(scan, flags, false);
  scan->add_option("--m-max", flags.config.m_max,
                   "Largest azimuthal index to scan (default 6)");

  auto* wavefunction = app.add_subcommand(
      "wavefunction", "Sample one normalized angular state on [0, 2pi)");
  add_common(wavefunction, flags, true);
  add_sector(wavefunction, flags);
  wavefunction->add_option("--state", flags.config.state_index,
                           "State index within the sector (default 0)");
  wavefunction->add_option("--samples", flags.config.samples,
                           "Grid size, >= 16 (default 1024)");

  auto* curvature = app.add_subcommand(
      "curvature", "Principal/mean/Gaussian curvature and potential profile");
  add_common(curvature, flags, true);
  curvature->add_option("--samples", flags.config.samples,
                        "Grid size, >= 4 (default 360)");

  auto* verify = app.add_subcommand(
      "verify-tables", "Recompute the built-in reference spectra and report");
  verify->add_option("--out", flags.config.out_path,
                     "Write the report to PATH instead of stdout");
  auto* vjson = verify->add_flag("--json", flags.as_json, "Emit JSON");
  auto* vcsv = verify->add_flag("--csv", flags.as_csv, "Emit CSV");
  vjson->excludes(vcsv);
  vcsv->excludes(vjson);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : torusbound::kExitBadArgs;
  }

  if (spectrum->parsed()) flags.config.command = torusbound::Command::spectrum;
  if (scan->parsed()) flags.config.command = torusbound::Command::scan;
  if (wavefunction->parsed())
    flags.config.command = torusbound::Command::wavefunction;
  if (curvature->parsed()) flags.config.command = torusbound::Command::curvature;
  if (verify->parsed()) flags.config.command = torusbound::Command::verify_tables;

  flags.config.parity = flags.parity == "odd" ? torusbound::Parity::odd
                                              : torusbound::Parity::even;
  flags.config.include_vc = !flags.no_curvature;
  if (flags.as_json) flags.config.format = torusbound::OutputFormat::json;
  if (flags.as_csv) flags.config.format = torusbound::OutputFormat::csv;

  return torusbound::run(flags.config, std::cout, std::cerr);
}
