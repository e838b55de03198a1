// Command-line front end: run experiments from config files or shipped
// presets, verify module invariants, and emit the convergence tables.

#include <omp.h>

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "gbwave/run/checks.hpp"
#include "gbwave/run/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNonConverged = 2;
constexpr int kExitConfigError = 3;

void apply_overrides(gbwave::ExperimentConfig& cfg, const std::string& outdir) {
  if (!outdir.empty()) cfg.output_dir = outdir;
}

void print_run_summary(const gbwave::RunResult& res) {
  if (res.resumed) {
    std::cout << "up to date (manifest matches); use --force to rerun\n";
    return;
  }
  for (const auto& out : res.manifest.outputs) std::cout << "wrote " << out << "\n";
  if (!std::isnan(res.fitted_slope))
    std::cout << "fitted slope: " << gbwave::format_double(res.fitted_slope)
              << "\n";
}

void print_table_files(const gbwave::ExperimentConfig& cfg,
                       const gbwave::RunResult& res) {
  (void)cfg;
  for (const auto& out : res.manifest.outputs)
    if (out.size() > 4 && out.substr(out.size() - 4) == ".csv") {
      std::ifstream is(out);
      std::cout << "== " << out << "\n" << is.rdbuf() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian beam superpositions for the constant-speed acoustic "
               "wave equation: experiments, references, convergence tables"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global flags after the subcommand too

  int threads = 0;
  bool force = false;
  std::string outdir;
  app.add_option("--threads", threads, "OpenMP thread count (0 = default)");
  app.add_flag("--force", force, "rerun even if the manifest is up to date");
  app.add_option("--output-dir", outdir, "override the output directory");

  std::string config_path, suite = "all", preset_name;
  auto* run_cmd = app.add_subcommand("run", "run an experiment config file");
  run_cmd->add_option("config", config_path, "config file")->required();

  auto* verify_cmd =
      app.add_subcommand("verify", "run module invariant suites");
  verify_cmd->add_option("suite", suite,
                         "beam-core | quadrature | spectral | examples | all");

  auto* table_cmd = app.add_subcommand("table", "run a preset and print its tables");
  table_cmd->add_option("preset", preset_name, "preset name")->required();

  auto* rates_cmd =
      app.add_subcommand("rates", "run a preset and print rate summaries");
  rates_cmd->add_option("preset", preset_name, "preset name")->required();

  CLI11_PARSE(app, argc, argv);
  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (run_cmd->parsed()) {
      gbwave::ExperimentConfig cfg = gbwave::parse_config_file(config_path);
      apply_overrides(cfg, outdir);
      const auto res = gbwave::run(cfg, force);
      print_run_summary(res);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const auto rep = gbwave::verify(suite);
      bool ok = true;
      for (const auto& c : rep.checks) {
        std::printf("%-55s  tol %-9.3g  got %-12.4g  %s\n", c.name.c_str(),
                    c.tolerance, c.observed, c.pass ? "pass" : "FAIL");
        ok = ok && c.pass;
      }
      std::printf("%zu checks, %s\n", rep.checks.size(),
                  ok ? "all passed" : "FAILURES present");
      return ok ? kExitOk : 1;
    }
    if (table_cmd->parsed() || rates_cmd->parsed()) {
      gbwave::ExperimentConfig cfg = gbwave::preset(preset_name);
      apply_overrides(cfg, outdir);
      const auto res = gbwave::run(cfg, force);
      print_run_summary(res);
      if (table_cmd->parsed()) print_table_files(cfg, res);
      if (rates_cmd->parsed()) {
        for (const auto& b : res.betas)
          std::printf("beta(t=%g) [k %g -> %g] = %.4f\n", b.t, b.k_lo, b.k_hi,
                      b.beta);
        for (const auto& r : res.oracle_rows)
          std::printf("k=%-6g value=%-14.8g closed-form rel diff=%.3g\n", r.k,
                      r.value, r.closed_rel_diff);
        if (!std::isnan(res.fitted_slope))
          std::printf("fitted slope: %.4f\n", res.fitted_slope);
      }
      return kExitOk;
    }
  } catch (const gbwave::NonConverged& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonConverged;
  } catch (const gbwave::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
