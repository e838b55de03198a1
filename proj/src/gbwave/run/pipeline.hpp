#pragma once

#include "gbwave/run/manifest.hpp"

namespace gbwave {

/// Everything a run produced, besides the files on disk.
struct RunResult {
  RunManifest manifest;
  bool resumed = false;

  std::vector<ErrorRecord> records;  // error-table runs

  struct BetaRow {
    double t;
    double k_lo, k_hi;
    double beta;
  };
  std::vector<BetaRow> betas;  // sup-norm growth runs

  struct OracleRow {
    double k;
    double value;            // numerically computed norm
    double closed_rel_diff;  // |numeric/closed - 1| where a closed form exists
  };
  std::vector<OracleRow> oracle_rows;
  double fitted_slope = std::numeric_limits<double>::quiet_NaN();
};

/// Execute the configured experiment, write CSV/JSON tables plus the
/// manifest into cfg.output_dir, and return the in-memory results.
/// A completed manifest with a matching config hash short-circuits the run
/// unless force is set. On quadrature failure, partial results are persisted
/// with a failure marker before the exception propagates.
RunResult run(const ExperimentConfig& cfg, bool force = false);

}  // namespace gbwave
