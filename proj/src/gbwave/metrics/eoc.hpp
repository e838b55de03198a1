#pragma once

#include <iosfwd>
#include <optional>

#include "gbwave/common.hpp"

namespace gbwave {

enum class NormKind { energy, linf, l2, point };
enum class DenominatorKind { u_gb_at_t, u_at_0, ugb_energy, absolute };

const char* to_string(NormKind k);
const char* to_string(DenominatorKind k);
NormKind norm_kind_from_string(const std::string& s);
DenominatorKind denominator_kind_from_string(const std::string& s);

/// One measured error. The denominator convention is recorded explicitly
/// because the shipped tables use different ones; rows with mixed conventions
/// must never be combined into one table.
struct ErrorRecord {
  double t = 0;
  double k = 0;
  NormKind norm_kind = NormKind::energy;
  DenominatorKind denominator_kind = DenominatorKind::absolute;
  double error = 0;
};

/// Experimental order of convergence log2(e_k / e_2k).
double eoc(double e_k, double e_2k);

/// Least-squares slope of log(value) vs log(k). For two samples this reduces
/// to the two-frequency log2 ratio (equal to -eoc when the values are errors).
double rate_fit(const std::vector<std::pair<double, double>>& samples);

/// Rows grouped by t with per-k order entries, mirroring the table layout
/// t | err(k1) | err(k2) ord(k2) | err(k3) ord(k3) | ...
struct EocTable {
  std::vector<double> k_values;
  NormKind norm_kind = NormKind::energy;
  DenominatorKind denominator_kind = DenominatorKind::absolute;

  struct Row {
    double t;
    std::vector<double> errors;               // one per k
    std::vector<std::optional<double>> orders;  // orders[0] unused
  };
  std::vector<Row> rows;

  /// Assemble from records; every (t,k) cell must be present exactly once and
  /// all records must share the norm and denominator conventions.
  static EocTable assemble(const std::vector<ErrorRecord>& records);

  void write_csv(std::ostream& os) const;
  std::string to_json() const;
};

/// Deterministic shortest-roundtrip formatting used in all emitted files.
std::string format_double(double v);

}  // namespace gbwave
