#include "gbwave/metrics/eoc.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace gbwave {

const char* to_string(NormKind k) {
  switch (k) {
    case NormKind::energy: return "energy";
    case NormKind::linf: return "linf";
    case NormKind::l2: return "l2";
    case NormKind::point: return "point";
  }
  return "?";
}

const char* to_string(DenominatorKind k) {
  switch (k) {
    case DenominatorKind::u_gb_at_t: return "u_gb_at_t";
    case DenominatorKind::u_at_0: return "u_at_0";
    case DenominatorKind::ugb_energy: return "ugb_energy";
    case DenominatorKind::absolute: return "absolute";
  }
  return "?";
}

NormKind norm_kind_from_string(const std::string& s) {
  if (s == "energy") return NormKind::energy;
  if (s == "linf") return NormKind::linf;
  if (s == "l2") return NormKind::l2;
  if (s == "point") return NormKind::point;
  throw ConfigError("unknown norm kind: " + s);
}

DenominatorKind denominator_kind_from_string(const std::string& s) {
  if (s == "u_gb_at_t") return DenominatorKind::u_gb_at_t;
  if (s == "u_at_0") return DenominatorKind::u_at_0;
  if (s == "ugb_energy") return DenominatorKind::ugb_energy;
  if (s == "absolute") return DenominatorKind::absolute;
  throw ConfigError("unknown denominator kind: " + s);
}

double eoc(double e_k, double e_2k) {
  if (!(e_k > 0) || !(e_2k > 0))
    throw std::invalid_argument("eoc: errors must be positive");
  return std::log2(e_k / e_2k);
}

double rate_fit(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("rate_fit: need at least 2 samples");
  double sx = 0, sy = 0;
  for (const auto& [k, v] : samples) {
    if (!(k > 0) || !(v > 0))
      throw std::invalid_argument("rate_fit: samples must be positive");
    sx += std::log(k);
    sy += std::log(v);
  }
  const double n = static_cast<double>(samples.size());
  const double mx = sx / n, my = sy / n;
  double num = 0, den = 0;
  for (const auto& [k, v] : samples) {
    const double dx = std::log(k) - mx;
    num += dx * (std::log(v) - my);
    den += dx * dx;
  }
  if (den == 0) throw std::invalid_argument("rate_fit: all k equal");
  return num / den;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

EocTable EocTable::assemble(const std::vector<ErrorRecord>& records) {
  if (records.empty()) throw std::invalid_argument("EocTable: no records");
  EocTable tab;
  tab.norm_kind = records[0].norm_kind;
  tab.denominator_kind = records[0].denominator_kind;
  std::map<double, std::map<double, double>> cell;  // t -> k -> error
  for (const auto& r : records) {
    if (r.norm_kind != tab.norm_kind ||
        r.denominator_kind != tab.denominator_kind)
      throw std::invalid_argument(
          "EocTable: records mix norm or denominator conventions");
    if (!cell[r.t].emplace(r.k, r.error).second)
      throw std::invalid_argument("EocTable: duplicate (t, k) cell");
  }
  std::map<double, int> kset;
  for (const auto& [t, ks] : cell)
    for (const auto& [k, e] : ks) kset[k] = 1;
  for (const auto& [k, _] : kset) tab.k_values.push_back(k);

  for (const auto& [t, ks] : cell) {
    Row row;
    row.t = t;
    for (std::size_t i = 0; i < tab.k_values.size(); ++i) {
      auto it = ks.find(tab.k_values[i]);
      if (it == ks.end())
        throw std::invalid_argument("EocTable: missing (t, k) cell");
      row.errors.push_back(it->second);
      if (i == 0) {
        row.orders.emplace_back();
      } else if (tab.k_values[i] == 2 * tab.k_values[i - 1] &&
                 row.errors[i - 1] > 0 && row.errors[i] > 0) {
        row.orders.emplace_back(eoc(row.errors[i - 1], row.errors[i]));
      } else {
        row.orders.emplace_back();
      }
    }
    tab.rows.push_back(std::move(row));
  }
  return tab;
}

void EocTable::write_csv(std::ostream& os) const {
  os << "t";
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    os << ",err_k" << format_double(k_values[i]);
    if (i > 0) os << ",ord_k" << format_double(k_values[i]);
  }
  os << "\n";
  for (const auto& row : rows) {
    os << format_double(row.t);
    for (std::size_t i = 0; i < k_values.size(); ++i) {
      os << "," << format_double(row.errors[i]);
      if (i > 0) os << "," << (row.orders[i] ? format_double(*row.orders[i]) : "");
    }
    os << "\n";
  }
}

std::string EocTable::to_json() const {
  nlohmann::json j;
  j["norm"] = to_string(norm_kind);
  j["denominator"] = to_string(denominator_kind);
  j["k_values"] = k_values;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r;
    r["t"] = row.t;
    r["errors"] = row.errors;
    nlohmann::json ords = nlohmann::json::array();
    for (const auto& o : row.orders)
      ords.push_back(o ? nlohmann::json(*o) : nlohmann::json());
    r["orders"] = ords;
    j["rows"].push_back(r);
  }
  return j.dump(2);
}

}  // namespace gbwave
