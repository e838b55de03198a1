#include "gbwave/run/config.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "gbwave/spectral/solver.hpp"

namespace gbwave {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

double to_double(const std::string& s, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for " + key + ": '" + s + "'");
  }
}

int to_int(const std::string& s, const std::string& key) {
  const double v = to_double(s, key);
  if (v != std::floor(v)) throw ConfigError(key + " must be an integer");
  return static_cast<int>(v);
}

bool to_bool(const std::string& s, const std::string& key) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError("bad boolean for " + key + ": '" + s + "'");
}

void parse_quad(const std::map<std::string, std::string>& kv,
                const std::string& prefix, QuadratureSpec& q) {
  auto get = [&](const std::string& k) -> const std::string* {
    auto it = kv.find(prefix + "." + k);
    return it == kv.end() ? nullptr : &it->second;
  };
  if (const auto* v = get("panels")) {
    if (*v != "auto") {
      q.panels_per_axis.clear();
      for (const auto& tok : split_ws(*v))
        q.panels_per_axis.push_back(to_int(tok, prefix + ".panels"));
    }
  }
  if (const auto* v = get("gauss_order")) q.gauss_order = to_int(*v, "gauss_order");
  if (const auto* v = get("abs_tol")) q.abs_tol = to_double(*v, "abs_tol");
  if (const auto* v = get("max_refinements"))
    q.max_refinements = to_int(*v, "max_refinements");
}

}  // namespace

void ExperimentConfig::validate() const {
  if (example != "spherical4" && example != "radial3d5" && example != "annulus6" &&
      example != "oracle7-e4" && example != "oracle7-e5")
    throw ConfigError("unknown example: " + example);
  if (k_values.empty()) throw ConfigError("k_values must be nonempty");
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    if (!(k_values[i] >= 1)) throw ConfigError("k values must be >= 1");
    if (i > 0 && !(k_values[i] > k_values[i - 1]))
      throw ConfigError("k_values must be strictly ascending");
  }
  if (!beta_rates && norms.empty()) throw ConfigError("norms must be nonempty");
  if (example == "annulus6") {
    for (double k : k_values)
      if (k != std::floor(k))
        throw ConfigError("annulus6 requires integer k values");
    if (!resolution_ok(grid.K, grid.L, k_values.back()))
      throw ConfigError("grid K=" + std::to_string(grid.K) +
                        " violates the resolution guard for max k");
    if (!(0 < s0 && s0 < s1 && s1 < 1))
      throw ConfigError("annulus6 needs 0 < s0 < s1 < 1");
  }
  if (example == "radial3d5" && !(0 < r0 && r0 < r1))
    throw ConfigError("radial3d5 needs 0 < r0 < r1");
  for (double t : times)
    if (t < 0) throw ConfigError("times must be nonnegative");
  quadrature.validate();
  radial_quadrature.validate();
}

std::string ExperimentConfig::canonical() const {
  std::ostringstream os;
  os << "example=" << example << "\n";
  os << "k_values=";
  for (double k : k_values) os << format_double(k) << " ";
  os << "\ntimes=";
  for (double t : times) os << format_double(t) << " ";
  os << "\nnorms=";
  for (const auto& n : norms)
    os << to_string(n.kind) << ":" << to_string(n.denom) << " ";
  os << "\ngrid.K=" << grid.K << "\ngrid.L=" << format_double(grid.L) << "\n";
  auto put_quad = [&](const char* name, const QuadratureSpec& q) {
    os << name << ".panels=";
    if (q.panels_per_axis.empty()) os << "auto";
    else
      for (int p : q.panels_per_axis) os << p << " ";
    os << "\n" << name << ".gauss_order=" << q.gauss_order;
    os << "\n" << name << ".abs_tol=" << format_double(q.abs_tol);
    os << "\n" << name << ".max_refinements=" << q.max_refinements << "\n";
  };
  put_quad("quadrature", quadrature);
  put_quad("radial_quadrature", radial_quadrature);
  os << "include_plus_branch=" << include_plus_branch << "\n";
  os << "emit_fields=" << emit_fields << "\n";
  os << "beta_rates=" << beta_rates << "\n";
  os << "r0=" << format_double(r0) << "\nr1=" << format_double(r1) << "\n";
  os << "s0=" << format_double(s0) << "\ns1=" << format_double(s1) << "\n";
  return os.str();
}

ExperimentConfig parse_config_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream iss(text);
  std::string line, section;
  while (std::getline(iss, line)) {
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("bad section header: " + line);
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value: " + line);
    const std::string key =
        (section.empty() ? "" : section + ".") + trim(line.substr(0, eq));
    kv[key] = trim(line.substr(eq + 1));
  }

  ExperimentConfig cfg;
  auto get = [&](const std::string& k) -> const std::string* {
    auto it = kv.find(k);
    return it == kv.end() ? nullptr : &it->second;
  };
  if (const auto* v = get("example")) cfg.example = *v;
  else throw ConfigError("missing 'example'");
  if (const auto* v = get("k_values")) {
    for (const auto& tok : split_ws(*v))
      cfg.k_values.push_back(to_double(tok, "k_values"));
  } else {
    throw ConfigError("missing 'k_values'");
  }
  if (const auto* v = get("times"))
    for (const auto& tok : split_ws(*v)) cfg.times.push_back(to_double(tok, "times"));
  if (const auto* v = get("norms")) {
    for (const auto& tok : split_ws(*v)) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos)
        throw ConfigError("norm spec must be kind:denominator, got " + tok);
      cfg.norms.push_back(NormSpec{norm_kind_from_string(tok.substr(0, colon)),
                                   denominator_kind_from_string(tok.substr(colon + 1))});
    }
  }
  if (const auto* v = get("grid.K")) cfg.grid.K = to_int(*v, "grid.K");
  if (const auto* v = get("grid.L")) cfg.grid.L = to_double(*v, "grid.L");
  parse_quad(kv, "quadrature", cfg.quadrature);
  parse_quad(kv, "radial_quadrature", cfg.radial_quadrature);
  if (const auto* v = get("output.dir")) cfg.output_dir = *v;
  if (const auto* v = get("output.emit_fields"))
    cfg.emit_fields = to_bool(*v, "emit_fields");
  if (const auto* v = get("flags.include_plus_branch"))
    cfg.include_plus_branch = to_bool(*v, "include_plus_branch");
  if (const auto* v = get("flags.beta_rates"))
    cfg.beta_rates = to_bool(*v, "beta_rates");
  if (const auto* v = get("params.r0")) cfg.r0 = to_double(*v, "r0");
  if (const auto* v = get("params.r1")) cfg.r1 = to_double(*v, "r1");
  if (const auto* v = get("params.s0")) cfg.s0 = to_double(*v, "s0");
  if (const auto* v = get("params.s1")) cfg.s1 = to_double(*v, "s1");
  cfg.validate();
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_config_text(ss.str());
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace gbwave
