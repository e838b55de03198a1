#include "gbwave/run/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gbwave {

std::string RunManifest::to_json() const {
  nlohmann::json j;
  j["version"] = version;
  j["status"] = status;
  if (!failure.empty()) j["failure"] = failure;
  j["config_hash"] = config_hash;
  j["config"] = config_text;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json je;
    je["label"] = e.label;
    je["t"] = e.t;
    je["k"] = e.k;
    je["refinements"] = e.refinements;
    je["quad_estimate"] = e.quad_estimate;
    je["wall_ms"] = e.wall_ms;
    j["entries"].push_back(je);
  }
  j["outputs"] = outputs;
  return j.dump(2);
}

RunManifest RunManifest::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  RunManifest m;
  m.version = j.value("version", "");
  m.status = j.value("status", "incomplete");
  m.failure = j.value("failure", "");
  m.config_hash = j.value("config_hash", std::uint64_t{0});
  m.config_text = j.value("config", "");
  if (j.contains("entries"))
    for (const auto& je : j["entries"]) {
      Entry e;
      e.label = je.value("label", "");
      e.t = je.value("t", 0.0);
      e.k = je.value("k", 0.0);
      e.refinements = je.value("refinements", 0);
      e.quad_estimate = je.value("quad_estimate", 0.0);
      e.wall_ms = je.value("wall_ms", 0.0);
      m.entries.push_back(e);
    }
  if (j.contains("outputs"))
    for (const auto& o : j["outputs"]) m.outputs.push_back(o.get<std::string>());
  return m;
}

void RunManifest::save(const std::string& dir) const {
  std::filesystem::create_directories(dir);
  std::ofstream os(dir + "/manifest.json", std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write manifest in " + dir);
  os << to_json() << "\n";
}

bool RunManifest::load_if_present(const std::string& dir, RunManifest& out) {
  std::ifstream is(dir + "/manifest.json");
  if (!is) return false;
  std::ostringstream ss;
  ss << is.rdbuf();
  out = from_json(ss.str());
  return true;
}

}  // namespace gbwave
