#pragma once

#include "gbwave/run/config.hpp"

namespace gbwave {

/// Provenance for one run: config snapshot, per-cell bookkeeping, outputs.
/// Written as manifest.json in the output directory; a completed manifest
/// with a matching config hash makes a rerun a no-op unless forced.
struct RunManifest {
  std::string config_text;
  std::uint64_t config_hash = 0;
  std::string version = kVersion;
  std::string status = "incomplete";  // complete | failed
  std::string failure;

  struct Entry {
    std::string label;
    double t = 0, k = 0;
    int refinements = 0;
    double quad_estimate = 0;
    double wall_ms = 0;
  };
  std::vector<Entry> entries;
  std::vector<std::string> outputs;

  std::string to_json() const;
  static RunManifest from_json(const std::string& text);

  void save(const std::string& dir) const;
  static bool load_if_present(const std::string& dir, RunManifest& out);
};

}  // namespace gbwave
