#include "gbwave/run/pipeline.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>

#include "gbwave/examples/annulus.hpp"
#include "gbwave/examples/oracles7.hpp"
#include "gbwave/examples/radial3d.hpp"
#include "gbwave/examples/spherical.hpp"
#include "gbwave/metrics/norms.hpp"
#include "gbwave/spectral/solver.hpp"

namespace gbwave {

namespace {

namespace fs = std::filesystem;

double now_ms() {
  using clk = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clk::now().time_since_epoch())
      .count();
}

std::string table_stem(const NormSpec& n) {
  return std::string("table_") + to_string(n.kind) + "_" + to_string(n.denom);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << text;
}

struct Emitter {
  const ExperimentConfig& cfg;
  RunResult& res;

  void tables() const {
    for (const auto& n : cfg.norms) {
      std::vector<ErrorRecord> recs;
      for (const auto& r : res.records)
        if (r.norm_kind == n.kind &&
            r.denominator_kind == n.denom)
          recs.push_back(r);
      if (recs.empty()) continue;
      const EocTable tab = EocTable::assemble(recs);
      std::ostringstream csv;
      tab.write_csv(csv);
      const std::string stem = cfg.output_dir + "/" + table_stem(n);
      write_text(stem + ".csv", csv.str());
      write_text(stem + ".json", tab.to_json() + "\n");
      res.manifest.outputs.push_back(stem + ".csv");
      res.manifest.outputs.push_back(stem + ".json");
    }
  }

  void betas() const {
    if (res.betas.empty()) return;
    std::ostringstream csv;
    csv << "t,k_lo,k_hi,beta\n";
    for (const auto& b : res.betas)
      csv << format_double(b.t) << "," << format_double(b.k_lo) << ","
          << format_double(b.k_hi) << "," << format_double(b.beta) << "\n";
    const std::string path = cfg.output_dir + "/beta.csv";
    write_text(path, csv.str());
    res.manifest.outputs.push_back(path);
  }

  void scaling() const {
    if (res.oracle_rows.empty()) return;
    std::ostringstream csv;
    csv << "k,value,closed_rel_diff\n";
    for (const auto& r : res.oracle_rows)
      csv << format_double(r.k) << "," << format_double(r.value) << ","
          << format_double(r.closed_rel_diff) << "\n";
    csv << "# slope," << format_double(res.fitted_slope) << "\n";
    const std::string path = cfg.output_dir + "/scaling.csv";
    write_text(path, csv.str());
    res.manifest.outputs.push_back(path);
  }

  void all() const {
    tables();
    betas();
    scaling();
  }
};

void annulus_pipeline(const ExperimentConfig& cfg, RunResult& res) {
  const auto targets = grid_targets(cfg.grid.K, cfg.grid.L);
  const double h2 = (cfg.grid.L / cfg.grid.K) * (cfg.grid.L / cfg.grid.K);

  bool want_energy = false, want_linf = false, want_l2 = false;
  for (const auto& n : cfg.norms) {
    want_energy |= n.kind == NormKind::energy;
    want_linf |= n.kind == NormKind::linf;
    want_l2 |= n.kind == NormKind::l2;
    if (n.kind == NormKind::point)
      throw ConfigError("annulus6: point norms are not wired up");
  }

  // sup-norm growth bookkeeping for beta runs
  std::map<double, std::map<double, double>> sup_at;  // k -> t -> sup
  std::map<double, double> sup0;                      // k -> sup at t=0

  for (double k : cfg.k_values) {
    require_resolution(cfg.grid.K, cfg.grid.L, k);
    AnnulusExample ex;
    ex.k = k;
    ex.s0 = cfg.s0;
    ex.s1 = cfg.s1;
    ex.L = cfg.grid.L;
    ex.include_plus_branch = cfg.include_plus_branch;

    if (cfg.beta_rates) {
      const double t0 = now_ms();
      auto g0 = annulus_superposition(targets, 0.0, ex, cfg.quadrature,
                                      Want{true, false, false});
      sup0[k] = linf_norm(g0.values);
      res.manifest.entries.push_back({"sup t=0", 0.0, k, g0.refinements_used,
                                      g0.quad_error_estimate, now_ms() - t0});
      for (double t : cfg.times) {
        const double t1 = now_ms();
        auto gt = annulus_superposition(targets, t, ex, cfg.quadrature,
                                        Want{true, false, false});
        sup_at[k][t] = linf_norm(gt.values);
        res.manifest.entries.push_back({"sup", t, k, gt.refinements_used,
                                        gt.quad_error_estimate, now_ms() - t1});
      }
      continue;
    }

    // Step 1: initial data from the superposition
    const double t0 = now_ms();
    auto g0 = annulus_superposition(targets, 0.0, ex, cfg.quadrature,
                                    Want{true, true, false});
    res.manifest.entries.push_back({"initial data", 0.0, k, g0.refinements_used,
                                    g0.quad_error_estimate, now_ms() - t0});
    WaveState2D state0;
    state0.u = GridField2D(cfg.grid.K, cfg.grid.L);
    state0.ut = GridField2D(cfg.grid.K, cfg.grid.L);
    state0.u.values = g0.values;
    state0.ut.values = g0.dt_values;
    const double den_u0_linf = linf_norm(state0.u.values);

    for (double t : cfg.times) {
      const double t1 = now_ms();
      // Steps 2-4: spectral reference and its derivatives
      WaveState2D ref = propagate(state0, t);
      auto [rux, ruy] = spectral_gradient(ref.u);
      // direct superposition at time t
      auto gt = annulus_superposition(targets, t, ex, cfg.quadrature,
                                      Want{true, true, want_energy});
      res.manifest.entries.push_back({"compare", t, k, gt.refinements_used,
                                      gt.quad_error_estimate, now_ms() - t1});

      for (const auto& n : cfg.norms) {
        ErrorRecord rec;
        rec.t = t;
        rec.k = k;
        rec.norm_kind = n.kind;
        rec.denominator_kind = n.denom;
        switch (n.kind) {
          case NormKind::linf: {
            if (n.denom != DenominatorKind::u_at_0)
              throw ConfigError("annulus6 linf rows use the u_at_0 denominator");
            std::vector<cplx> diff(targets.size());
            for (std::size_t i = 0; i < diff.size(); ++i)
              diff[i] = ref.u.values[i] - gt.values[i];
            rec.error = linf_norm(diff) / den_u0_linf;
            break;
          }
          case NormKind::l2: {
            if (n.denom != DenominatorKind::u_gb_at_t)
              throw ConfigError("annulus6 l2 rows use the u_gb_at_t denominator");
            std::vector<cplx> diff(targets.size());
            for (std::size_t i = 0; i < diff.size(); ++i)
              diff[i] = ref.u.values[i] - gt.values[i];
            rec.error = l2_norm(diff, h2) / l2_norm(gt.values, h2);
            break;
          }
          case NormKind::energy: {
            if (n.denom != DenominatorKind::ugb_energy)
              throw ConfigError("annulus6 energy rows use the ugb_energy denominator");
            std::vector<cplx> dt_diff(targets.size()), gx(targets.size()),
                gy(targets.size());
            for (std::size_t i = 0; i < targets.size(); ++i) {
              dt_diff[i] = ref.ut.values[i] - gt.dt_values[i];
              gx[i] = rux.values[i] - gt.grad_values[i][0];
              gy[i] = ruy.values[i] - gt.grad_values[i][1];
            }
            std::vector<cplx> ggx(targets.size()), ggy(targets.size());
            for (std::size_t i = 0; i < targets.size(); ++i) {
              ggx[i] = gt.grad_values[i][0];
              ggy[i] = gt.grad_values[i][1];
            }
            const std::span<const cplx> num_grads[2] = {gx, gy};
            const std::span<const cplx> den_grads[2] = {ggx, ggy};
            rec.error = energy_from_fields(dt_diff, num_grads, h2) /
                        energy_from_fields(gt.dt_values, den_grads, h2);
            break;
          }
          case NormKind::point:
            throw ConfigError("unreachable");
        }
        res.records.push_back(rec);
      }

      if (cfg.emit_fields) {
        auto dump = [&](const std::string& name, const std::vector<cplx>& v) {
          GridField2D f(cfg.grid.K, cfg.grid.L);
          f.values = v;
          const std::string path = cfg.output_dir + "/" + name;
          std::ofstream os(path, std::ios::binary | std::ios::trunc);
          write_field_dump(os, f, t);
          res.manifest.outputs.push_back(path);
        };
        std::ostringstream tag;
        tag << "k" << k << "_t" << format_double(t);
        dump("gb_" + tag.str() + ".bin", gt.values);
        dump("ref_" + tag.str() + ".bin", ref.u.values);
      }
    }
  }

  if (cfg.beta_rates) {
    for (std::size_t i = 0; i + 1 < cfg.k_values.size(); ++i) {
      const double klo = cfg.k_values[i], khi = cfg.k_values[i + 1];
      for (double t : cfg.times)
        res.betas.push_back({t, klo, khi,
                             beta_rate(sup_at[klo][t], sup0[klo],
                                       sup_at[khi][t], sup0[khi])});
    }
  }
}

void radial_pipeline(const ExperimentConfig& cfg, RunResult& res) {
  for (double k : cfg.k_values) {
    Radial3dExample ex;
    ex.k = k;
    ex.r0 = cfg.r0;
    ex.r1 = cfg.r1;
    for (double t : cfg.times) {
      for (const auto& n : cfg.norms) {
        ErrorRecord rec;
        rec.t = t;
        rec.k = k;
        rec.norm_kind = n.kind;
        rec.denominator_kind = n.denom;
        const double t0 = now_ms();
        if (n.kind == NormKind::point) {
          if (n.denom != DenominatorKind::u_gb_at_t)
            throw ConfigError("radial3d5 point rows use the u_gb_at_t denominator");
          const PointEval gb = radial3d_superposition_at(0.0, t, ex, cfg.quadrature);
          const PointEval exact = radial3d_exact(0.0, t, ex);
          rec.error = std::abs(exact.u - gb.u) / std::abs(gb.u);
        } else if (n.kind == NormKind::energy) {
          if (n.denom != DenominatorKind::ugb_energy)
            throw ConfigError("radial3d5 energy rows use the ugb_energy denominator");
          QuadratureSpec rq = cfg.radial_quadrature;
          if (rq.panels_per_axis.empty()) {
            const double rmax = ex.r1 + t;
            const int nodes = static_cast<int>(6.5 * 2.0 * k * rmax / pi) + 200;
            rq.panels_per_axis = {std::max(16, nodes / rq.gauss_order + 1)};
          }
          const auto [num, den] = radial3d_energy_pair(
              t, ex, cfg.quadrature, rq, RadialMeasure::radial_profile);
          rec.error = num / den;
        } else {
          throw ConfigError("radial3d5 supports point and energy norms");
        }
        res.manifest.entries.push_back(
            {table_stem(n), t, k, 0, 0.0, now_ms() - t0});
        res.records.push_back(rec);
      }
    }
  }
}

void spherical_pipeline(const ExperimentConfig& cfg, RunResult& res) {
  for (const auto& n : cfg.norms)
    if (n.kind != NormKind::energy || n.denom != DenominatorKind::absolute)
      throw ConfigError("spherical4 records absolute energy errors");
  for (double k : cfg.k_values) {
    SphericalExample ex{k};
    for (double t : cfg.times) {
      const double t0 = now_ms();
      QuadratureSpec rq = cfg.radial_quadrature;
      if (rq.panels_per_axis.empty()) {
        const double rmax = t + 1.5;
        const int nodes = static_cast<int>(6.5 * 2.0 * k * rmax / pi) + 200;
        rq.panels_per_axis = {std::max(16, nodes / rq.gauss_order + 1)};
      }
      ErrorRecord rec;
      rec.t = t;
      rec.k = k;
      rec.norm_kind = NormKind::energy;
      rec.denominator_kind = DenominatorKind::absolute;
      rec.error = spherical_energy_error(t, ex, cfg.quadrature, rq);
      res.manifest.entries.push_back({"energy", t, k, 0, 0.0, now_ms() - t0});
      res.records.push_back(rec);
    }
  }
  if (cfg.times.size() == 1 && cfg.k_values.size() >= 2) {
    std::vector<std::pair<double, double>> samples;
    for (const auto& r : res.records) samples.emplace_back(r.k, r.error);
    res.fitted_slope = rate_fit(samples);
  }
}

void oracle_pipeline(const ExperimentConfig& cfg, RunResult& res) {
  const bool is_e5 = cfg.example == "oracle7-e5";
  for (double k : cfg.k_values) {
    const double t0 = now_ms();
    double value = 0, rel = 0;
    if (is_e5) {
      // d = 2: L2 norm of the field over a radial cut (the modulus is radial)
      const double rmax = std::sqrt(50.0 / k) + 0.05;
      const double zmax = std::min(8.0, rmax + std::sqrt(90.0 / (1.0 + k)) + 0.5);
      const auto man = manifold_e5_gaussian_2d(zmax);
      QuadratureSpec rq;
      rq.panels_per_axis = {
          std::max(16, static_cast<int>(6.5 * k * rmax * rmax / pi / 5.0) + 24)};
      rq.gauss_order = 5;
      rq.abs_tol = 1e-10;
      rq.max_refinements = 3;
      auto eval = [&](int level) {
        const auto sp = rq.refined(level);
        const CompositeAxis ax =
            CompositeAxis::build(0.0, rmax, sp.panels_per_axis[0], sp.gauss_order);
        std::vector<Vec<2>> pts(ax.nodes.size());
        for (std::size_t i = 0; i < ax.nodes.size(); ++i)
          pts[i] = {ax.nodes[i], 0.0};
        const auto r =
            integrate_superposition(man, 0.0, k, pts, cfg.quadrature,
                                    Want{true, false, false});
        PairwiseStack<2> acc;
        double worst = 0;
        for (std::size_t i = 0; i < ax.nodes.size(); ++i) {
          acc.push({ax.weights[i] * std::norm(r.values[i]) * ax.nodes[i], 0.0});
          const auto oracle = closed_form_superposition_oracle(
              OracleId::e5_gaussian, std::span<const double>(&pts[i][0], 2), k,
              2, 2);
          worst = std::max(worst, std::abs(r.values[i] - oracle.value) /
                                      std::abs(oracle.value));
        }
        return std::vector<double>{acc.total()[0], worst};
      };
      auto scaled = [](const std::vector<double>& v) {
        return std::max(1e-6, std::abs(v[0]));
      };
      const auto out = refine_to_tolerance(rq, eval, scaled);
      value = std::sqrt(2.0 * pi * out.values[0]);
      rel = std::abs(value / e5_l2_norm(k, 2) - 1.0);
    } else {
      // e4, d = 1: L2 norm of the spatial derivative
      const double xmax = 7.5;
      const double zmax = 8.0;
      const auto man = manifold_e4_wkb_1d(zmax);
      QuadratureSpec rq;
      const int nodes = static_cast<int>(6.5 * 0.5 * k * xmax * xmax / pi) + 100;
      rq.panels_per_axis = {std::max(16, nodes / 8 + 1)};
      rq.gauss_order = 8;
      rq.abs_tol = 1e-10;
      rq.max_refinements = 3;
      auto eval = [&](int level) {
        const auto sp = rq.refined(level);
        const CompositeAxis ax = CompositeAxis::build(-xmax, xmax,
                                                      sp.panels_per_axis[0],
                                                      sp.gauss_order);
        std::vector<Vec<1>> pts(ax.nodes.size());
        for (std::size_t i = 0; i < ax.nodes.size(); ++i) pts[i] = {ax.nodes[i]};
        const auto r = integrate_superposition(man, 0.0, k, pts, cfg.quadrature,
                                               Want{true, false, true});
        PairwiseStack<2> acc;
        double worst = 0;
        for (std::size_t i = 0; i < ax.nodes.size(); ++i) {
          acc.push({ax.weights[i] * std::norm(r.grad_values[i][0]), 0.0});
          const auto oracle = closed_form_superposition_oracle(
              OracleId::e4_wkb, std::span<const double>(&pts[i][0], 1), k, 1, 1);
          worst = std::max(worst, std::abs(r.values[i] - oracle.value) /
                                      std::max(1e-300, std::abs(oracle.value)));
        }
        return std::vector<double>{acc.total()[0], worst};
      };
      auto scaled = [](const std::vector<double>& v) {
        return std::max(1.0, std::abs(v[0]));
      };
      const auto out = refine_to_tolerance(rq, eval, scaled);
      value = std::sqrt(out.values[0]);
      rel = out.values[1];
    }
    res.oracle_rows.push_back({k, value, rel});
    res.manifest.entries.push_back({"scaling", 0.0, k, 0, 0.0, now_ms() - t0});
  }
  std::vector<std::pair<double, double>> samples;
  for (const auto& r : res.oracle_rows) samples.emplace_back(r.k, r.value);
  res.fitted_slope = rate_fit(samples);
}

}  // namespace

RunResult run(const ExperimentConfig& cfg, bool force) {
  cfg.validate();
  RunResult res;
  res.manifest.config_text = cfg.canonical();
  res.manifest.config_hash = fnv1a(res.manifest.config_text);

  RunManifest existing;
  if (!force && RunManifest::load_if_present(cfg.output_dir, existing) &&
      existing.status == "complete" &&
      existing.config_hash == res.manifest.config_hash) {
    res.manifest = existing;
    res.resumed = true;
    return res;
  }

  fs::create_directories(cfg.output_dir);
  try {
    if (cfg.example == "annulus6") annulus_pipeline(cfg, res);
    else if (cfg.example == "radial3d5") radial_pipeline(cfg, res);
    else if (cfg.example == "spherical4") spherical_pipeline(cfg, res);
    else oracle_pipeline(cfg, res);
  } catch (const std::exception& e) {
    res.manifest.status = "failed";
    res.manifest.failure = e.what();
    Emitter{cfg, res}.all();
    res.manifest.save(cfg.output_dir);
    throw;
  }
  Emitter{cfg, res}.all();
  res.manifest.status = "complete";
  res.manifest.save(cfg.output_dir);
  return res;
}

}  // namespace gbwave
