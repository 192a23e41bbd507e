#include "csmanet/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <thread>

#include "csmanet/carrier_sense.hpp"
#include "csmanet/csv.hpp"
#include "csmanet/des/simulator.hpp"
#include "csmanet/empirical.hpp"
#include "csmanet/interference_law.hpp"
#include "csmanet/rng.hpp"
#include "csmanet/sharing_area.hpp"

namespace csmanet {

namespace fs = std::filesystem;

namespace {

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs)
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string lambda_label(double lambda) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.0e", lambda);
  return buf;
}

std::string range_label(double r) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", r);
  return buf;
}

struct GridTopology {
  int rows = 0;
  int cols = 0;
  double spacing_m = 0.0;
};

bool parse_grid_topology(const std::string& text, GridTopology* out) {
  if (text.rfind("grid:", 0) != 0) return false;
  GridTopology g;
  if (std::sscanf(text.c_str(), "grid:%dx%d:%lf", &g.rows, &g.cols, &g.spacing_m) != 3)
    throw std::invalid_argument("bad grid topology (want grid:<rows>x<cols>:<spacing>): " + text);
  if (g.rows < 1 || g.cols < 1 || !(g.spacing_m > 0))
    throw std::invalid_argument("bad grid topology dimensions: " + text);
  *out = g;
  return true;
}

fs::path ensure_dir(const std::string& dir) {
  fs::path p(dir);
  fs::create_directories(p);
  return p;
}

InterferenceLaw law_for(double lambda_eff, double tx_power_w) {
  return InterferenceLaw{lambda_eff, tx_power_w};
}

}  // namespace

std::string SweepPoint::tag() const {
  return "lam" + lambda_label(lambda) + "_r" + range_label(cs_range_m) + "_" + to_string(mode) +
         "_" + std::to_string(payload_bytes) + "B";
}

void ExperimentConfig::validate() const {
  if (lambdas.empty() || cs_ranges_m.empty() || payloads_bytes.empty() || modes.empty())
    throw std::invalid_argument("ExperimentConfig: sweep lists must be non-empty");
  for (double l : lambdas)
    if (!(l > 0)) throw std::invalid_argument("ExperimentConfig: lambda must be > 0");
  for (double r : cs_ranges_m)
    if (!(r > 0)) throw std::invalid_argument("ExperimentConfig: cs_range must be > 0");
  for (int p : payloads_bytes)
    if (p < 0) throw std::invalid_argument("ExperimentConfig: payload must be >= 0");
  if (iterations < 1) throw std::invalid_argument("ExperimentConfig: iterations must be >= 1");
  if (!(region_radius_m > 0)) throw std::invalid_argument("ExperimentConfig: region radius must be > 0");
  if (!(exclusion_m >= 0)) throw std::invalid_argument("ExperimentConfig: exclusion must be >= 0");
  if (!(grid_m > 0)) throw std::invalid_argument("ExperimentConfig: grid side must be > 0");
  if (!(duration_us > 0)) throw std::invalid_argument("ExperimentConfig: duration must be > 0");
  if (repetitions < 1) throw std::invalid_argument("ExperimentConfig: repetitions must be >= 1");
  if (bins_per_decade < 1) throw std::invalid_argument("ExperimentConfig: bins_per_decade must be >= 1");
  if (law_points < 2) throw std::invalid_argument("ExperimentConfig: law_points must be >= 2");
  GridTopology g;
  if (topology != "poisson") parse_grid_topology(topology, &g);
  // Every sweep point must produce a valid PHY/MAC config.
  for (const SweepPoint& pt : sweep()) config_for(pt).validate();
}

std::vector<SweepPoint> ExperimentConfig::sweep() const {
  std::vector<SweepPoint> out;
  for (double l : lambdas)
    for (double r : cs_ranges_m)
      for (int p : payloads_bytes)
        for (AccessMode m : modes) out.push_back({l, r, p, m});
  return out;
}

PhyMacConfig ExperimentConfig::config_for(const SweepPoint& point) const {
  PhyMacConfig c = base;
  c.mode = point.mode;
  c.payload_bits = point.payload_bytes * 8;
  c.cs_threshold_w = cs_threshold_for_range(point.cs_range_m, c.tx_power_w, c.noise_w);
  return c;
}

KvMap ExperimentConfig::to_kv() const {
  KvMap kv = base.to_kv();
  auto join = [](const auto& items, auto fmt) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) s += ", ";
      s += fmt(items[i]);
    }
    return s;
  };
  kv.set("lambda", join(lambdas, [](double v) { return format_double(v); }));
  kv.set("cs_range_m", join(cs_ranges_m, [](double v) { return format_double(v); }));
  kv.set("payload_bytes", join(payloads_bytes, [](int v) { return std::to_string(v); }));
  kv.set("mode", join(modes, [](AccessMode m) { return to_string(m); }));
  kv.set("process", to_string(process));
  kv.set("iterations", static_cast<long long>(iterations));
  kv.set("region_radius_m", region_radius_m);
  kv.set("exclusion_m", exclusion_m);
  kv.set("topology", topology);
  kv.set("grid_m", grid_m);
  kv.set("duration_us", duration_us);
  kv.set("repetitions", static_cast<long long>(repetitions));
  kv.set("seed", static_cast<long long>(seed));
  kv.set("bins_per_decade", static_cast<long long>(bins_per_decade));
  kv.set("law_points", static_cast<long long>(law_points));
  kv.set("jobs", static_cast<long long>(jobs));
  return kv;
}

ExperimentConfig ExperimentConfig::from_kv(const KvMap& kv) {
  ExperimentConfig c;
  c.base = PhyMacConfig::from_kv(kv);
  if (kv.contains("lambda")) c.lambdas = kv.get_double_list("lambda");
  if (kv.contains("cs_range_m")) c.cs_ranges_m = kv.get_double_list("cs_range_m");
  if (kv.contains("payload_bytes")) {
    c.payloads_bytes.clear();
    for (const auto& s : kv.get_list("payload_bytes")) c.payloads_bytes.push_back(std::stoi(s));
  }
  if (kv.contains("mode")) {
    c.modes.clear();
    for (const auto& s : kv.get_list("mode")) c.modes.push_back(access_mode_from_string(s));
  }
  if (kv.contains("process")) c.process = point_process_from_string(kv.get("process"));
  c.iterations = static_cast<std::uint64_t>(kv.get_int_or("iterations", c.iterations));
  c.region_radius_m = kv.get_double_or("region_radius_m", c.region_radius_m);
  c.exclusion_m = kv.get_double_or("exclusion_m", c.exclusion_m);
  c.topology = kv.get_or("topology", c.topology);
  c.grid_m = kv.get_double_or("grid_m", c.grid_m);
  c.duration_us = kv.get_double_or("duration_us", c.duration_us);
  c.repetitions = static_cast<int>(kv.get_int_or("repetitions", c.repetitions));
  c.seed = static_cast<std::uint64_t>(kv.get_int_or("seed", c.seed));
  c.bins_per_decade = static_cast<int>(kv.get_int_or("bins_per_decade", c.bins_per_decade));
  c.law_points = static_cast<int>(kv.get_int_or("law_points", c.law_points));
  c.jobs = static_cast<int>(kv.get_int_or("jobs", c.jobs));
  return c;
}

std::string ExperimentConfig::stamp() const {
  return "config_hash=" + kv_hash(to_kv()) + " seed=" + std::to_string(seed);
}

// ---------------------------------------------------------------------------
// analyze

namespace {

struct AnalyzeResult {
  SweepPoint point;
  SharingAreaAnalysis analysis;
  double residual = 0.0;
  std::string error;
};

}  // namespace

void cmd_analyze(const ExperimentConfig& cfg, const std::string& out_dir) {
  cfg.validate();
  fs::path dir = ensure_dir(out_dir);
  std::vector<SweepPoint> points = cfg.sweep();
  std::vector<AnalyzeResult> results(points.size());

  parallel_for(points.size(), cfg.jobs, [&](std::size_t i) {
    AnalyzeResult& r = results[i];
    r.point = points[i];
    try {
      PhyMacConfig pc = cfg.config_for(points[i]);
      POnSolution sol = solve_p_on(points[i].lambda, pc);
      r.residual = sol.residual;
      r.analysis = analyze_sharing_area(points[i].lambda, pc);
    } catch (const std::exception& e) {
      r.error = e.what();  // surfaced per point, sweep continues
    }
  });

  std::vector<std::vector<std::string>> pon_rows;
  std::vector<std::vector<std::string>> density_rows;
  std::vector<std::vector<std::string>> cdf_rows;
  std::vector<std::vector<std::string>> pdf_rows;
  for (const AnalyzeResult& r : results) {
    std::vector<std::string> key{format_double(r.point.lambda), format_double(r.point.cs_range_m),
                                 to_string(r.point.mode), std::to_string(r.point.payload_bytes)};
    if (!r.error.empty()) {
      auto row = key;
      row.insert(row.end(), {"", "", "error: " + r.error});
      pon_rows.push_back(row);
      continue;
    }
    {
      auto row = key;
      row.insert(row.end(), {format_double(r.analysis.p_on_star), format_double(r.residual),
                             r.analysis.p_on_bracketed ? "ok" : "unbracketed"});
      pon_rows.push_back(row);
    }
    {
      auto row = key;
      double lpp = mhc_density_baseline(r.point.lambda, r.point.cs_range_m);
      row.insert(row.end(), {format_double(r.analysis.e_z), format_double(r.analysis.lambda_eff),
                             format_double(lpp)});
      density_rows.push_back(row);
    }
    InterferenceLaw law = law_for(r.analysis.lambda_eff, cfg.base.tx_power_w);
    double t_lo = law.quantile(1e-3);
    double t_hi = law.quantile(1.0 - 1e-3);
    for (int k = 0; k < cfg.law_points; ++k) {
      double f = static_cast<double>(k) / (cfg.law_points - 1);
      double t = t_lo * std::pow(t_hi / t_lo, f);
      auto crow = key;
      crow.insert(crow.end(), {format_double(t), format_double(law.cdf(t))});
      cdf_rows.push_back(crow);
      auto prow = key;
      prow.insert(prow.end(), {format_double(t), format_double(law.pdf(t))});
      pdf_rows.push_back(prow);
    }
  }

  std::vector<std::string> keycols{"lambda", "cs_range_m", "mode", "payload_bytes"};
  auto with = [&](std::initializer_list<std::string> extra) {
    std::vector<std::string> cols = keycols;
    cols.insert(cols.end(), extra);
    return cols;
  };
  write_table_csv((dir / "pon.csv").string(), with({"p_on", "residual", "status"}), pon_rows,
                  cfg.stamp());
  write_table_csv((dir / "density.csv").string(), with({"e_z", "lambda_eff", "lambda_mhc_baseline"}),
                  density_rows, cfg.stamp());
  write_table_csv((dir / "law_cdf.csv").string(), with({"t_watts", "cdf"}), cdf_rows, cfg.stamp());
  write_table_csv((dir / "law_pdf.csv").string(), with({"t_watts", "pdf"}), pdf_rows, cfg.stamp());
}

// ---------------------------------------------------------------------------
// sample

void cmd_sample(const ExperimentConfig& cfg, const std::string& out_dir) {
  cfg.validate();
  fs::path dir = ensure_dir(out_dir);
  std::vector<SweepPoint> points = cfg.sweep();
  parallel_for(points.size(), cfg.jobs, [&](std::size_t i) {
    const SweepPoint& pt = points[i];
    MonteCarloConfig mc;
    mc.process = cfg.process;
    mc.lambda = pt.lambda;
    mc.exclusion_m = cfg.exclusion_m;
    mc.region_radius_m = cfg.region_radius_m;
    mc.tx_power_w = cfg.base.tx_power_w;
    mc.iterations = cfg.iterations;
    mc.seed = cfg.seed;
    EmpiricalSample sample = monte_carlo_interference(mc);
    fs::path sub = ensure_dir((dir / pt.tag()).string());
    std::string name = to_string(cfg.process);
    write_samples_csv((sub / (name + "_samples.csv")).string(), sample, cfg.stamp());
    write_cdf_csv((sub / (name + "_cdf.csv")).string(), empirical_cdf(sample), cfg.stamp());
    write_pdf_csv((sub / (name + "_pdf.csv")).string(),
                  log_histogram_pdf(sample, cfg.bins_per_decade), cfg.stamp());
  });
}

// ---------------------------------------------------------------------------
// des

void cmd_des(const ExperimentConfig& cfg, const std::string& out_dir, bool write_traces) {
  cfg.validate();
  fs::path dir = ensure_dir(out_dir);
  std::vector<SweepPoint> points = cfg.sweep();
  GridTopology grid;
  bool is_grid = parse_grid_topology(cfg.topology == "poisson" ? "" : cfg.topology, &grid) &&
                 cfg.topology != "poisson";

  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    const SweepPoint& pt = points[pi];
    PhyMacConfig pc = cfg.config_for(pt);
    fs::path sub = ensure_dir((dir / pt.tag()).string());

    struct RepResult {
      des::DesTrace trace;
      std::pair<double, double> window{0.0, 0.0};
      bool usable = false;
      std::string note;
    };
    std::vector<RepResult> reps(cfg.repetitions);

    parallel_for(reps.size(), cfg.jobs, [&](std::size_t rep) {
      std::uint64_t rep_seed = substream_seed(cfg.seed, (pi << 16) | rep);
      des::Scenario sc;
      if (is_grid) {
        sc = des::build_grid_scenario(grid.rows, grid.cols, grid.spacing_m, pc, cfg.grid_m,
                                      cfg.duration_us, rep_seed);
      } else {
        sc = des::build_poisson_scenario(pt.lambda, pc, cfg.grid_m, cfg.duration_us, rep_seed);
      }
      sc.options.record_events = write_traces;
      sc.options.record_active_sets = is_grid;
      RepResult& r = reps[rep];
      r.trace = des::run_des(sc);
      try {
        r.window = des::time_window(r.trace);
        r.usable = true;
      } catch (const std::exception& e) {
        r.note = e.what();  // degenerate window: skipped, counted below
      }
    });

    EmpiricalSample pooled;
    std::vector<std::vector<std::string>> summary_rows;
    int skipped = 0;
    for (std::size_t rep = 0; rep < reps.size(); ++rep) {
      RepResult& r = reps[rep];
      if (r.usable) {
        pooled.append(des::trace_to_samples(r.trace, r.window));
      } else {
        ++skipped;
      }
      summary_rows.push_back({std::to_string(rep), std::to_string(r.trace.tx_count),
                              format_double(r.window.first), format_double(r.window.second),
                              std::to_string(r.trace.processed_events),
                              r.usable ? "ok" : "skipped: " + r.note});
      if (write_traces) {
        r.trace.write_events_csv((sub / ("trace_rep" + std::to_string(rep) + ".csv")).string(),
                                 cfg.stamp());
      }
    }
    write_table_csv((sub / "des_summary.csv").string(),
                    {"rep", "tx_count", "window_start_us", "window_end_us", "events", "status"},
                    summary_rows, cfg.stamp());
    if (skipped == cfg.repetitions)
      throw std::runtime_error("cmd_des: every repetition had a degenerate window at " + pt.tag());

    write_samples_csv((sub / "des_samples.csv").string(), pooled, cfg.stamp());
    write_cdf_csv((sub / "des_cdf.csv").string(), empirical_cdf(pooled), cfg.stamp());
    write_pdf_csv((sub / "des_pdf.csv").string(), log_histogram_pdf(pooled, cfg.bins_per_decade),
                  cfg.stamp());

    if (is_grid) {
      // Concurrency histograms around the central transmitter: set C is its
      // carrier-sense disk, set B a half-range disk centered between it and
      // its east neighbour (so B holds exactly the two of them on the
      // reference grid).
      double range = effective_cs_range(pc);
      std::vector<double> accB, accC;
      double total_w = 0.0;
      for (RepResult& r : reps) {
        if (!r.usable) continue;
        des::Scenario sc_geo;  // same deterministic geometry for set selection
        sc_geo = des::build_grid_scenario(grid.rows, grid.cols, grid.spacing_m, pc, cfg.grid_m,
                                          cfg.duration_us, 0);
        des::Position white{cfg.grid_m / 2.0, cfg.grid_m / 2.0};
        des::Position mid{white.x_m + grid.spacing_m / 2.0, white.y_m};
        auto setB = des::transmitters_within(sc_geo, mid, range / 2.0);
        auto setC = des::transmitters_within(sc_geo, white, range);
        auto hb = des::concurrent_tx_histogram(r.trace, setB, r.window);
        auto hc = des::concurrent_tx_histogram(r.trace, setC, r.window);
        double w = r.window.second - r.window.first;
        if (accB.empty()) {
          accB.assign(hb.size(), 0.0);
          accC.assign(hc.size(), 0.0);
        }
        for (std::size_t k = 0; k < hb.size(); ++k) accB[k] += hb[k] * w;
        for (std::size_t k = 0; k < hc.size(); ++k) accC[k] += hc[k] * w;
        total_w += w;
      }
      auto write_hist = [&](const char* name, const std::vector<double>& acc) {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t k = 0; k < acc.size(); ++k) {
          rows.push_back({std::to_string(k), format_double(acc[k] / total_w)});
        }
        write_table_csv((sub / name).string(), {"concurrent_tx", "time_fraction"}, rows,
                        cfg.stamp());
      };
      write_hist("concurrency_setB.csv", accB);
      write_hist("concurrency_setC.csv", accC);
    }
  }
}

// ---------------------------------------------------------------------------
// compare

void cmd_compare(const ExperimentConfig& cfg, const std::string& out_dir) {
  cfg.validate();
  fs::path dir = ensure_dir(out_dir);
  std::vector<SweepPoint> points = cfg.sweep();
  std::vector<std::vector<std::string>> rows(points.size());

  parallel_for(points.size(), cfg.jobs, [&](std::size_t i) {
    const SweepPoint& pt = points[i];
    fs::path sub = dir / pt.tag();
    fs::path des_path = sub / "des_samples.csv";
    if (!fs::exists(des_path))
      throw std::runtime_error("cmd_compare: missing " + des_path.string() +
                               " (run the des command first)");
    EmpiricalSample des_sample = read_samples_csv(des_path.string());
    ZeroAtomSplit split = split_zero_atom(des_sample);
    if (split.positive.obs.empty())
      throw std::runtime_error("cmd_compare: simulator sample is all idle time at " + pt.tag());
    EmpiricalCdf des_cdf = empirical_cdf(split.positive);

    PhyMacConfig pc = cfg.config_for(pt);
    SharingAreaAnalysis analysis = analyze_sharing_area(pt.lambda, pc);
    InterferenceLaw law_eff = law_for(analysis.lambda_eff, pc.tx_power_w);
    InterferenceLaw law_init = law_for(pt.lambda, pc.tx_power_w);
    double ks_eff = ks_distance_vs_cdf(des_cdf, [&](double t) { return law_eff.cdf(t); });
    double ks_init = ks_distance_vs_cdf(des_cdf, [&](double t) { return law_init.cdf(t); });

    auto mc_ks = [&](const char* name) -> std::string {
      fs::path p = sub / (std::string(name) + "_samples.csv");
      if (!fs::exists(p)) return "";
      EmpiricalSample s = read_samples_csv(p.string());
      ZeroAtomSplit sp = split_zero_atom(s);
      return format_double(ks_distance(empirical_cdf(sp.positive), des_cdf));
    };

    rows[i] = {format_double(pt.lambda),
               format_double(pt.cs_range_m),
               to_string(pt.mode),
               std::to_string(pt.payload_bytes),
               format_double(analysis.lambda_eff),
               format_double(ks_eff),
               format_double(ks_init),
               mc_ks("mhc"),
               mc_ks("ssi"),
               mc_ks("ppp"),
               format_double(split.atom_mass)};
  });

  write_table_csv((dir / "compare.csv").string(),
                  {"lambda", "cs_range_m", "mode", "payload_bytes", "lambda_eff", "ks_analytic_eff",
                   "ks_analytic_init", "ks_mhc", "ks_ssi", "ks_ppp", "des_zero_atom_mass"},
                  rows, cfg.stamp());
}

}  // namespace csmanet
