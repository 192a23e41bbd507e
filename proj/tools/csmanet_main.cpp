#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "csmanet/experiments.hpp"

namespace {

struct CommonArgs {
  std::string config_path;
  std::string preset;
  std::string out_dir = "out";
  long long seed = -1;
  int repetitions = -1;
  double duration_us = -1;
  int jobs = -1;
};

csmanet::ExperimentConfig load_config(const CommonArgs& args) {
  if (!args.config_path.empty() && !args.preset.empty())
    throw std::invalid_argument("use either --config or --preset, not both");
  csmanet::ExperimentConfig cfg;
  if (!args.preset.empty()) {
    cfg = csmanet::preset_config(args.preset);
  } else if (!args.config_path.empty()) {
    cfg = csmanet::ExperimentConfig::from_kv(csmanet::KvMap::parse_file(args.config_path));
  }
  if (args.seed >= 0) cfg.seed = static_cast<std::uint64_t>(args.seed);
  if (args.repetitions > 0) cfg.repetitions = args.repetitions;
  if (args.duration_us > 0) cfg.duration_us = args.duration_us;
  if (args.jobs > 0) cfg.jobs = args.jobs;
  cfg.validate();
  return cfg;
}

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "experiment config file (key = value lines)");
  cmd->add_option("--preset", args.preset, "built-in preset: fig1, fig3, fig4, fig5-6, fig7-8");
  cmd->add_option("--out", args.out_dir, "output directory")->capture_default_str();
  cmd->add_option("--seed", args.seed, "override the config seed");
  cmd->add_option("--repetitions", args.repetitions, "override simulator repetitions");
  cmd->add_option("--duration-us", args.duration_us, "override simulated time per repetition");
  cmd->add_option("--jobs", args.jobs, "worker threads");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CSMA/CA aggregate-interference toolkit"};
  app.require_subcommand(1);

  CommonArgs args;
  bool write_traces = false;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "busy probability, effective density and interference law over the sweep");
  add_common(analyze, args);
  CLI::App* sample =
      app.add_subcommand("sample", "Monte Carlo point-process interference samples");
  add_common(sample, args);
  CLI::App* des = app.add_subcommand("des", "packet-level DCF simulation");
  add_common(des, args);
  des->add_flag("--traces", write_traces, "write per-repetition event traces");
  CLI::App* compare =
      app.add_subcommand("compare", "KS distances between analysis, Monte Carlo and simulator");
  add_common(compare, args);

  CLI11_PARSE(app, argc, argv);

  std::string command;
  try {
    if (analyze->parsed()) {
      command = "analyze";
      csmanet::cmd_analyze(load_config(args), args.out_dir);
    } else if (sample->parsed()) {
      command = "sample";
      csmanet::cmd_sample(load_config(args), args.out_dir);
    } else if (des->parsed()) {
      command = "des";
      csmanet::cmd_des(load_config(args), args.out_dir, write_traces);
    } else if (compare->parsed()) {
      command = "compare";
      csmanet::cmd_compare(load_config(args), args.out_dir);
    }
  } catch (const std::exception& e) {
    nlohmann::json err{{"command", command}, {"error", e.what()}};
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    return 1;
  }
  return 0;
}
