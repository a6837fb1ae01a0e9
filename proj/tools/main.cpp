#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lflow/commands.hpp"
#include "lflow/config.hpp"

int main(int argc, char** argv) {
  using namespace lflow::cli;

  CLI::App app{"Spacelike curve flows u_t = (v(u_x))_x with Neumann slope data"};
  app.require_subcommand(1);

  std::string output_dir = ".";
  bool quiet = false;
  app.add_option("--output-dir", output_dir, "Directory for all output files");
  app.add_flag("--quiet", quiet, "Suppress summaries on stdout");

  std::string config_path;
  bool plot = false;
  auto* run_cmd = app.add_subcommand("run", "Integrate the flow and write trace/profile CSVs");
  run_cmd->add_option("--config", config_path, "JSON configuration")->required();
  run_cmd->add_flag("--plot", plot, "Also write an SVG overlay of final state and translator");
  auto* verify_cmd = app.add_subcommand("verify", "Integrate and evaluate every invariant checker");
  verify_cmd->add_option("--config", config_path, "JSON configuration")->required();
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep and write a summary CSV");
  sweep_cmd->add_option("--config", config_path, "JSON configuration")->required();
  auto* profile_cmd = app.add_subcommand("profile", "Write the translating profile only");
  profile_cmd->add_option("--config", config_path, "JSON configuration")->required();

  for (auto* sub : {run_cmd, verify_cmd, sweep_cmd, profile_cmd}) {
    sub->add_option("--output-dir", output_dir, "Directory for all output files");
    sub->add_flag("--quiet", quiet, "Suppress summaries on stdout");
  }

  CLI11_PARSE(app, argc, argv);

  RunConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }

  CommandOptions opts;
  opts.output_dir = output_dir;
  opts.quiet = quiet;
  opts.plot = plot;

  if (*run_cmd) return cmd_run(cfg, opts, std::cout, std::cerr);
  if (*verify_cmd) return cmd_verify(cfg, opts, std::cout, std::cerr);
  if (*sweep_cmd) return cmd_sweep(cfg, opts, std::cout, std::cerr);
  return cmd_profile(cfg, opts, std::cout, std::cerr);
}
