#include <cstdint>
#include <iostream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "krein/commands.hpp"
#include "krein/config.hpp"
#include "krein/types.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Krein-space extension toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format;

  const std::pair<const char*, const char*> commands[] = {
      {"verify", "run the identity checks and report residuals"},
      {"classify", "classify an extension parameter U (JSON)"},
      {"weyl", "evaluate the shift-model Weyl function"},
      {"resolvent-check", "compare the Krein resolvent formula with a direct solve"},
      {"sweep", "spectra of the Schroedinger model along a family of U"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "JSON run configuration");
    sub->add_option("--seed", seed, "random seed (overrides config)");
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : krein::kExitConfig;
  }

  const CLI::App* sub = app.get_subcommands().front();
  krein::RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = krein::load_config(config_path);
  } catch (const krein::Error& e) {
    std::cerr << e.what() << '\n';
    return krein::kExitConfig;
  }
  if (sub->count("--seed")) cfg.seed = seed;
  if (sub->count("--out")) cfg.out = out_path;
  if (sub->count("--format")) cfg.format = format;

  return krein::run_command(sub->get_name(), cfg, std::cout, std::cerr);
}
