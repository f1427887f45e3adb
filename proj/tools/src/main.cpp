#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qwedge_app/commands.hpp"

namespace app = qwedge::app;

int main(int argc, char** argv) {
  CLI::App cli{"qwedge: two-fermion embedding of qudit states and their negativity"};
  cli.require_subcommand(1);

  std::string input;
  std::string output;
  std::size_t d = 3;
  bool raw = false;
  std::string step_text;
  std::uint64_t seed = app::kDefaultSeed;

  const auto add_d = [&](CLI::App* sub) {
    sub->add_option("--d", d, "single-fermion dimension")->capture_default_str();
  };

  auto* negativity = cli.add_subcommand("negativity", "negativity of the embedded state");
  negativity->add_option("input", input, "state file of dimension d(d-1)/2")->required();
  add_d(negativity);

  auto* embed = cli.add_subcommand("embed", "write the d^2 x d^2 two-fermion state");
  embed->add_option("input", input, "state file of dimension d(d-1)/2")->required();
  embed->add_option("--output,-o", output, "output state file")->required();
  add_d(embed);

  auto* extract = cli.add_subcommand("extract", "recover the qudit state from a two-fermion state");
  extract->add_option("input", input, "two-fermion state file (d^2 x d^2)")->required();
  extract->add_option("--output,-o", output, "output state file")->required();
  extract->add_flag("--raw", raw, "skip density-matrix validation of the input");
  add_d(extract);

  auto* ptranspose =
      cli.add_subcommand("ptranspose", "write the partial transpose of the embedded state");
  ptranspose->add_option("input", input, "state file of dimension d(d-1)/2")->required();
  ptranspose->add_option("--output,-o", output, "output matrix file")->required();
  add_d(ptranspose);

  auto* sweep = cli.add_subcommand("sweep", "negativity of diag(p1,p2,p3) over a simplex grid");
  sweep->add_option("--step", step_text, "grid step, decimal or fraction (e.g. 1/3)")->required();
  sweep->add_option("--output,-o", output, "CSV path (default: standard output)");

  auto* verify = cli.add_subcommand("verify", "check every reproducibility claim");
  verify->add_option("--seed", seed, "seed for sampled states")->capture_default_str();

  try {
    cli.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return cli.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return cli.exit(e);
  } catch (const CLI::ParseError& e) {
    cli.exit(e);
    return app::exit_code::kBadFlag;
  }

  const app::Streams io{std::cout, std::cerr};
  if (*negativity) return app::cmd_negativity(input, d, io);
  if (*embed) return app::cmd_embed(input, d, output, io);
  if (*extract) return app::cmd_extract(input, d, output, raw, io);
  if (*ptranspose) return app::cmd_ptranspose(input, d, output, io);
  if (*sweep) {
    const auto step = app::parse_step(step_text);
    if (!step) {
      std::cerr << "invalid --step '" << step_text << "'\n";
      return app::exit_code::kBadFlag;
    }
    return app::cmd_sweep(*step, output, io);
  }
  return app::cmd_verify(seed, io);
}
