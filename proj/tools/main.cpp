#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

#include "cli/jobs.hpp"

namespace {

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

}  // namespace

int main(int argc, char** argv) {
  using critconf::cli::Json;
  CLI::App app{"Critical configurations of two projective cameras"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::string input = "-";
  std::string output = "-";
  std::string mode = "exact";
  critconf::cli::Defaults defaults;
  bool batch = false;
  app.add_option("--input", input, "job document, '-' for stdin");
  app.add_option("--output", output, "report destination, '-' for stdout");
  app.add_option("--mode", mode, "number handling")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tolerance", defaults.tolerance, "residual tolerance for float comparisons")
      ->check(CLI::PositiveNumber);
  app.add_option("--samples", defaults.samples, "members sampled from infinite families")->check(CLI::PositiveNumber);
  app.add_option("--seed", defaults.seed, "seed for family sampling");
  app.add_flag("--batch", batch, "input is a JSON array of jobs");

  const char* commands[] = {"fundamental", "classify-quadric", "is-critical", "conjugates",
                            "verify-images", "curve-map", "one-view"};
  for (const char* c : commands) app.add_subcommand(c, std::string("run a '") + c + "' job");

  CLI11_PARSE(app, argc, argv);
  defaults.mode = mode == "float" ? critconf::cli::NumberMode::Float : critconf::cli::NumberMode::Exact;

  std::string text;
  if (input == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "cannot read " << input << "\n";
      return 1;
    }
    text = read_all(in);
  }

  if (!app.get_subcommands().empty()) defaults.command = app.get_subcommands().front()->get_name();

  const auto result = critconf::cli::run_text(text, batch, defaults);
  const std::string rendered = result.report.dump(2) + "\n";
  if (output == "-") {
    std::cout << rendered;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "cannot write " << output << "\n";
      return 1;
    }
    out << rendered;
  }
  return result.exit_code;
}
