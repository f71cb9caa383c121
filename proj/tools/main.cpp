#include "cuntzli/report_io.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{
      "cuntzli: exact K-groups of the Cuntz-Li algebra of an integer dilation matrix"};
  app.require_subcommand(1);

  cuntzli::RunConfig config;
  std::string format = "text";

  CLI::App* compute = app.add_subcommand(
      "compute", "certify the matrix, compute K0 and K1 through both presentations");
  compute->add_option("input", config.input, "matrix file, or - for standard input")->required();
  compute->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  bool no_cross_check = false;
  compute->add_flag("--no-cross-check", no_cross_check, "skip the B_n-form cross-validation");
  compute->add_flag("--emit-matrices", config.emit_matrices,
                    "include the per-degree matrices in JSON output");
  compute->add_option("--max-size", config.max_degree_size,
                      "abort when binomial(d, d/2) exceeds this bound")
      ->capture_default_str();
  compute->add_option("--level-cap", config.level_cap,
                      "level cap for colimit membership queries")
      ->capture_default_str();

  std::string check_input;
  CLI::App* check = app.add_subcommand("check", "certification only (exit 0/2)");
  check->add_option("input", check_input, "matrix file, or - for standard input")->required();

  CLI11_PARSE(app, argc, argv);

  if (compute->parsed()) {
    config.with_cross_check = !no_cross_check;
    config.format = format == "json" ? cuntzli::RunConfig::Format::Json
                                     : cuntzli::RunConfig::Format::Text;
    return cuntzli::run_compute(config, std::cout, std::cerr);
  }
  return cuntzli::run_check(check_input, std::cout, std::cerr);
}
