#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "galois/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "galois - Galois groups of irreducible rational polynomials of degree at most five,\n"
      "with a verifiable certificate for every classification."};

  galois::cli::CliConfig config;
  std::vector<std::string> inputs;
  bool json = false;
  std::string batch;
  double tol_sigma = 0, tol_theta = 0;
  int max_iters = 0;
  std::uint32_t dedekind_bound = 0;

  // positionals are collected via remaining(): CLI11 vector options expand
  // bracketed arguments like "[1,0,1,1]" into list elements, which would
  // destroy coefficient-list inputs
  app.allow_extras();
  app.footer(
      "Positional arguments are polynomials: expressions (\"x^5 - 5x + 12\") or\n"
      "coefficient lists highest degree first (\"[1,0,0,0,-5,12]\").");
  app.add_flag("--json", json, "emit reports as JSON (schema_version 1)");
  app.add_flag("--certificate", config.emit_certificate,
               "include the full evidence trail in text output");
  app.add_option("--batch", batch, "classify one polynomial per line of FILE; '#' comments");
  app.add_flag("--dedekind{200}", dedekind_bound,
               "verify the result against factor patterns modulo all primes up to "
               "BOUND (bare flag uses 200; pass --dedekind=BOUND to override)");
  app.add_option("--tol-sigma", tol_sigma, "sigma integrality tolerance (default 1e-3)");
  app.add_option("--tol-theta", tol_theta, "theta ordering tolerance (default 1e-3)");
  app.add_option("--max-iters", max_iters, "root-finding iteration budget (default 500)");

  CLI11_PARSE(app, argc, argv);
  inputs = app.remaining();

  if (json) config.output = galois::cli::CliConfig::Output::json;
  if (!batch.empty()) config.batch_file = batch;
  if (dedekind_bound > 0) config.dedekind_bound = std::max<std::uint32_t>(2, dedekind_bound);
  if (tol_sigma > 0) config.tol_sigma = tol_sigma;
  if (tol_theta > 0) config.tol_theta = tol_theta;
  if (max_iters > 0) config.max_iters = max_iters;

  return galois::cli::run(config, inputs, std::cout, std::cerr);
}
