#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "galois/classify.hpp"
#include "galois/error.hpp"

namespace galois::cli {

// Process exit classes. A batch run exits with the most severe class that
// occurred; individual failures never abort the batch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitReducible = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitParse = 4;
inline constexpr int kExitInternal = 5;

struct CliConfig {
  enum class Output { text, json };
  Output output = Output::text;
  bool emit_certificate = false;
  std::optional<std::uint32_t> dedekind_bound;  // run the Frobenius check when set
  std::optional<double> tol_sigma;
  std::optional<double> tol_theta;
  std::optional<int> max_iters;
  std::optional<std::string> batch_file;  // one polynomial per line, '#' comments
};

/// Classifies every input (positional expressions, or lines of the batch
/// file when configured), writes reports to out, and returns the exit class.
int run(const CliConfig& config, const std::vector<std::string>& inputs, std::ostream& out,
        std::ostream& err);

int exit_class_for(Error::Kind kind);

}  // namespace galois::cli
