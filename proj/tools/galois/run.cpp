#include "galois/run.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "galois/error.hpp"
#include "galois/parse.hpp"

namespace galois::cli {

namespace {

using nlohmann::json;

struct LineResult {
  std::string input;
  std::optional<ClassifyReport> report;
  std::optional<Error::Kind> error_kind;
  std::string error_message;
  int exit_class = kExitOk;
  double total_ms = 0;
};

std::string format_complex(Complex z, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << z.real();
  if (z.imag() != 0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

std::vector<std::string> coeffs_desc_strings(const IntPoly& p) {
  std::vector<std::string> out;
  for (int i = p.degree(); i >= 0; --i) out.push_back(p.coeff(i).str());
  return out;
}

void emit_text(const LineResult& line, const CliConfig& config, std::ostream& out) {
  if (!line.report) {
    out << line.input << ": error: " << line.error_message << "\n";
    return;
  }
  const ClassifyReport& rep = *line.report;
  const GroupInfo& g = info(rep.group);
  out << line.input << ": " << g.name << " (" << g.description << ")\n";
  for (const auto& w : rep.warnings) out << "  warning: " << w << "\n";
  if (rep.dedekind_checked)
    out << "  dedekind check: " << (*rep.dedekind_checked ? "consistent" : "FAILED") << "\n";
  if (!config.emit_certificate) return;

  const Certificate& cert = rep.certificate;
  out << "  normalized: " << to_string(cert.normalized) << "\n";
  if (cert.lambda != 1) out << "  lambda: " << cert.lambda.str() << "\n";
  if (cert.shift != 0) out << "  shift: " << cert.shift.str() << "\n";
  out << "  delta: " << cert.delta.str();
  if (cert.delta_sqrt)
    out << " = (" << cert.delta_sqrt->str() << ")^2";
  else
    out << " (not a square)";
  out << "\n";
  if (cert.resolvent) out << "  resolvent: " << to_string(*cert.resolvent) << "\n";
  if (cert.resolvent_root) out << "  resolvent root: " << cert.resolvent_root->str() << "\n";
  if (cert.kappe_warren) {
    const auto& kw = *cert.kappe_warren;
    out << "  products: " << kw.n1.str();
    if (kw.n1_sqrt) out << " = (" << kw.n1_sqrt->str() << ")^2";
    out << ", " << kw.n2.str();
    if (kw.n2_sqrt) out << " = (" << kw.n2_sqrt->str() << ")^2";
    out << (kw.both_square ? " (both square)" : " (not both square)") << "\n";
  }
  if (cert.theta_ordering) {
    const auto& to = *cert.theta_ordering;
    out << "  theta1: " << to.target.str() << " (numeric " << format_complex(to.theta_value)
        << ", mismatch " << std::setprecision(3) << to.mismatch << ", tolerance "
        << cert.tolerances.theta << ")\n";
  }
  if (cert.sigma1) {
    out << "  sigma1: " << format_complex(*cert.sigma1);
    if (cert.sigma1_integer)
      out << " = integer " << cert.sigma1_integer->str();
    else
      out << " (not an integer)";
    out << " (tolerance " << cert.tolerances.sigma << ")\n";
  }
}

json certificate_json(const Certificate& cert) {
  json c;
  c["delta"] = cert.delta.str();
  c["delta_is_square"] = cert.delta_sqrt.has_value();
  if (cert.delta_sqrt) c["delta_sqrt"] = cert.delta_sqrt->str();
  if (cert.resolvent) c["resolvent_coeffs"] = coeffs_desc_strings(*cert.resolvent);
  if (cert.resolvent_root) c["resolvent_root"] = cert.resolvent_root->str();
  if (cert.kappe_warren) {
    const auto& kw = *cert.kappe_warren;
    c["kappe_warren"] = {{"n1", kw.n1.str()}, {"n2", kw.n2.str()}, {"both_square", kw.both_square}};
  }
  if (cert.theta_ordering) c["theta1"] = cert.theta_ordering->target.str();
  if (cert.sigma1) {
    json s;
    s["re"] = cert.sigma1->real();
    s["im"] = cert.sigma1->imag();
    if (cert.sigma1_integer) s["as_integer"] = cert.sigma1_integer->str();
    c["sigma1"] = s;
  }
  return c;
}

json line_json(const LineResult& line) {
  json j;
  j["schema_version"] = 1;
  j["input"] = line.input;
  j["exit_class"] = line.exit_class;
  j["timings"] = {{"total_ms", line.total_ms}};
  if (!line.report) {
    j["error"] = line.error_message;
    j["warnings"] = json::array();
    return j;
  }
  const ClassifyReport& rep = *line.report;
  const Certificate& cert = rep.certificate;
  j["normalized_coeffs"] = coeffs_desc_strings(cert.normalized);
  j["lambda"] = cert.lambda.str();
  j["shift"] = cert.shift.str();
  j["group"] = std::string(info(rep.group).name);
  j["group_order"] = info(rep.group).order;
  j["certificate"] = certificate_json(cert);
  j["warnings"] = rep.warnings;
  if (rep.dedekind_checked) j["dedekind_checked"] = *rep.dedekind_checked;
  return j;
}

LineResult classify_line(const std::string& input, const CliConfig& config) {
  LineResult line;
  line.input = input;
  const auto start = std::chrono::steady_clock::now();
  try {
    ClassifyOptions opts;
    if (config.tol_sigma) opts.tol.sigma = *config.tol_sigma;
    if (config.tol_theta) opts.tol.theta = *config.tol_theta;
    if (config.max_iters) opts.tol.max_iterations = *config.max_iters;

    RatPoly g = parse_poly(input);
    ClassifyReport report = classify(g, opts);
    if (config.dedekind_bound) {
      const bool ok =
          dedekind_check(report.certificate.input, report.group, *config.dedekind_bound);
      report.dedekind_checked = ok;
      if (!ok) {
        line.exit_class = kExitInternal;
        line.error_message =
            "dedekind check failed: some residue cycle type is not an element cycle type of " +
            std::string(info(report.group).name);
      }
    }
    line.report = std::move(report);
  } catch (const Error& e) {
    line.error_kind = e.kind();
    line.error_message = e.what();
    line.exit_class = exit_class_for(e.kind());
  }
  line.total_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return line;
}

}  // namespace

int exit_class_for(Error::Kind kind) {
  switch (kind) {
    case Error::Kind::parse_error:
    case Error::Kind::degree_out_of_range:
      return kExitParse;
    case Error::Kind::reducible_input:
      return kExitReducible;
    case Error::Kind::numeric_ambiguity:
    case Error::Kind::convergence_failure:
    case Error::Kind::precision_exceeded:
      return kExitNumeric;
    case Error::Kind::internal_invariant:
      return kExitInternal;
  }
  return kExitInternal;
}

int run(const CliConfig& config, const std::vector<std::string>& inputs, std::ostream& out,
        std::ostream& err) {
  std::vector<std::string> work = inputs;
  if (config.batch_file) {
    std::ifstream in(*config.batch_file);
    if (!in) {
      err << "cannot open batch file: " << *config.batch_file << "\n";
      return kExitParse;
    }
    std::string raw;
    while (std::getline(in, raw)) {
      const auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      const auto begin = raw.find_first_not_of(" \t\r");
      if (begin == std::string::npos) continue;
      const auto end = raw.find_last_not_of(" \t\r");
      work.push_back(raw.substr(begin, end - begin + 1));
    }
  }
  if (work.empty()) {
    err << "no input polynomials\n";
    return kExitParse;
  }

  int exit_class = kExitOk;
  json all = json::array();
  for (const auto& input : work) {
    LineResult line = classify_line(input, config);
    exit_class = std::max(exit_class, line.exit_class);
    if (config.output == CliConfig::Output::json)
      all.push_back(line_json(line));
    else
      emit_text(line, config, out);
  }
  if (config.output == CliConfig::Output::json) {
    if (all.size() == 1)
      out << all.front().dump(2) << "\n";
    else
      out << all.dump(2) << "\n";
  }
  return exit_class;
}

}  // namespace galois::cli
