// nkgeo-verify: exact verification CLI for homogeneous contact metric
// frame instances. Subcommands:
//   verify <spec.json> [--suite NAME] [--p RATIONAL] [--format text|json]
//   sweep --delta LIST [--suite NAME] [--p RATIONAL] [--format text|json]
//   example --delta RATIONAL [--emit FILE]
// Exit code 0 iff every requested check passes; the first failing tag is
// written to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nkgeo/suites.hpp"

namespace {

using nkgeo::Check;
using nkgeo::Rational;
using nkgeo::SuiteResult;
using nkgeo::SweepEntry;
using nlohmann::json;

std::vector<Rational> parse_delta_list(const std::string& list) {
  std::vector<Rational> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(nkgeo::parse_rational(item));
  }
  if (out.empty()) throw std::invalid_argument("empty --delta list");
  return out;
}

json suite_json(const SuiteResult& s) {
  json checks = json::array();
  for (const Check& c : s.checks)
    checks.push_back({{"tag", c.tag},
                      {"residual", nkgeo::to_string(c.residual)},
                      {"pass", c.pass},
                      {"note", c.note}});
  return {{"suite", s.suite_name},
          {"all_pass", s.all_pass()},
          {"checks", std::move(checks)}};
}

void print_suite_text(std::ostream& os, const SuiteResult& s) {
  os << "suite " << s.suite_name << ": "
     << (s.all_pass() ? "PASS" : "FAIL") << " (" << s.checks.size()
     << " checks, " << s.elapsed_ms << " ms)\n";
  for (const Check& c : s.checks) {
    os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.tag
       << "  residual=" << nkgeo::to_string(c.residual);
    if (!c.note.empty()) os << "  -- " << c.note;
    os << "\n";
  }
}

/// Returns the first failing tag, if any.
std::optional<std::string> first_failure(const std::vector<SuiteResult>& rs) {
  for (const SuiteResult& s : rs)
    for (const Check& c : s.checks)
      if (!c.pass) return s.suite_name + "/" + c.tag;
  return std::nullopt;
}

int emit_and_exit(const std::vector<SuiteResult>& results,
                  const std::string& format, const char* command) {
  std::optional<std::string> fail = first_failure(results);
  if (format == "json") {
    json doc = {{"command", command},
                {"all_pass", !fail.has_value()},
                {"suites", json::array()}};
    for (const SuiteResult& s : results) doc["suites"].push_back(suite_json(s));
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const SuiteResult& s : results) print_suite_text(std::cout, s);
    std::cout << (fail ? "RESULT: FAIL" : "RESULT: PASS") << "\n";
  }
  if (fail) {
    std::cerr << "first failing check: " << *fail << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tensor-calculus verifier for homogeneous contact "
               "metric frame instances"};
  app.require_subcommand(1);

  std::string spec_path, suite = "all", format = "text";
  std::string p_string, delta_list = "0,1/2,1,2", delta_string, emit_path;

  CLI::App* verify = app.add_subcommand("verify", "Run suites on a spec file");
  verify->add_option("spec", spec_path, "JSON manifold spec file")->required();
  verify->add_option("--suite", suite, "Suite name or \"all\"");
  verify->add_option("--p", p_string, "Override the conformal pressure");
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Run a suite across delta-family instances");
  sweep->add_option("--delta", delta_list, "Comma-separated delta values");
  sweep->add_option("--suite", suite, "Suite name or \"all\"");
  sweep->add_option("--p", p_string, "Override the conformal pressure");
  sweep->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* example =
      app.add_subcommand("example", "Emit a delta-family spec file");
  example->add_option("--delta", delta_string, "Delta value")->required();
  example->add_option("--emit", emit_path, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<Rational> p_override;
    if (!p_string.empty()) p_override = nkgeo::parse_rational(p_string);

    if (verify->parsed()) {
      nkgeo::Instance inst = nkgeo::load_spec(spec_path);
      return emit_and_exit(nkgeo::run_suite(suite, inst, p_override), format,
                           "verify");
    }

    if (sweep->parsed()) {
      std::vector<SweepEntry> entries =
          nkgeo::sweep_delta(parse_delta_list(delta_list), suite, p_override);
      bool any_error = false;
      if (format == "json") {
        json doc = {{"command", "sweep"}, {"entries", json::array()}};
        for (const SweepEntry& e : entries) {
          json ej = {{"delta", nkgeo::to_string(e.delta)},
                     {"suites", json::array()}};
          if (!e.error.empty()) {
            ej["error"] = e.error;
            any_error = true;
          }
          for (const SuiteResult& s : e.results)
            ej["suites"].push_back(suite_json(s));
          doc["entries"].push_back(std::move(ej));
        }
        std::optional<std::string> fail;
        for (const SweepEntry& e : entries)
          if (!fail) fail = first_failure(e.results);
        doc["all_pass"] = !any_error && !fail;
        std::cout << doc.dump(2) << "\n";
        if (fail) std::cerr << "first failing check: " << *fail << "\n";
        if (any_error) std::cerr << "sweep: instance errors occurred\n";
        return (any_error || fail) ? 1 : 0;
      }
      int rc = 0;
      for (const SweepEntry& e : entries) {
        std::cout << "== delta = " << nkgeo::to_string(e.delta) << " ==\n";
        if (!e.error.empty()) {
          std::cout << "error: " << e.error << "\n";
          std::cerr << "sweep error at delta " << nkgeo::to_string(e.delta)
                    << ": " << e.error << "\n";
          rc = 1;
          continue;
        }
        for (const SuiteResult& s : e.results) print_suite_text(std::cout, s);
        if (std::optional<std::string> fail = first_failure(e.results)) {
          if (rc == 0) std::cerr << "first failing check: " << *fail << "\n";
          rc = 1;
        }
      }
      std::cout << (rc == 0 ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
      return rc;
    }

    // example
    std::string doc =
        nkgeo::standard_example_spec_json(nkgeo::parse_rational(delta_string));
    if (emit_path.empty()) {
      std::cout << doc;
    } else {
      std::ofstream out(emit_path);
      if (!out) throw std::runtime_error("cannot write " + emit_path);
      out << doc;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
