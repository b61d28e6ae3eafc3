#ifndef NKGEO_SUITES_HPP
#define NKGEO_SUITES_HPP

#include <optional>
#include <string>
#include <vector>

#include "nkgeo/report.hpp"
#include "nkgeo/spec_io.hpp"

namespace nkgeo {

struct SuiteResult {
  std::string suite_name;
  std::vector<Check> checks;  // canonically ordered (sorted by tag)
  double elapsed_ms = 0;      // excluded from machine-readable output

  bool all_pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const Check* find(const std::string& tag) const {
    for (const Check& c : checks)
      if (c.tag == tag) return &c;
    return nullptr;
  }
};

extern const std::vector<std::string> kSuiteNames;  // without "all"

/// Runs one named suite (or "all"). p_override replaces the conformal
/// pressure of the soliton section when given. Throws SpecError for
/// unknown suite names or unmet prerequisites.
std::vector<SuiteResult> run_suite(const std::string& name,
                                   const Instance& inst,
                                   std::optional<Rational> p_override = {});

struct SweepEntry {
  Rational delta;
  std::vector<SuiteResult> results;
  std::string error;  // per-instance failures are collected, not fatal
};

std::vector<SweepEntry> sweep_delta(const std::vector<Rational>& deltas,
                                    const std::string& suite,
                                    std::optional<Rational> p_override = {});

}  // namespace nkgeo

#endif
