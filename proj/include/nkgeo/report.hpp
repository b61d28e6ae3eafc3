#ifndef NKGEO_REPORT_HPP
#define NKGEO_REPORT_HPP

#include <string>
#include <vector>

#include "nkgeo/rational.hpp"
#include "nkgeo/tensor.hpp"

namespace nkgeo {

/// One verified identity: the equation tag it exercises, the max-norm of
/// the residual (a Rational, "0" iff pass) and an optional note.
struct Check {
  std::string tag;
  Rational residual;
  bool pass = false;
  std::string note;
};

struct Report {
  std::vector<Check> checks;

  void add(std::string tag, Rational residual, std::string note = "") {
    bool ok = (residual == 0);
    checks.push_back({std::move(tag), std::move(residual), ok, std::move(note)});
  }
  void add(std::string tag, const Tensor& residual, std::string note = "") {
    add(std::move(tag), residual.max_abs(), std::move(note));
  }
  /// Non-residual verdicts (e.g. detected conventions).
  void add_flag(std::string tag, bool ok, std::string note = "") {
    checks.push_back({std::move(tag), ok ? Rational(0) : Rational(1), ok,
                      std::move(note)});
  }
  void merge(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  }
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

}  // namespace nkgeo

#endif
