#ifndef FLATLIE_REPORT_HPP
#define FLATLIE_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flatlie/linalg.hpp"

namespace flatlie {

enum class Verdict { pass, fail, warn };

inline const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::pass: return "pass";
  case Verdict::fail: return "fail";
  default: return "warn";
  }
}

/// Counterexample data for a failed identity: the basis indices that were
/// being tested and the two evaluated sides of the identity.
struct Witness {
  std::vector<Index> indices;
  Vector left;
  Vector right;
};

struct Check {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::optional<Witness> witness;
  std::string note;
};

/// Ordered list of named verdicts produced by a verification operation.
struct Report {
  std::vector<Check> checks;

  bool passed() const {
    for (const Check& c : checks)
      if (c.verdict == Verdict::fail)
        return false;
    return true;
  }

  void add_pass(std::string name, std::string note = {}) {
    checks.push_back({std::move(name), Verdict::pass, std::nullopt, std::move(note)});
  }

  void add_fail(std::string name, std::optional<Witness> w = std::nullopt,
                std::string note = {}) {
    checks.push_back({std::move(name), Verdict::fail, std::move(w), std::move(note)});
  }

  void add_warn(std::string name, std::string note = {}) {
    checks.push_back({std::move(name), Verdict::warn, std::nullopt, std::move(note)});
  }

  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  /// Copy with every check renamed to prefix + name; used by the CLI to
  /// scope sub-reports, e.g. "flat_affine(alpha0).torsion".
  Report prefixed(const std::string& prefix) const {
    Report out = *this;
    for (Check& c : out.checks)
      c.name = prefix + c.name;
    return out;
  }
};

} // namespace flatlie

#endif
