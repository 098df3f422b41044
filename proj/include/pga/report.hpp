#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pga {

/// One failed condition. `rule` names the axiom, `witness` lists the arrows
/// and atoms involved in the order they were visited.
struct Violation {
  std::string rule;
  std::vector<std::string> witness;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

enum class VerifyMode { First, All };

struct Report {
  std::vector<Violation> violations;
  VerifyMode mode = VerifyMode::First;

  bool ok() const noexcept { return violations.empty(); }
  /// True once a First-mode report has its witness.
  bool done() const noexcept { return mode == VerifyMode::First && !ok(); }

  void add(std::string rule, std::vector<std::string> witness, std::string detail = {}) {
    if (done()) return;
    violations.push_back({std::move(rule), std::move(witness), std::move(detail)});
  }
  void merge(const Report& other) {
    for (const auto& v : other.violations) {
      if (done()) return;
      violations.push_back(v);
    }
  }
  bool has(const std::string& rule) const {
    for (const auto& v : violations) {
      if (v.rule == rule) return true;
    }
    return false;
  }
  const Violation* first() const { return violations.empty() ? nullptr : &violations.front(); }

  std::string describe() const {
    if (ok()) return "pass";
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "\n";
      s += v.rule + " at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) s += (i ? "," : "") + v.witness[i];
      s += ")";
      if (!v.detail.empty()) s += ": " + v.detail;
    }
    return s;
  }
};

}  // namespace pga
