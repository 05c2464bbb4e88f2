#pragma once

#include "monocurve/semigroup.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace monocurve {

/// Outcome of one named check. A failing check carries a witness (serialized
/// polynomials / module elements / pairs) explaining the failure.
struct CheckResult {
  std::string check;
  bool passed = true;
  std::string detail;
  nlohmann::json witness;  // null when absent

  static CheckResult pass(std::string name, std::string detail = {});
  static CheckResult fail(std::string name, std::string detail, nlohmann::json witness = nullptr);
};

struct VerificationReport {
  CurveParams params;
  std::vector<CheckResult> checks;

  explicit VerificationReport(CurveParams p) : params(std::move(p)) {}

  bool passed() const;
  std::size_t failures() const;
  void add(CheckResult check) { checks.push_back(std::move(check)); }
  void append(const VerificationReport& other);
  /// nullptr when absent.
  const CheckResult* find(const std::string& name) const;
};

}  // namespace monocurve
