#include "monocurve/report.hpp"

#include <algorithm>

namespace monocurve {

CheckResult CheckResult::pass(std::string name, std::string detail) {
  return {std::move(name), true, std::move(detail), nullptr};
}

CheckResult CheckResult::fail(std::string name, std::string detail, nlohmann::json witness) {
  return {std::move(name), false, std::move(detail), std::move(witness)};
}

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(),
                         [&](const CheckResult& c) { return c.check == name; });
  return it == checks.end() ? nullptr : &*it;
}

}  // namespace monocurve
