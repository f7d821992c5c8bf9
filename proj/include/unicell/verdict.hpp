#pragma once

#include <optional>
#include <string>

namespace unicell {

struct Verdict {
  std::string check;
  std::string range;
  bool pass = true;
  std::optional<std::string> counterexample;

  static Verdict ok(std::string check, std::string range) {
    return Verdict{std::move(check), std::move(range), true, std::nullopt};
  }
  static Verdict fail(std::string check, std::string range, std::string counterexample) {
    return Verdict{std::move(check), std::move(range), false, std::move(counterexample)};
  }
};

}  // namespace unicell
