#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bomega {

/// Outcome of a bounded sweep. A failed report always carries the
/// lexicographically first counterexample, rendered in the element text forms.
struct VerificationReport {
  bool passed = true;
  std::size_t checked = 0;
  std::optional<std::vector<std::string>> counterexample;
  std::string note;

  void fail(std::vector<std::string> witness, std::string why) {
    if (!passed) return;
    passed = false;
    counterexample = std::move(witness);
    note = std::move(why);
  }
};

}  // namespace bomega
