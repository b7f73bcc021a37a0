#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace chtilde {

/// One checked statement. Failures are data: `witness` names the smallest
/// failing instance found.
struct Assertion {
  std::string name;
  std::string anchor;
  bool passed = true;
  std::string witness;
};

struct Report {
  std::string title;
  std::vector<Assertion> assertions;

  bool all_passed() const {
    return std::all_of(assertions.begin(), assertions.end(),
                       [](const Assertion& a) { return a.passed; });
  }
  void add(Assertion a) { assertions.push_back(std::move(a)); }
};

}  // namespace chtilde
