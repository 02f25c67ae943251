#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace genk {

using Mode = std::array<int, 4>;

struct ModeResidual {
  Mode k;
  double residual;
};

/// Outcome of one certification: residual against threshold, with optional per-mode detail.
struct CheckOutcome {
  std::string name;
  std::string anchor;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  bool skipped = false;
  std::string note;
  std::vector<std::pair<std::string, double>> values;
  std::vector<ModeResidual> modes;

  void finish() { pass = skipped || residual <= threshold; }
  double value(const std::string& key) const {
    for (const auto& [k, v] : values)
      if (k == key) return v;
    return 0.0;
  }
};

}  // namespace genk
