#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "genk/reduction.hpp"
#include "genk/serialize.hpp"
#include "genk/torus.hpp"

namespace genk {

struct Tiers {
  bool fiber = false;
  bool reduction = false;
  bool metric_lab = false;
  bool gk_lab = false;
};

struct ReductionSpec {
  /// Generators as columns in stacked coordinates.
  Eigen::MatrixXd K;
  int n_action = 0;
  /// Connection covectors θ^a as columns, one per action generator.
  std::optional<Eigen::MatrixXd> theta;
};

struct Scenario {
  std::string name;
  Tiers tiers;
  std::shared_ptr<const LieAlgebraData> algebra = LieAlgebraData::u1();
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(4, 4);
  int orientation = 1;
  Form<double> H = Form<double>(4);
  LaForm<double> A = LaForm<double>(4, LieAlgebraData::u1());
  std::optional<GKFiber> gk;
  std::optional<ReductionSpec> reduction;
  int radius = 2;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  bool exact = false;

  TorusScenario torus() const;
  /// The generalized metric: the GK metric when present, otherwise the block form of g.
  GenMetric metric() const;
};

/// Throws InvalidInput on unknown keys, malformed payloads, or inconsistent tiers.
Scenario parse_scenario(const json& j);
Scenario load_scenario(const std::string& path);
/// Tier consistency; called by parse_scenario and again after CLI overrides.
void validate_scenario(const Scenario& s);

}  // namespace genk
