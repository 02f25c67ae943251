#pragma once

#include <string>
#include <vector>

#include "genk/catalog.hpp"
#include "genk/check.hpp"
#include "genk/scenario.hpp"

namespace genk {

using ordered_json = nlohmann::ordered_json;

struct Report {
  std::string scenario;
  std::uint64_t seed = 1;
  int radius = 0;
  double tol = 0.0;
  std::string arithmetic = "double";
  std::vector<CheckOutcome> checks;

  bool pass() const;
};

/// ★² = Id and ★ = e^B ⋆± e^{−B} against the Riemannian star of the metric splitting.
CheckOutcome hodge_star_law_check(const GenMetric& G, int orientation, double tol);
/// Quotient pairing, K^𝔾 dimension and conditioning, and g|τ₊ against the reduced V₊.
CheckOutcome reduction_fiber_check(const ReductionProblem& P, double tol);
/// i_{X_γ} B_θ = ξ_γ; exact comparison in rational mode.
CheckOutcome b_theta_check(const ReductionSpec& R, bool exact, double tol);
CheckOutcome gk_reduction_check(const ReductionProblem& P, const GKFiber& K, double tol);

/// Runs all enabled tiers. Throws InvalidInput, InvariantViolation or NotInstanton for unusable scenarios.
Report run_scenario(const Scenario& s);

ordered_json report_to_json(const Report& r);
Report report_from_json(const ordered_json& j);
/// One row per (check, mode); checks without per-mode data get a single row with empty mode fields.
std::string report_to_csv(const Report& r);
std::string report_table(const Report& r);

}  // namespace genk
