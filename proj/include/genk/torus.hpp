#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "genk/check.hpp"
#include "genk/clifford.hpp"
#include "genk/exterior.hpp"
#include "genk/gcs.hpp"

namespace genk {

/// Constant data on the flat torus ℝ⁴/ℤ⁴ with Fourier modes e^{2πi k·x}, |k|∞ ≤ radius.
struct TorusScenario {
  std::shared_ptr<const LieAlgebraData> algebra = LieAlgebraData::u1();
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(4, 4);
  int orientation = 1;
  Form<double> H = Form<double>(4);
  LaForm<double> A = LaForm<double>(4, LieAlgebraData::u1());
  std::optional<GKFiber> gk;
  int radius = 2;
  double tol = 1e-10;
};

std::vector<Mode> truncated_modes(int radius);

/// F = ½[A∧A] for constant A.
LaForm<double> curvature(const TorusScenario& S);
/// Norm of the self-dual part of F.
double self_dual_curvature_norm(const TorusScenario& S);
CheckOutcome moment_gate(const TorusScenario& S, double threshold = 1e-12);

/// Threads used for per-mode work; GENK_NUM_THREADS caps it.
int worker_threads();

/// Per-mode symbols of d_A^H on 𝔤-valued forms; index a·16 + I for component a and basis form I.
class TorusLab {
 public:
  explicit TorusLab(TorusScenario S);

  const TorusScenario& scenario() const { return S_; }
  int lie_dim() const { return d_; }
  Eigen::Index fiber_dim() const { return N_; }
  std::vector<Mode> modes() const { return truncated_modes(S_.radius); }

  /// d_A^H at mode k.
  Eigen::MatrixXcd symbol(const Mode& k) const;
  /// d_A at mode k.
  Eigen::MatrixXcd symbol_untwisted(const Mode& k) const;
  /// Coefficient matrices a_j(k) = 2πi k_j + ad(A_j) so that d_A = Σ_j a_j ⊗ dx^j∧.
  std::array<Eigen::MatrixXcd, 4> connection_coefficients(const Mode& k) const;

  const Eigen::MatrixXd& star() const { return star_; }
  const Eigen::MatrixXd& sd_projector() const { return sdp_; }
  /// κ ⊗ Chevalley; mode k pairs with mode −k through it.
  const Eigen::MatrixXd& chevalley() const { return C_; }
  /// Gram matrix of (u, v) ↦ ⟨u, ★v̄⟩ written as v* W u.
  const Eigen::MatrixXd& hermitian() const { return W_; }
  const Eigen::MatrixXd& hermitian_inverse() const { return Winv_; }
  /// W-orthonormal bases of Ω^ev₊ and Ω^od in the fiber.
  const Eigen::MatrixXcd& ev_plus() const { return E_; }
  const Eigen::MatrixXcd& odd() const { return O_; }

  /// Selector of form degree k on the full fiber.
  Eigen::MatrixXd degree_projector(int k) const;
  /// kron(Id_𝔤, U^{p,q} projector); requires a GK fiber.
  Eigen::MatrixXcd upq(int p, int q) const;
  Eigen::MatrixXcd jexp(int which) const;
  /// Lift a 16 × 16 form operator to the full fiber.
  Eigen::MatrixXcd lift(const Eigen::MatrixXcd& form_op) const;

  /// Matrix of F from span(src) to span(dst) for W-orthonormal bases.
  Eigen::MatrixXcd coords(const Eigen::MatrixXcd& dst, const Eigen::MatrixXcd& F, const Eigen::MatrixXcd& src) const;

 private:
  TorusScenario S_;
  int d_;
  Eigen::Index N_;
  std::array<Eigen::MatrixXd, 4> wedge_dx_;
  std::array<Eigen::MatrixXd, 4> ad_;
  Eigen::MatrixXd wedge_H_;
  Eigen::MatrixXd star_, sdp_, C_, W_, Winv_;
  Eigen::MatrixXcd E_, O_;
};

/// Per-mode complex Ω^ev₊ → Ω^od → Ω^ev₊ in W-orthonormal coordinates.
struct ModeComplex {
  Eigen::MatrixXcd d0;
  Eigen::MatrixXcd d1;
};
ModeComplex mode_complex(const TorusLab& lab, const Mode& k);

CheckOutcome lifted_action_check(const TorusLab& lab, std::uint64_t seed = 1, int samples = 20);
CheckOutcome integration_by_parts_check(const TorusLab& lab, std::uint64_t seed = 1, int pairs = 100);

struct ComplexAssembly {
  CheckOutcome check;
  Eigen::Index ev_plus_dim = 0;
  Eigen::Index odd_dim = 0;
};
ComplexAssembly complex_assemble(const TorusLab& lab);

struct HarmonicModes {
  Mode k;
  int harmonic_dim = 0;
  int cohomology_dim = 0;
  /// W-orthonormal harmonic odd forms in the full fiber.
  Eigen::MatrixXcd basis;
};
struct HarmonicSpaces {
  CheckOutcome check;
  std::vector<HarmonicModes> modes;
  int total = 0;
};
HarmonicSpaces harmonic_spaces(const TorusLab& lab);

struct LesMode {
  Mode k;
  /// Cohomology dimensions of the left, middle and right columns at degrees 0, 1, 2.
  std::array<std::array<int, 3>, 3> dims{};
  bool exact = false;
  double residual = 0.0;
};
struct LesReport {
  CheckOutcome check;
  std::vector<LesMode> modes;
  std::array<std::array<int, 3>, 3> totals{};
};
LesReport les_check(const TorusLab& lab);

/// (δ₊, δ₋, δ̄₊, δ̄₋) at mode k.
std::array<Eigen::MatrixXcd, 4> delta_decompose(const TorusLab& lab, const Mode& k);

CheckOutcome delta_decomposition_check(const TorusLab& lab);
CheckOutcome adjoint_check(const TorusLab& lab);
CheckOutcome laplacian_check(const TorusLab& lab);
CheckOutcome gk_inheritance_check(const TorusLab& lab);

}  // namespace genk
