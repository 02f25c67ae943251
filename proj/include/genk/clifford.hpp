#pragma once

#include <utility>

#include <Eigen/Dense>

#include "genk/exterior.hpp"

namespace genk {

/// X + ξ in V ⊕ V*.
template <typename S>
struct GenVector {
  VecX<S> X;
  VecX<S> xi;

  GenVector() = default;
  explicit GenVector(int m) : X(VecX<S>::Zero(m)), xi(VecX<S>::Zero(m)) {}
  GenVector(VecX<S> X_, VecX<S> xi_) : X(std::move(X_)), xi(std::move(xi_)) {
    if (X.size() != xi.size()) throw DimensionMismatch("tangent and cotangent parts of different dimension");
  }

  static GenVector tangent(int m, int i) {
    GenVector v(m);
    v.X(i - 1) = S(1);
    return v;
  }
  static GenVector cotangent(int m, int i) {
    GenVector v(m);
    v.xi(i - 1) = S(1);
    return v;
  }
  /// Inverse of stacked(): first m entries tangent, last m cotangent.
  static GenVector from_stacked(const VecX<S>& s) {
    const Eigen::Index m = s.size() / 2;
    return GenVector(s.head(m), s.tail(m));
  }

  int dim() const { return int(X.size()); }
  VecX<S> stacked() const {
    VecX<S> s(2 * X.size());
    s << X, xi;
    return s;
  }

  friend GenVector operator+(const GenVector& a, const GenVector& b) { return {a.X + b.X, a.xi + b.xi}; }
  friend GenVector operator-(const GenVector& a, const GenVector& b) { return {a.X - b.X, a.xi - b.xi}; }
  friend GenVector operator*(const S& s, const GenVector& a) { return {s * a.X, s * a.xi}; }
};

/// ⟨X+ξ, Y+η⟩ = ½(η(X) + ξ(Y)).
template <typename S>
S natural_pairing(const GenVector<S>& v, const GenVector<S>& w) {
  if (v.dim() != w.dim()) throw DimensionMismatch("generalized vectors of different dimension");
  return (w.xi.cwiseProduct(v.X).sum() + v.xi.cwiseProduct(w.X).sum()) / S(2);
}

/// Gram matrix of the natural pairing on stacked coordinates.
Eigen::MatrixXd pairing_matrix(int m);

/// (X+ξ)·φ = i_X φ + ξ∧φ.
template <typename S>
Form<S> clifford_act(const GenVector<S>& v, const Form<S>& a) {
  if (v.dim() != a.dim()) throw DimensionMismatch("vector and form of different dimension");
  return contract(v.X, a) + wedge(Form<S>::covector(v.xi), a);
}

template <typename S>
MatX<S> clifford_matrix(const GenVector<S>& v) {
  return contract_matrix(v.X) + wedge_matrix(Form<S>::covector(v.xi));
}

/// (φ, ψ)_Ch = −(φ∧ψᵗ)_top.
template <typename S>
S chevalley(const Form<S>& a, const Form<S>& b) {
  return -top(wedge(a, clifford_transpose(b)));
}

/// Entry (I, J) is the pairing of basis forms e^I and e^J.
Eigen::MatrixXd chevalley_matrix(int m);

/// Per degree j: +1 if (a_j, b_{m−j})_Ch is symmetric under swapping, −1 if antisymmetric.
Eigen::VectorXi chevalley_symmetry(int m);

/// e^B(X+ξ) = X + ξ − i_X B.
template <typename S>
GenVector<S> b_transform(const Form<S>& B, const GenVector<S>& v) {
  return {v.X, v.xi - contract(v.X, B).as_covector()};
}

/// Spinor lift of e^B: φ ↦ e^B∧φ.
template <typename S>
Form<S> b_transform_spinor(const Form<S>& B, const Form<S>& a) {
  return wedge(exp_wedge(B), a);
}

/// (0, −i_Y i_X H), the bracket of constant sections.
template <typename S>
GenVector<S> courant_bracket_const(const GenVector<S>& v, const GenVector<S>& w, const Form<S>& H) {
  for (Mask I = 0; I < Mask(H.size()); ++I)
    if (degree(I) != 3 && H[I] != S(0)) throw InvalidInput("H must be a three-form");
  const Form<S> c = contract(w.X, contract(v.X, H));
  return {VecX<S>::Zero(v.dim()), -c.as_covector()};
}

/// Matrix B_ab = B(e_a, e_b) of a two-form.
Eigen::MatrixXd two_form_matrix(const Form<double>& B);
Form<double> two_form(const Eigen::MatrixXd& Bab);
/// e^B on stacked coordinates.
Eigen::MatrixXd b_transform_matrix(const Form<double>& B);

/// Orthogonal, pairing-self-adjoint involution with positive ⟨𝔾v, v⟩.
class GenMetric {
 public:
  static GenMetric from_matrix(const Eigen::MatrixXd& G, double tol = 1e-9);
  /// The block form (0 g⁻¹; g 0).
  static GenMetric block(const Eigen::MatrixXd& g);
  static GenMetric from_split(const Eigen::MatrixXd& g, const Form<double>& B);

  int dim() const { return int(G_.rows() / 2); }
  const Eigen::MatrixXd& matrix() const { return G_; }

 private:
  explicit GenMetric(Eigen::MatrixXd G) : G_(std::move(G)) {}
  Eigen::MatrixXd G_;
};

struct MetricSplit {
  Eigen::MatrixXd g;
  Form<double> B;
};

MetricSplit metric_split(const GenMetric& G);

/// Positive orthonormal basis of V₊ as columns; π_T orientation matches `orientation`.
Eigen::MatrixXd positive_frame(const GenMetric& G, int orientation);

/// ★ = −e_m ⋯ e₂ · e₁ on the form basis.
Eigen::MatrixXd hodge_star_matrix(const GenMetric& G, int orientation);
Form<cd> hodge_star(const GenMetric& G, int orientation, const Form<cd>& a);

/// (½(a + ★a), ½(a − ★a)); requires m = 4.
std::pair<Form<cd>, Form<cd>> sd_asd_project(const GenMetric& G, int orientation, const Form<cd>& a);

/// Riemannian ⋆ defined by α∧⋆β = g(α, β) vol_g.
Eigen::MatrixXd classical_hodge_star_matrix(const Eigen::MatrixXd& g, int orientation);

}  // namespace genk
