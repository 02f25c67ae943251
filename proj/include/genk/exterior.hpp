#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "genk/errors.hpp"
#include "genk/lie_algebra.hpp"

namespace genk {

using cd = std::complex<double>;
using Mask = std::uint32_t;

template <typename S>
using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <typename S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

constexpr int kMaxDim = 6;

inline int degree(Mask I) { return std::popcount(I); }
inline Mask top_mask(int m) { return (Mask(1) << m) - 1; }
inline Mask index_mask(int i) { return Mask(1) << (i - 1); }

/// Sign of e^I ∧ e^J in the increasing basis; 0 when I and J overlap.
inline int wedge_sign(Mask I, Mask J) {
  if (I & J) return 0;
  int swaps = 0;
  for (Mask rest = J; rest; rest &= rest - 1) {
    const Mask low = rest & (~rest + 1);
    swaps += std::popcount(I & ~((low << 1) - 1));
  }
  return (swaps & 1) ? -1 : 1;
}

/// Sign of i_{e_i} e^I for i ∈ I.
inline int contract_sign(int i, Mask I) { return (std::popcount(I & (index_mask(i) - 1)) & 1) ? -1 : 1; }

inline int transpose_sign(int k) { return ((k * (k - 1) / 2) & 1) ? -1 : 1; }

/// 1-based indices of the basis element I, increasing.
std::vector<int> mask_indices(Mask I);
Mask indices_mask(const std::vector<int>& indices, int m);
std::string mask_label(Mask I);

inline void check_dim(int m) {
  if (m < 1 || m > kMaxDim) throw InvalidInput("form dimension must lie in 1.." + std::to_string(kMaxDim));
}

template <typename S>
class Form {
 public:
  using Scalar = S;

  Form() = default;
  explicit Form(int m) : m_(m) {
    check_dim(m);
    c_ = VecX<S>::Zero(Eigen::Index(1) << m);
  }
  Form(int m, VecX<S> coeffs) : m_(m), c_(std::move(coeffs)) {
    check_dim(m);
    if (c_.size() != (Eigen::Index(1) << m)) throw DimensionMismatch("coefficient vector must have 2^m entries");
  }

  static Form basis(int m, Mask I, S value = S(1)) {
    Form f(m);
    f.c_(I) = value;
    return f;
  }
  static Form one(int m) { return basis(m, 0); }
  static Form volume(int m) { return basis(m, top_mask(m)); }
  /// Covector Σ a_i dx^i.
  static Form covector(const VecX<S>& a) {
    Form f(int(a.size()));
    for (int i = 0; i < a.size(); ++i) f.c_(index_mask(i + 1)) = a(i);
    return f;
  }

  int dim() const { return m_; }
  Eigen::Index size() const { return c_.size(); }
  const VecX<S>& coeffs() const { return c_; }
  VecX<S>& coeffs() { return c_; }
  const S& operator[](Mask I) const { return c_(I); }
  S& operator[](Mask I) { return c_(I); }

  Form part(int k) const {
    Form f(m_);
    for (Mask I = 0; I < Mask(c_.size()); ++I)
      if (degree(I) == k) f.c_(I) = c_(I);
    return f;
  }
  Form even() const { return parity_part(0); }
  Form odd() const { return parity_part(1); }

  /// Coefficients of the degree-1 part as a vector.
  VecX<S> as_covector() const {
    VecX<S> a(m_);
    for (int i = 0; i < m_; ++i) a(i) = c_(index_mask(i + 1));
    return a;
  }

  template <typename T>
  Form<T> cast() const {
    return Form<T>(m_, c_.template cast<T>());
  }

  Form& operator+=(const Form& o) {
    same_dim(o);
    c_ += o.c_;
    return *this;
  }
  Form& operator-=(const Form& o) {
    same_dim(o);
    c_ -= o.c_;
    return *this;
  }
  Form& operator*=(const S& s) {
    c_ *= s;
    return *this;
  }
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator-(Form a) { return a *= S(-1); }
  friend Form operator*(const S& s, Form a) { return a *= s; }
  friend Form operator*(Form a, const S& s) { return a *= s; }

  void same_dim(const Form& o) const {
    if (o.m_ != m_) throw DimensionMismatch("forms of different dimension");
  }

 private:
  Form parity_part(int p) const {
    Form f(m_);
    for (Mask I = 0; I < Mask(c_.size()); ++I)
      if ((degree(I) & 1) == p) f.c_(I) = c_(I);
    return f;
  }

  int m_ = 0;
  VecX<S> c_;
};

template <typename S>
Form<S> wedge(const Form<S>& a, const Form<S>& b) {
  a.same_dim(b);
  Form<S> out(a.dim());
  const Mask n = Mask(a.size());
  for (Mask I = 0; I < n; ++I) {
    if (a[I] == S(0)) continue;
    for (Mask J = 0; J < n; ++J) {
      const int s = wedge_sign(I, J);
      if (s == 0 || b[J] == S(0)) continue;
      out[I | J] += S(s) * a[I] * b[J];
    }
  }
  return out;
}

/// Interior product i_X.
template <typename S>
Form<S> contract(const VecX<S>& X, const Form<S>& a) {
  if (X.size() != a.dim()) throw DimensionMismatch("vector and form of different dimension");
  Form<S> out(a.dim());
  const Mask n = Mask(a.size());
  for (Mask I = 0; I < n; ++I) {
    if (a[I] == S(0)) continue;
    for (int i = 1; i <= a.dim(); ++i) {
      if (!(I & index_mask(i)) || X(i - 1) == S(0)) continue;
      out[I ^ index_mask(i)] += S(contract_sign(i, I)) * X(i - 1) * a[I];
    }
  }
  return out;
}

template <typename S>
Form<S> clifford_transpose(const Form<S>& a) {
  Form<S> out = a;
  for (Mask I = 0; I < Mask(a.size()); ++I) out[I] *= S(transpose_sign(degree(I)));
  return out;
}

template <typename S>
S top(const Form<S>& a) {
  return a[top_mask(a.dim())];
}

template <typename S>
Form<S> conj(const Form<S>& a) {
  return Form<S>(a.dim(), a.coeffs().conjugate());
}

/// e^B = 1 + B + B∧B/2 + …, terminating by nilpotency.
template <typename S>
Form<S> exp_wedge(const Form<S>& B) {
  Form<S> out = Form<S>::one(B.dim());
  Form<S> term = out;
  for (int k = 1; 2 * k <= B.dim(); ++k) {
    term = wedge(term, B) * (S(1) / S(k));
    out += term;
  }
  return out;
}

/// Matrix of b ↦ a∧b on the bitmask basis.
template <typename S>
MatX<S> wedge_matrix(const Form<S>& a) {
  const Mask n = Mask(a.size());
  MatX<S> M = MatX<S>::Zero(n, n);
  for (Mask I = 0; I < n; ++I) {
    if (a[I] == S(0)) continue;
    for (Mask J = 0; J < n; ++J) {
      const int s = wedge_sign(I, J);
      if (s != 0) M(I | J, J) += S(s) * a[I];
    }
  }
  return M;
}

/// Matrix of i_X on the bitmask basis.
template <typename S>
MatX<S> contract_matrix(const VecX<S>& X) {
  const int m = int(X.size());
  check_dim(m);
  const Mask n = Mask(1) << m;
  MatX<S> M = MatX<S>::Zero(n, n);
  for (Mask I = 0; I < n; ++I)
    for (int i = 1; i <= m; ++i)
      if (I & index_mask(i)) M(I ^ index_mask(i), I) += S(contract_sign(i, I)) * X(i - 1);
  return M;
}

/// Diagonal matrix selecting the degrees listed in `degrees`.
MatX<double> degree_selector(int m, std::initializer_list<int> degrees);
MatX<double> parity_selector(int m, int parity);

/// Forms with coefficients in a Lie algebra 𝔤: column a holds the e_a component.
template <typename S>
class LaForm {
 public:
  LaForm() = default;
  LaForm(int m, std::shared_ptr<const LieAlgebraData> g) : m_(m), g_(std::move(g)) {
    check_dim(m);
    c_ = MatX<S>::Zero(Eigen::Index(1) << m, g_->dim());
  }
  LaForm(int m, std::shared_ptr<const LieAlgebraData> g, MatX<S> coeffs) : m_(m), g_(std::move(g)), c_(std::move(coeffs)) {
    check_dim(m);
    if (c_.rows() != (Eigen::Index(1) << m) || c_.cols() != g_->dim())
      throw DimensionMismatch("Lie-valued coefficient matrix must be 2^m × dim g");
  }

  int dim() const { return m_; }
  const LieAlgebraData& algebra() const { return *g_; }
  const std::shared_ptr<const LieAlgebraData>& algebra_ptr() const { return g_; }
  const MatX<S>& coeffs() const { return c_; }
  MatX<S>& coeffs() { return c_; }

  Form<S> component(int a) const { return Form<S>(m_, c_.col(a)); }
  void set_component(int a, const Form<S>& f) {
    if (f.dim() != m_) throw DimensionMismatch("component of different dimension");
    c_.col(a) = f.coeffs();
  }

  LaForm part(int k) const {
    LaForm out(m_, g_);
    for (Mask I = 0; I < Mask(c_.rows()); ++I)
      if (degree(I) == k) out.c_.row(I) = c_.row(I);
    return out;
  }

  void same_algebra(const LaForm& o) const {
    if (o.m_ != m_) throw DimensionMismatch("Lie-valued forms of different dimension");
    if (!(o.g_ == g_ || *o.g_ == *g_)) throw InvalidInput("Lie-valued forms over different algebras");
  }

  LaForm& operator+=(const LaForm& o) {
    same_algebra(o);
    c_ += o.c_;
    return *this;
  }
  friend LaForm operator+(LaForm a, const LaForm& b) { return a += b; }
  friend LaForm operator*(const S& s, LaForm a) {
    a.c_ *= s;
    return a;
  }

 private:
  int m_ = 0;
  std::shared_ptr<const LieAlgebraData> g_;
  MatX<S> c_;
};

/// Scalar form times Lie-valued form.
template <typename S>
LaForm<S> wedge(const Form<S>& a, const LaForm<S>& b) {
  LaForm<S> out(b.dim(), b.algebra_ptr());
  for (int i = 0; i < b.algebra().dim(); ++i) out.set_component(i, wedge(a, b.component(i)));
  return out;
}

/// [a∧b] = Σ c^k_ij a^i∧b^j e_k.
template <typename S>
LaForm<S> bracket_wedge(const LaForm<S>& a, const LaForm<S>& b) {
  a.same_algebra(b);
  const LieAlgebraData& g = a.algebra();
  LaForm<S> out(a.dim(), a.algebra_ptr());
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) {
      bool any = false;
      for (int k = 0; k < g.dim(); ++k) any = any || g.structure(k)(i, j) != 0.0;
      if (!any) continue;
      const Form<S> w = wedge(a.component(i), b.component(j));
      for (int k = 0; k < g.dim(); ++k) {
        const double c = g.structure(k)(i, j);
        if (c != 0.0) out.coeffs().col(k) += S(c) * w.coeffs();
      }
    }
  return out;
}

/// κ(a∧b) = Σ κ_ij a^i∧b^j.
template <typename S>
Form<S> kappa_pair(const LaForm<S>& a, const LaForm<S>& b) {
  a.same_algebra(b);
  const LieAlgebraData& g = a.algebra();
  Form<S> out(a.dim());
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      if (g.kappa()(i, j) != 0.0) out += S(g.kappa()(i, j)) * wedge(a.component(i), b.component(j));
  return out;
}

}  // namespace genk
