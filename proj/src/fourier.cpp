#include "genk/fourier.hpp"
#include "genk/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <numbers>
#include <random>

namespace genk {

namespace {

const cd kTwoPiI(0.0, 2.0 * std::numbers::pi);

template <typename T>
void accumulate(std::map<Mode, T>& out, const Mode& k, const T& value) {
  auto it = out.find(k);
  if (it == out.end())
    out.emplace(k, value);
  else
    it->second = it->second + value;
}

VecX<cd> frequency_vector(const Mode& k) {
  VecX<cd> v(4);
  for (int j = 0; j < 4; ++j) v(j) = kTwoPiI * double(k[j]);
  return v;
}

int mode_radius(const Mode& k) {
  int r = 0;
  for (int x : k) r = std::max(r, std::abs(x));
  return r;
}

Mode random_mode(std::mt19937_64& rng, int radius) {
  std::uniform_int_distribution<int> U(-radius, radius);
  return {U(rng), U(rng), U(rng), U(rng)};
}

VecX<cd> random_vec(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> N(0.0, 1.0);
  VecX<cd> v(n);
  for (int i = 0; i < n; ++i) v(i) = cd(N(rng), N(rng));
  return v;
}

FourierSection random_section(std::mt19937_64& rng, int radius, int terms) {
  FourierSection s;
  for (int t = 0; t < terms; ++t) accumulate(s, random_mode(rng, radius), GenVector<cd>(random_vec(rng, 4), random_vec(rng, 4)));
  return s;
}

}  // namespace

Form<cd> frequency_covector(const Mode& k) { return Form<cd>::covector(frequency_vector(k)); }

Mode add_modes(const Mode& a, const Mode& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }

int support_radius(const FourierForm& f) {
  int r = 0;
  for (const auto& [k, v] : f) r = std::max(r, mode_radius(k));
  return r;
}

int support_radius(const FourierSection& s) {
  int r = 0;
  for (const auto& [k, v] : s) r = std::max(r, mode_radius(k));
  return r;
}

FourierForm constant_form(const Form<double>& f) { return {{Mode{0, 0, 0, 0}, f.cast<cd>()}}; }

FourierForm fourier_d(const FourierForm& f) {
  FourierForm out;
  for (const auto& [k, a] : f) out.emplace(k, wedge(frequency_covector(k), a));
  return out;
}

FourierForm fourier_wedge(const FourierForm& a, const FourierForm& b) {
  FourierForm out;
  for (const auto& [ka, fa] : a)
    for (const auto& [kb, fb] : b) accumulate(out, add_modes(ka, kb), wedge(fa, fb));
  return out;
}

FourierForm fourier_contract(const FourierVector& X, const FourierForm& f) {
  FourierForm out;
  for (const auto& [kx, x] : X)
    for (const auto& [kf, a] : f) accumulate(out, add_modes(kx, kf), contract(x, a));
  return out;
}

FourierForm operator+(FourierForm a, const FourierForm& b) {
  for (const auto& [k, f] : b) accumulate(a, k, f);
  return a;
}

FourierForm operator-(FourierForm a, const FourierForm& b) {
  for (const auto& [k, f] : b) accumulate(a, k, Form<cd>(-f));
  return a;
}

FourierVector tangent_part(const FourierSection& s) {
  FourierVector out;
  for (const auto& [k, v] : s) out.emplace(k, v.X);
  return out;
}

FourierForm cotangent_part(const FourierSection& s) {
  FourierForm out;
  for (const auto& [k, v] : s) out.emplace(k, Form<cd>::covector(v.xi));
  return out;
}

FourierSection make_section(const FourierVector& X, const FourierForm& xi) {
  FourierSection out;
  for (const auto& [k, x] : X) accumulate(out, k, GenVector<cd>(x, VecX<cd>::Zero(4)));
  for (const auto& [k, f] : xi) {
    for (Mask I = 0; I < Mask(f.size()); ++I)
      if (degree(I) != 1 && f[I] != cd(0)) throw InvalidInput("cotangent part must be a one-form");
    accumulate(out, k, GenVector<cd>(VecX<cd>::Zero(4), f.as_covector()));
  }
  return out;
}

FourierVector lie_bracket(const FourierVector& X, const FourierVector& Y) {
  FourierVector out;
  for (const auto& [kx, x] : X)
    for (const auto& [ky, y] : Y) {
      const cd x_dy = x.cwiseProduct(frequency_vector(ky)).sum();
      const cd y_dx = y.cwiseProduct(frequency_vector(kx)).sum();
      accumulate(out, add_modes(kx, ky), VecX<cd>(x_dy * y - y_dx * x));
    }
  return out;
}

FourierSection courant_bracket_fourier(const FourierSection& v, const FourierSection& w, const FourierForm& H) {
  for (const auto& [k, h] : H)
    for (Mask I = 0; I < Mask(h.size()); ++I)
      if (degree(I) != 3 && h[I] != cd(0)) throw InvalidInput("H must be a three-form");
  const FourierVector X = tangent_part(v), Y = tangent_part(w);
  const FourierForm xi = cotangent_part(v), eta = cotangent_part(w);
  const FourierForm lie = fourier_contract(X, fourier_d(eta)) + fourier_d(fourier_contract(X, eta));
  const FourierForm forms =
      lie - fourier_contract(Y, fourier_d(xi)) - fourier_contract(Y, fourier_contract(X, H));
  return make_section(lie_bracket(X, Y), forms);
}

FourierSection b_transform_fourier(const FourierForm& B, const FourierSection& v) {
  return make_section(tangent_part(v), cotangent_part(v) - fourier_contract(tangent_part(v), B));
}

double max_difference(const FourierSection& a, const FourierSection& b) {
  double r = 0;
  auto diff = [&](const FourierSection& p, const FourierSection& q) {
    for (const auto& [k, x] : p) {
      const auto it = q.find(k);
      const GenVector<cd> d = it == q.end() ? x : x - it->second;
      r = std::max({r, d.X.cwiseAbs().maxCoeff(), d.xi.cwiseAbs().maxCoeff()});
    }
  };
  diff(a, b);
  diff(b, a);
  return r;
}

double max_coefficient(const FourierSection& a) { return max_difference(a, {}); }

CheckOutcome courant_fourier_check(const Form<double>& H, int radius, std::uint64_t seed, double tol, int samples) {
  CheckOutcome out;
  out.name = "courant_bracket_fourier";
  out.anchor = check_anchor(out.name);
  out.threshold = tol;
  std::mt19937_64 rng(seed);
  const FourierForm Hf = constant_form(H);
  double transform = 0, constant = 0;
  int support = 0;
  for (int s = 0; s < samples; ++s) {
    const FourierSection v1 = random_section(rng, radius, 3), v2 = random_section(rng, radius, 3);
    FourierForm B;
    Form<cd> b(4);
    for (Mask I = 0; I < 16; ++I)
      if (degree(I) == 2) b[I] = random_vec(rng, 1)(0);
    B.emplace(random_mode(rng, radius), b);
    const FourierSection lhs = courant_bracket_fourier(b_transform_fourier(B, v1), b_transform_fourier(B, v2), Hf - fourier_d(B));
    const FourierSection rhs = b_transform_fourier(B, courant_bracket_fourier(v1, v2, Hf));
    transform = std::max(transform, max_difference(lhs, rhs) / std::max(1.0, max_coefficient(rhs)));
    support = std::max(support, support_radius(lhs));

    const GenVector<cd> c1(random_vec(rng, 4), random_vec(rng, 4)), c2(random_vec(rng, 4), random_vec(rng, 4));
    const FourierSection fc = courant_bracket_fourier({{Mode{}, c1}}, {{Mode{}, c2}}, Hf);
    const FourierSection cc = {{Mode{}, courant_bracket_const(c1, c2, H.cast<cd>())}};
    constant = std::max(constant, max_difference(fc, cc) / std::max(1.0, max_coefficient(cc)));
  }
  out.values.emplace_back("b_transform_residual", transform);
  out.values.emplace_back("constant_section_residual", constant);
  out.values.emplace_back("output_support_radius", support);
  out.residual = std::max(transform, constant);
  out.finish();
  return out;
}

}  // namespace genk
