#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "genk/linalg.hpp"
#include "genk/rational.hpp"
#include "genk/reduction.hpp"
#include "genk/report.hpp"
#include "genk/torus.hpp"
#include "support.hpp"

using namespace genk;
using namespace genk::testing;

namespace {

constexpr double kStarTol = 1e-10;
constexpr double kStarIdentityTol = 1e-10;
constexpr double kRegroupTol = 1e-10;
constexpr double kConditioning = 1e-9;
constexpr double kLesTol = 1e-10;
constexpr double kIbpTol = 1e-12;
constexpr double kDeltaTol = 1e-10;
constexpr double kLaplacianTol = 1e-9;
constexpr double kInvarianceTol = 1e-10;

struct Verdict {
  bool pass;
  std::string detail;
};

double max_abs(const Eigen::MatrixXcd& M) { return M.size() ? M.cwiseAbs().maxCoeff() : 0.0; }

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

Verdict hodge_star_law() {
  std::mt19937_64 rng(101);
  double square = 0, classical = 0;
  for (int t = 0; t < 1000; ++t) {
    const GenMetric G = GenMetric::from_split(random_spd(rng, 4), random_two_form(rng, 4));
    const auto out = hodge_star_law_check(G, t % 2 ? 1 : -1, kStarTol);
    square = std::max(square, out.value("square_residual"));
    classical = std::max(classical, out.value("classical_residual"));
  }
  return {square <= kStarTol && classical <= kStarTol,
          fmt("1000 metrics, |★²−1| %.1e, |★ − e^B(±⋆)e^{−B}| %.1e", square, classical)};
}

Verdict star_identity() {
  std::mt19937_64 rng(102);
  double worst = verify_star_identity(flat_kahler_fiber(), kStarIdentityTol).residual;
  for (int t = 0; t < 100; ++t) worst = std::max(worst, verify_star_identity(random_gk_fiber(rng), kStarIdentityTol).residual);
  return {worst <= kStarIdentityTol, fmt("flat + 100 conjugated fibers, max residual %.1e", worst)};
}

Verdict sd_asd() {
  std::mt19937_64 rng(103);
  const Eigen::MatrixXcd ev = parity_selector(4, 0).cast<cd>(), od = parity_selector(4, 1).cast<cd>();
  double worst = 0;
  std::vector<GKFiber> fibers{flat_kahler_fiber()};
  for (int t = 0; t < 4; ++t) fibers.push_back(random_gk_fiber(rng));
  for (const GKFiber& K : fibers) {
    auto sum = [&](std::initializer_list<std::pair<int, int>> pts) {
      Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(16, 16);
      for (const auto& [p, q] : pts) S += K.projector(p, q);
      return S;
    };
    const Eigen::MatrixXcd groups[4] = {sum({{1, 1}, {-1, -1}}), sum({{1, -1}, {-1, 1}}),
                                        sum({{2, 0}, {-2, 0}, {0, 2}, {0, -2}}), sum({{0, 0}})};
    for (int t = 0; t < 500; ++t) {
      const auto a = random_complex_form(rng, 4);
      const auto [plus, minus] = sd_asd_project(K.metric(), K.orientation(), a);
      const double scale = a.coeffs().norm();
      worst = std::max({worst, (od * plus.coeffs() - groups[0] * a.coeffs()).norm() / scale,
                        (od * minus.coeffs() - groups[1] * a.coeffs()).norm() / scale,
                        (ev * plus.coeffs() - groups[2] * a.coeffs()).norm() / scale,
                        (ev * minus.coeffs() - groups[3] * a.coeffs()).norm() / scale});
    }
  }
  return {worst <= kRegroupTol, fmt("5 fibers × 500 forms, max residual %.1e", worst)};
}

Verdict reduction_algebra() {
  std::mt19937_64 rng(104);
  bool dims = true;
  double cond = 1.0;
  for (int t = 0; t < 200; ++t) {
    const int k = 1 + t % 3;
    ReductionProblem P;
    P.K = random_pairing_map(rng, 4).leftCols(k);
    P.n_action = k;
    P.metric = GenMetric::from_split(random_spd(rng, 4), random_two_form(rng, 4));
    const auto f = quotient_fiber(P);
    dims = dims && kg_space(P).cols() == 8 - 2 * k && la::signature(f.pairing) == std::make_pair(4 - k, 4 - k);
    cond = std::min(cond, kg_conditioning(P));
  }
  using Q = Rational;
  std::uniform_int_distribution<int> u(-3, 3);
  bool exact = true;
  for (int t = 0; t < 200; ++t) {
    const int r = 1 + t % 2;
    MatX<Q> X(4, r), xi0(4, r);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < r; ++j) {
        X(i, j) = Q(u(rng)) + Q(i == j ? 5 : 0);
        xi0(i, j) = Q(u(rng));
      }
    const MatX<Q> gram = X.transpose() * X;
    MatX<Q> inv(r, r);
    if (r == 1) {
      inv(0, 0) = Q(1) / gram(0, 0);
    } else {
      const Q det = gram(0, 0) * gram(1, 1) - gram(0, 1) * gram(1, 0);
      inv << gram(1, 1) / det, -gram(0, 1) / det, -gram(1, 0) / det, gram(0, 0) / det;
    }
    const MatX<Q> theta = X * inv;
    const MatX<Q> S = xi0.transpose() * X;
    const MatX<Q> xi = xi0 - theta * ((S + MatX<Q>(S.transpose())) / Q(2)).transpose();
    const Form<Q> B = b_theta<Q>(theta, X, xi);
    for (int a = 0; a < r; ++a) {
      const VecX<Q> c = contract(VecX<Q>(X.col(a)), B).as_covector();
      for (int i = 0; i < 4; ++i) exact = exact && c(i) == xi(i, a);
    }
  }
  return {dims && cond >= kConditioning && exact,
          std::string("200 problems, dims/signature ") + (dims ? "ok" : "WRONG") +
              fmt(", min conditioning %.2e", cond) + ", rational B_θ contraction " + (exact ? "exact" : "INEXACT")};
}

Verdict torus_metric_tier() {
  const auto flat = harmonic_spaces(TorusLab(u1_scenario(Form<double>(4), 2)));
  int k0 = 0;
  for (const auto& m : flat.modes)
    if (m.k == Mode{0, 0, 0, 0}) k0 = m.harmonic_dim;
  const bool harmonic_ok = flat.total == 8 && k0 == 8;
  const auto les = les_check(TorusLab(u1_scenario(dx123(), 2)));
  const bool les_ok = les.check.pass && les.check.value("inexact_modes") == 0 && les.check.residual < kLesTol;
  const int h0 = les.totals[1][0], h2 = les.totals[1][2];
  const bool vanishing = h0 == 0 && h2 == 0;
  return {harmonic_ok && les_ok && vanishing,
          fmt("H=0: harmonic odd dim %.0f (k=0: %.0f); H=dx123: LES residual %.1e, ", flat.total, k0, les.check.residual) +
              (les_ok ? "exact at every node" : "NOT exact") + fmt("; H⁰ = %.0f, H² = %.0f (claimed 0)", h0, h2)};
}

Verdict integration_by_parts() {
  double worst = 0;
  for (const TorusScenario& S : {u1_scenario(Form<double>(4)), u1_scenario(dx123()), su2_commuting(),
                                 [] {
                                   TorusScenario s = su2_commuting();
                                   s.H = dx123();
                                   return s;
                                 }()})
    worst = std::max(worst, integration_by_parts_check(TorusLab(S), 7).residual);
  return {worst <= kIbpTol, fmt("u(1), su(2) with H ∈ {0, dx123}, max residual %.1e", worst)};
}

Verdict gk_tier() {
  double delta = 0, adjoint = 0, lap = 0, invariance = 0;
  for (bool su2 : {false, true}) {
    TorusScenario S = su2 ? su2_commuting(0.3, -0.7, 2) : u1_scenario(Form<double>(4), 2);
    S.gk = flat_kahler_fiber();
    const TorusLab lab(S);
    delta = std::max(delta, delta_decomposition_check(lab).residual);
    adjoint = std::max(adjoint, adjoint_check(lab).residual);
    lap = std::max(lap, laplacian_check(lab).residual);
    invariance = std::max(invariance, gk_inheritance_check(lab).value("invariance_residual"));
  }
  return {delta <= kDeltaTol && adjoint <= kDeltaTol && lap <= kLaplacianTol && invariance <= kInvarianceTol,
          fmt("decomposition %.1e, adjoints %.1e, Laplacians %.1e, 𝒥-invariance %.1e", delta, adjoint, lap, invariance)};
}

Verdict moment_map_gate() {
  const auto bad = moment_gate(su2_nonflat(2));
  const auto good = moment_gate(su2_commuting());
  bool rejected = false;
  double reported = 0;
  try {
    Scenario s;
    s.name = "gate";
    s.tiers.metric_lab = true;
    const TorusScenario t = su2_nonflat(2);
    s.algebra = t.algebra;
    s.A = t.A;
    run_scenario(s);
  } catch (const NotInstanton& e) {
    rejected = true;
    reported = e.self_dual_norm;
  }
  return {rejected && reported > 0 && !bad.pass && good.pass,
          fmt("nonflat |F₊| = %.3f ", reported) + (rejected ? "rejected" : "ACCEPTED") +
              fmt(", commuting |F₊| = %.1e", good.residual)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
    double budget_s;
  };
  const Criterion criteria[] = {
      {"hodge star law", hodge_star_law, 5},
      {"star = -J1 J2", star_identity, 10},
      {"self-dual regrouping", sd_asd, 0},
      {"reduction linear algebra", reduction_algebra, 0},
      {"torus metric tier", torus_metric_tier, 30},
      {"integration by parts", integration_by_parts, 0},
      {"generalized Kahler tier", gk_tier, 60},
      {"moment map gate", moment_map_gate, 0},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.budget_s <= 0 || secs <= c.budget_s;
    const bool pass = v.pass && in_time;
    failed += !pass;
    std::printf("%s  %d %-26s %7.2f s%s  %s\n", pass ? "PASS" : "FAIL", index, c.name, secs,
                in_time ? "" : " (over budget)", v.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed ? 1 : 0;
}
