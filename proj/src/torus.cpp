#include "genk/torus.hpp"
#include "genk/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

#include "genk/linalg.hpp"

namespace genk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const cd kI(0.0, 1.0);

template <typename F>
void for_each_index(std::size_t n, F&& f) {
  const int threads = std::min<int>(worker_threads(), int(n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

double max_abs(const Eigen::MatrixXcd& M) { return M.size() ? M.cwiseAbs().maxCoeff() : 0.0; }

Mode negate(const Mode& k) { return {-k[0], -k[1], -k[2], -k[3]}; }

bool is_zero_mode(const Mode& k) { return k == Mode{0, 0, 0, 0}; }

void require_instanton(const TorusScenario& S) {
  const double f = self_dual_curvature_norm(S);
  if (f > 1e-12) throw NotInstanton("moment map nonzero: |F+| = " + std::to_string(f), f);
}

void require_gk(const TorusLab& lab) {
  if (!lab.scenario().gk) throw InvalidInput("GK tier unavailable: scenario has no generalized Kähler fiber");
}

LaForm<cd> to_laform(const Eigen::VectorXcd& v, const TorusLab& lab) {
  const int d = lab.lie_dim();
  Eigen::MatrixXcd c(16, d);
  for (int a = 0; a < d; ++a) c.col(a) = v.segment(16 * a, 16);
  return LaForm<cd>(4, lab.scenario().algebra, c);
}

Eigen::VectorXcd from_laform(const LaForm<cd>& f) {
  const int d = f.algebra().dim();
  Eigen::VectorXcd v(16 * d);
  for (int a = 0; a < d; ++a) v.segment(16 * a, 16) = f.coeffs().col(a);
  return v;
}

Eigen::VectorXcd random_vector(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> N(0.0, 1.0);
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = cd(N(rng), N(rng));
  return v;
}

struct ModeIndex {
  std::vector<Mode> modes;
  std::map<Mode, std::size_t> index;
  explicit ModeIndex(int R) : modes(truncated_modes(R)) {
    for (std::size_t i = 0; i < modes.size(); ++i) index[modes[i]] = i;
  }
  std::size_t opposite(std::size_t i) const { return index.at(negate(modes[i])); }
};

/// Σ_k u_kᵀ C v_{−k}.
cd global_pairing(const ModeIndex& mi, const Eigen::MatrixXd& C, const std::vector<Eigen::VectorXcd>& u,
                  const std::vector<Eigen::VectorXcd>& v) {
  const Eigen::MatrixXcd Cc = C.cast<cd>();
  cd s = 0;
  for (std::size_t i = 0; i < mi.modes.size(); ++i) s += (u[i].transpose() * (Cc * v[mi.opposite(i)])).value();
  return s;
}

double field_norm(const std::vector<Eigen::VectorXcd>& u) {
  double s = 0;
  for (const auto& x : u) s += x.squaredNorm();
  return std::sqrt(s);
}

/// Form-level pieces Σ_{p,q} P_{(p,q)+shift} W P_{p,q} for the four lattice arrows.
struct DeltaTable {
  std::array<std::array<Eigen::MatrixXcd, 4>, 4> dx;
  std::array<Eigen::MatrixXcd, 4> H;
};

DeltaTable delta_table(const TorusLab& lab) {
  const GKFiber& K = *lab.scenario().gk;
  const VSub order[4] = {VSub::Plus10, VSub::Minus10, VSub::Plus01, VSub::Minus01};
  auto sandwich = [&](const Eigen::MatrixXcd& W, VSub which) {
    const auto [dp, dq] = clifford_shift(which);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(16, 16);
    for (const auto& [p, q] : K.lattice())
      if (K.in_lattice(p + dp, q + dq)) out += K.projector(p + dp, q + dq) * W * K.projector(p, q);
    return out;
  };
  DeltaTable t;
  for (int s = 0; s < 4; ++s) {
    for (int j = 0; j < 4; ++j)
      t.dx[s][j] = sandwich(wedge_matrix(Form<double>::basis(4, index_mask(j + 1))).cast<cd>(), order[s]);
    t.H[s] = sandwich(wedge_matrix(lab.scenario().H).cast<cd>(), order[s]);
  }
  return t;
}

std::array<Eigen::MatrixXcd, 4> deltas_from_table(const TorusLab& lab, const DeltaTable& t, const Mode& k) {
  const auto a = lab.connection_coefficients(k);
  const Eigen::MatrixXcd Id = Eigen::MatrixXcd::Identity(lab.lie_dim(), lab.lie_dim());
  std::array<Eigen::MatrixXcd, 4> out;
  for (int s = 0; s < 4; ++s) {
    out[s] = la::kron(Id, t.H[s]);
    for (int j = 0; j < 4; ++j) out[s] += la::kron(a[j], t.dx[s][j]);
  }
  return out;
}

/// Cohomology representatives of C0 → C1 → C2 in coordinate spaces.
struct Cohomology {
  std::array<Eigen::MatrixXcd, 3> H;
};

Eigen::MatrixXcd orth_complement_in(const Eigen::MatrixXcd& Z, const Eigen::MatrixXcd& B) {
  if (B.cols() == 0) return Z;
  return la::range_basis(Eigen::MatrixXcd(Z - B * (B.adjoint() * Z)));
}

Cohomology cohomology(const Eigen::MatrixXcd& d0, const Eigen::MatrixXcd& d1) {
  Cohomology c;
  c.H[0] = la::null_space(d0);
  c.H[1] = orth_complement_in(la::null_space(d1), la::range_basis(d0));
  const Eigen::Index n2 = d1.rows();
  c.H[2] = orth_complement_in(Eigen::MatrixXcd::Identity(n2, n2), la::range_basis(d1));
  return c;
}

}  // namespace

std::vector<Mode> truncated_modes(int radius) {
  if (radius < 0) throw InvalidInput("truncation radius must be non-negative");
  std::vector<Mode> out;
  for (int a = -radius; a <= radius; ++a)
    for (int b = -radius; b <= radius; ++b)
      for (int c = -radius; c <= radius; ++c)
        for (int d = -radius; d <= radius; ++d) out.push_back({a, b, c, d});
  return out;
}

int worker_threads() {
  int n = int(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("GENK_NUM_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return n;
}

LaForm<double> curvature(const TorusScenario& S) { return 0.5 * bracket_wedge(S.A, S.A); }

double self_dual_curvature_norm(const TorusScenario& S) {
  const LaForm<double> F = curvature(S);
  const GenMetric G = S.gk ? S.gk->metric() : GenMetric::block(S.g);
  const Eigen::MatrixXd star = hodge_star_matrix(G, S.orientation);
  const Eigen::MatrixXd Fp = 0.5 * (F.coeffs() + star * F.coeffs());
  return Fp.norm();
}

CheckOutcome moment_gate(const TorusScenario& S, double threshold) {
  CheckOutcome out;
  out.name = "moment_gate";
  out.anchor = check_anchor(out.name);
  out.threshold = threshold;
  out.residual = self_dual_curvature_norm(S);
  out.values.emplace_back("curvature_norm", curvature(S).coeffs().norm());
  out.finish();
  return out;
}

TorusLab::TorusLab(TorusScenario S) : S_(std::move(S)) {
  if (S_.H.dim() != 4 || S_.A.dim() != 4 || S_.g.rows() != 4 || S_.g.cols() != 4)
    throw DimensionMismatch("torus lab works on the 4-torus");
  for (Mask I = 0; I < 16; ++I) {
    if (degree(I) != 3 && S_.H[I] != 0.0) throw InvalidInput("H must be a three-form");
    if (degree(I) != 1 && S_.A.coeffs().row(I).cwiseAbs().maxCoeff() != 0.0) throw InvalidInput("A must be a one-form");
  }
  if (!(*S_.A.algebra_ptr() == *S_.algebra)) throw InvalidInput("A takes values in a different Lie algebra");
  S_.algebra->validate();
  if (S_.radius < 0) throw InvalidInput("truncation radius must be non-negative");
  d_ = S_.algebra->dim();
  N_ = 16 * d_;

  GenMetric G = GenMetric::block(S_.g);
  if (S_.gk) {
    if (S_.H.coeffs().norm() != 0.0) throw InvalidInput("GK tier requires H = 0");
    const MetricSplit split = metric_split(S_.gk->metric());
    if (split.B.coeffs().norm() > 1e-9 || (split.g - S_.g).cwiseAbs().maxCoeff() > 1e-9)
      throw InvalidInput("GK fiber must induce the scenario metric with B = 0");
    if (S_.gk->orientation() != S_.orientation)
      throw InvariantViolation("orientation induced by the GK fiber disagrees with the scenario orientation");
    for (const GCSFiber* J : {&S_.gk->J1(), &S_.gk->J2()})
      if (!integrability_check_const(*J, S_.H).pass) throw InvariantViolation("GK structure is not integrable for H");
    G = S_.gk->metric();
  }

  const Eigen::MatrixXd Id = Eigen::MatrixXd::Identity(d_, d_);
  for (int j = 0; j < 4; ++j) {
    wedge_dx_[j] = wedge_matrix(Form<double>::basis(4, index_mask(j + 1)));
    ad_[j] = S_.algebra->ad(S_.A.coeffs().row(index_mask(j + 1)).transpose());
  }
  wedge_H_ = wedge_matrix(S_.H);
  star_ = la::kron(Id, hodge_star_matrix(G, S_.orientation));
  sdp_ = 0.5 * (Eigen::MatrixXd::Identity(N_, N_) + star_);
  C_ = la::kron(S_.algebra->kappa(), chevalley_matrix(4));
  W_ = (C_ * star_).transpose();
  if ((W_ - W_.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw InvariantViolation("⟨u, ★v̄⟩ is not Hermitian");
  Eigen::LLT<Eigen::MatrixXd> llt(W_);
  if (llt.info() != Eigen::Success) throw InvariantViolation("⟨u, ★ū⟩ is not positive definite");
  Winv_ = llt.solve(Eigen::MatrixXd::Identity(N_, N_));

  const Eigen::MatrixXcd Wc = W_.cast<cd>();
  const Eigen::MatrixXcd even = la::kron(Id, parity_selector(4, 0)).cast<cd>();
  const Eigen::MatrixXcd oddsel = la::kron(Id, parity_selector(4, 1)).cast<cd>();
  E_ = la::orthonormalize(la::range_basis(Eigen::MatrixXcd(sdp_.cast<cd>() * even)), Wc);
  O_ = la::orthonormalize(la::range_basis(oddsel), Wc);
}

std::array<Eigen::MatrixXcd, 4> TorusLab::connection_coefficients(const Mode& k) const {
  std::array<Eigen::MatrixXcd, 4> a;
  for (int j = 0; j < 4; ++j)
    a[j] = ad_[j].cast<cd>() + kI * kTwoPi * double(k[j]) * Eigen::MatrixXcd::Identity(d_, d_);
  return a;
}

Eigen::MatrixXcd TorusLab::symbol_untwisted(const Mode& k) const {
  const auto a = connection_coefficients(k);
  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(N_, N_);
  for (int j = 0; j < 4; ++j) D += la::kron(a[j], wedge_dx_[j].cast<cd>());
  return D;
}

Eigen::MatrixXcd TorusLab::symbol(const Mode& k) const {
  return symbol_untwisted(k) + la::kron(Eigen::MatrixXd::Identity(d_, d_), wedge_H_).cast<cd>();
}

Eigen::MatrixXd TorusLab::degree_projector(int k) const {
  return la::kron(Eigen::MatrixXd::Identity(d_, d_), degree_selector(4, {k}));
}

Eigen::MatrixXcd TorusLab::lift(const Eigen::MatrixXcd& form_op) const {
  return la::kron(Eigen::MatrixXcd::Identity(d_, d_), form_op);
}

Eigen::MatrixXcd TorusLab::upq(int p, int q) const {
  if (!S_.gk) throw InvalidInput("GK tier unavailable: scenario has no generalized Kähler fiber");
  return lift(S_.gk->projector(p, q));
}

Eigen::MatrixXcd TorusLab::jexp(int which) const {
  if (!S_.gk) throw InvalidInput("GK tier unavailable: scenario has no generalized Kähler fiber");
  return lift(which == 1 ? S_.gk->J1().jexp() : S_.gk->J2().jexp());
}

Eigen::MatrixXcd TorusLab::coords(const Eigen::MatrixXcd& dst, const Eigen::MatrixXcd& F, const Eigen::MatrixXcd& src) const {
  return dst.adjoint() * W_.cast<cd>() * F * src;
}

ModeComplex mode_complex(const TorusLab& lab, const Mode& k) {
  const Eigen::MatrixXcd D = lab.symbol(k);
  return {lab.coords(lab.odd(), D, lab.ev_plus()),
          lab.coords(lab.ev_plus(), lab.sd_projector().cast<cd>() * D, lab.odd())};
}

CheckOutcome lifted_action_check(const TorusLab& lab, std::uint64_t seed, int samples) {
  CheckOutcome out;
  out.name = "lifted_action";
  out.anchor = check_anchor(out.name);
  out.threshold = lab.scenario().tol;
  const double f = self_dual_curvature_norm(lab.scenario());
  if (f > 1e-12) {
    out.skipped = true;
    out.note = "not an instanton (|F+| = " + std::to_string(f) + "); check skipped";
    out.finish();
    return out;
  }
  const ModeIndex mi(lab.scenario().radius);
  std::vector<Eigen::MatrixXcd> D(mi.modes.size());
  for_each_index(mi.modes.size(), [&](std::size_t i) { D[i] = lab.symbol(mi.modes[i]); });
  std::mt19937_64 rng(seed);
  const Eigen::MatrixXcd& E = lab.ev_plus();
  for (int s = 0; s < samples; ++s) {
    std::vector<Eigen::VectorXcd> a(mi.modes.size()), b(mi.modes.size());
    for (std::size_t i = 0; i < mi.modes.size(); ++i) {
      a[i] = D[i] * (E * random_vector(rng, E.cols()));
      b[i] = D[i] * (E * random_vector(rng, E.cols()));
    }
    const double scale = std::max(1e-300, field_norm(a) * field_norm(b));
    out.residual = std::max({out.residual, std::abs(global_pairing(mi, lab.chevalley(), a, b)) / scale,
                             std::abs(global_pairing(mi, lab.chevalley(), a, a)) / (field_norm(a) * field_norm(a) + 1e-300)});
  }
  out.values.emplace_back("samples", samples);
  out.finish();
  return out;
}

CheckOutcome integration_by_parts_check(const TorusLab& lab, std::uint64_t seed, int pairs) {
  CheckOutcome out;
  out.name = "integration_by_parts";
  out.anchor = check_anchor(out.name);
  out.threshold = 1e-12;
  const ModeIndex mi(lab.scenario().radius);
  std::vector<Eigen::MatrixXcd> D(mi.modes.size());
  for_each_index(mi.modes.size(), [&](std::size_t i) { D[i] = lab.symbol(mi.modes[i]); });
  const Eigen::MatrixXcd C = lab.chevalley().cast<cd>();
  double matrix_res = 0;
  for (std::size_t i = 0; i < mi.modes.size(); ++i) {
    const Eigen::MatrixXcd& Dk = D[i];
    const double r = max_abs(Dk.transpose() * C - C * D[mi.opposite(i)]) / std::max(1.0, max_abs(Dk));
    out.modes.push_back({mi.modes[i], r});
    matrix_res = std::max(matrix_res, r);
  }
  std::mt19937_64 rng(seed);
  double pair_res = 0;
  const Eigen::Index n = lab.fiber_dim();
  for (int s = 0; s < pairs; ++s) {
    std::vector<Eigen::VectorXcd> a(mi.modes.size()), b(mi.modes.size()), Da(mi.modes.size()), Db(mi.modes.size());
    for (std::size_t i = 0; i < mi.modes.size(); ++i) {
      a[i] = random_vector(rng, n);
      b[i] = random_vector(rng, n);
      Da[i] = D[i] * a[i];
      Db[i] = D[i] * b[i];
    }
    const cd lhs = global_pairing(mi, lab.chevalley(), Da, b);
    const cd rhs = global_pairing(mi, lab.chevalley(), a, Db);
    const double scale = field_norm(Da) * field_norm(b) + field_norm(a) * field_norm(Db) + 1e-300;
    pair_res = std::max(pair_res, std::abs(lhs - rhs) / scale);
  }
  out.values.emplace_back("matrix_residual", matrix_res);
  out.values.emplace_back("pair_residual", pair_res);
  out.residual = std::max(matrix_res, pair_res);
  out.finish();
  return out;
}

ComplexAssembly complex_assemble(const TorusLab& lab) {
  require_instanton(lab.scenario());
  ComplexAssembly out;
  out.check.name = "complex_composition";
  out.check.anchor = check_anchor(out.check.name);
  out.check.threshold = lab.scenario().tol;
  out.ev_plus_dim = lab.ev_plus().cols();
  out.odd_dim = lab.odd().cols();
  const auto modes = lab.modes();
  std::vector<double> res(modes.size());
  const Eigen::MatrixXcd Pp = lab.sd_projector().cast<cd>();
  for_each_index(modes.size(), [&](std::size_t i) {
    const Eigen::MatrixXcd D = lab.symbol(modes[i]);
    res[i] = max_abs(Pp * D * D * lab.ev_plus()) / std::max(1.0, max_abs(D) * max_abs(D));
  });
  for (std::size_t i = 0; i < modes.size(); ++i) {
    out.check.modes.push_back({modes[i], res[i]});
    out.check.residual = std::max(out.check.residual, res[i]);
  }
  out.check.values.emplace_back("ev_plus_fiber_dim", double(out.ev_plus_dim));
  out.check.values.emplace_back("odd_fiber_dim", double(out.odd_dim));
  out.check.finish();
  return out;
}

HarmonicSpaces harmonic_spaces(const TorusLab& lab) {
  require_instanton(lab.scenario());
  HarmonicSpaces out;
  out.check.name = "harmonic_spaces";
  out.check.anchor = check_anchor(out.check.name);
  out.check.threshold = 0.5;
  const auto modes = lab.modes();
  out.modes.resize(modes.size());
  for_each_index(modes.size(), [&](std::size_t i) {
    const ModeComplex c = mode_complex(lab, modes[i]);
    const Eigen::MatrixXcd L = c.d0 * c.d0.adjoint() + c.d1.adjoint() * c.d1;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (L + L.adjoint()));
    const double cut = 1e-9 * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    HarmonicModes& h = out.modes[i];
    h.k = modes[i];
    std::vector<Eigen::Index> keep;
    for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j)
      if (std::abs(es.eigenvalues()(j)) <= cut) keep.push_back(j);
    h.harmonic_dim = int(keep.size());
    h.basis = Eigen::MatrixXcd(lab.fiber_dim(), keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) h.basis.col(j) = lab.odd() * es.eigenvectors().col(keep[j]);
    h.cohomology_dim = int(c.d1.cols()) - la::rank(c.d1) - la::rank(c.d0);
  });
  int at_zero = 0;
  for (const auto& h : out.modes) {
    out.total += h.harmonic_dim;
    if (is_zero_mode(h.k)) at_zero = h.harmonic_dim;
    const double mismatch = std::abs(h.harmonic_dim - h.cohomology_dim);
    out.check.modes.push_back({h.k, mismatch});
    out.check.residual = std::max(out.check.residual, mismatch);
  }
  out.check.values.emplace_back("harmonic_dim", out.total);
  out.check.values.emplace_back("harmonic_dim_k0", at_zero);
  out.check.note = "residual counts the largest per-mode mismatch between harmonic and cohomology dimensions";
  out.check.finish();
  return out;
}

LesReport les_check(const TorusLab& lab) {
  require_instanton(lab.scenario());
  LesReport out;
  out.check.name = "les_exactness";
  out.check.anchor = check_anchor(out.check.name);
  out.check.threshold = lab.scenario().tol;

  const Eigen::MatrixXcd Pp = lab.sd_projector().cast<cd>();
  const Eigen::MatrixXcd even = lab.degree_projector(0).cast<cd>() + lab.degree_projector(2).cast<cd>() +
                                lab.degree_projector(4).cast<cd>();
  std::array<Eigen::MatrixXcd, 5> deg;
  for (int j = 0; j <= 4; ++j) deg[j] = lab.degree_projector(j).cast<cd>();
  if (max_abs(Pp * deg[2] - deg[2] * Pp * deg[2]) > 1e-12)
    throw InvalidInput("exact-sequence check needs a star preserving form degree (metric splitting)");
  const Eigen::MatrixXcd sd2 = la::range_basis(Eigen::MatrixXcd(Pp * deg[2]));
  const Eigen::MatrixXcd evp = la::range_basis(Eigen::MatrixXcd(Pp * even));
  const Eigen::MatrixXcd odd = la::range_basis(Eigen::MatrixXcd(deg[1] + deg[3]));
  auto basis_of = [](const Eigen::MatrixXcd& sel) { return la::range_basis(sel); };
  // Columns: left (Ω²₊, Ω³, Ω⁴), middle (Ω^ev₊, Ω^od, Ω^ev₊), right (Ω⁰, Ω¹, Ω²₊).
  const std::array<std::array<Eigen::MatrixXcd, 3>, 3> space = {{{sd2, basis_of(deg[3]), basis_of(deg[4])},
                                                                  {evp, odd, evp},
                                                                  {basis_of(deg[0]), basis_of(deg[1]), sd2}}};
  const auto modes = lab.modes();
  out.modes.resize(modes.size());

  for_each_index(modes.size(), [&](std::size_t mi) {
    const Eigen::MatrixXcd D = lab.symbol(modes[mi]);
    const Eigen::MatrixXcd DA = lab.symbol_untwisted(modes[mi]);
    const double scale = std::max(1.0, max_abs(D));
    double res = 0;
    auto mat = [&](const Eigen::MatrixXcd& dst, const Eigen::MatrixXcd& F, const Eigen::MatrixXcd& src) {
      const Eigen::MatrixXcd M = dst.adjoint() * F * src;
      res = std::max(res, max_abs(F * src - dst * M) / scale);
      return M;
    };
    const Eigen::MatrixXcd Id = Eigen::MatrixXcd::Identity(D.rows(), D.cols());
    const std::array<std::array<Eigen::MatrixXcd, 2>, 3> d = {{
        {mat(space[0][1], DA, space[0][0]), mat(space[0][2], DA, space[0][1])},
        {mat(space[1][1], D, space[1][0]), mat(space[1][2], Pp * D, space[1][1])},
        {mat(space[2][1], DA, space[2][0]), mat(space[2][2], Pp * DA, space[2][1])},
    }};
    const std::array<Eigen::MatrixXcd, 3> iota = {mat(space[1][0], Id, space[0][0]), mat(space[1][1], Id, space[0][1]),
                                                  mat(space[1][2], Pp, space[0][2])};
    const std::array<Eigen::MatrixXcd, 3> pi = {mat(space[2][0], deg[0], space[1][0]), mat(space[2][1], deg[1], space[1][1]),
                                                mat(space[2][2], deg[2], space[1][2])};
    bool exact = true;
    for (int c = 0; c < 3; ++c) res = std::max(res, max_abs(d[c][1] * d[c][0]) / (scale * scale));
    for (int i = 0; i < 3; ++i) {
      res = std::max(res, max_abs(pi[i] * iota[i]));
      exact = exact && la::rank(iota[i]) == iota[i].cols() && la::rank(pi[i]) == pi[i].rows() &&
              la::rank(iota[i]) + la::rank(pi[i]) == iota[i].rows();
    }
    for (int i = 0; i < 2; ++i) {
      res = std::max(res, max_abs(d[1][i] * iota[i] - iota[i + 1] * d[0][i]) / scale);
      res = std::max(res, max_abs(d[2][i] * pi[i] - pi[i + 1] * d[1][i]) / scale);
    }

    std::array<Cohomology, 3> coh;
    for (int c = 0; c < 3; ++c) coh[c] = cohomology(d[c][0], d[c][1]);
    LesMode& lm = out.modes[mi];
    lm.k = modes[mi];
    for (int c = 0; c < 3; ++c)
      for (int i = 0; i < 3; ++i) lm.dims[c][i] = int(coh[c].H[i].cols());

    // Sequence H⁰L → H⁰M → H⁰R → H¹L → … → H²R.
    std::vector<Eigen::MatrixXcd> maps;
    for (int i = 0; i < 3; ++i) {
      maps.push_back(coh[1].H[i].adjoint() * iota[i] * coh[0].H[i]);
      maps.push_back(coh[2].H[i].adjoint() * pi[i] * coh[1].H[i]);
      if (i == 2) break;
      const Eigen::MatrixXcd& r = coh[2].H[i];
      const Eigen::MatrixXcd m = pi[i].completeOrthogonalDecomposition().solve(r);
      const Eigen::MatrixXcd dm = d[1][i] * m;
      const Eigen::MatrixXcd l = iota[i + 1].completeOrthogonalDecomposition().solve(dm);
      res = std::max(res, max_abs(iota[i + 1] * l - dm) / scale);
      maps.push_back(coh[0].H[i + 1].adjoint() * l);
    }
    std::vector<int> nodes;
    for (int i = 0; i < 3; ++i)
      for (int c = 0; c < 3; ++c) nodes.push_back(lm.dims[c][i]);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const int in = j == 0 ? 0 : la::rank(maps[j - 1]);
      const int outr = j + 1 == nodes.size() ? 0 : la::rank(maps[j]);
      exact = exact && in + outr == nodes[j];
      if (j > 0 && j + 1 < nodes.size() && maps[j - 1].size() && maps[j].size())
        res = std::max(res, max_abs(maps[j] * maps[j - 1]) / scale);
    }
    lm.exact = exact;
    lm.residual = res;
  });

  int inexact = 0, three_term = 0, three_term_ok = 0;
  for (const auto& lm : out.modes) {
    for (int c = 0; c < 3; ++c)
      for (int i = 0; i < 3; ++i) out.totals[c][i] += lm.dims[c][i];
    if (!lm.exact) ++inexact;
    if (lm.dims[2][0] == 0 && lm.dims[2][2] == 0) {
      ++three_term;
      three_term_ok += lm.dims[1][1] == lm.dims[0][1] + lm.dims[2][1];
    }
    out.check.modes.push_back({lm.k, lm.exact ? lm.residual : 1.0});
    out.check.residual = std::max(out.check.residual, lm.exact ? lm.residual : 1.0);
  }
  out.check.values.emplace_back("inexact_modes", inexact);
  out.check.values.emplace_back("h0_twisted", out.totals[1][0]);
  out.check.values.emplace_back("hod_twisted", out.totals[1][1]);
  out.check.values.emplace_back("h2_twisted", out.totals[1][2]);
  out.check.values.emplace_back("h0_right", out.totals[2][0]);
  out.check.values.emplace_back("h2_right", out.totals[2][2]);
  out.check.values.emplace_back("three_term_modes", three_term);
  out.check.values.emplace_back("three_term_exact_modes", three_term_ok);
  if (three_term != three_term_ok) out.check.residual = std::max(out.check.residual, 1.0);
  out.check.finish();
  return out;
}

std::array<Eigen::MatrixXcd, 4> delta_decompose(const TorusLab& lab, const Mode& k) {
  require_gk(lab);
  return deltas_from_table(lab, delta_table(lab), k);
}

CheckOutcome delta_decomposition_check(const TorusLab& lab) {
  require_gk(lab);
  CheckOutcome out;
  out.name = "delta_decomposition";
  out.anchor = check_anchor(out.name);
  out.threshold = lab.scenario().tol;
  const DeltaTable t = delta_table(lab);
  const auto modes = lab.modes();
  const Eigen::MatrixXcd P20 = lab.upq(2, 0);
  std::vector<double> res(modes.size()), rel(modes.size());
  for_each_index(modes.size(), [&](std::size_t i) {
    const Eigen::MatrixXcd D = lab.symbol(modes[i]);
    const auto del = deltas_from_table(lab, t, modes[i]);
    const double scale = std::max(1.0, max_abs(D));
    res[i] = max_abs(D - del[0] - del[1] - del[2] - del[3]) / scale;
    rel[i] = std::max(max_abs(del[2] * del[2] * P20), max_abs(del[3] * del[3] * P20)) / (scale * scale);
  });
  double relations = 0;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    out.modes.push_back({modes[i], std::max(res[i], rel[i])});
    out.residual = std::max(out.residual, res[i]);
    relations = std::max(relations, rel[i]);
  }
  out.values.emplace_back("sum_residual", out.residual);
  out.values.emplace_back("bar_square_on_U20", relations);
  out.residual = std::max(out.residual, relations);
  out.finish();
  return out;
}

CheckOutcome adjoint_check(const TorusLab& lab) {
  require_gk(lab);
  CheckOutcome out;
  out.name = "delta_adjoints";
  out.anchor = check_anchor(out.name);
  out.threshold = lab.scenario().tol;
  const DeltaTable t = delta_table(lab);
  const auto modes = lab.modes();
  const Eigen::MatrixXcd W = lab.hermitian().cast<cd>(), Winv = lab.hermitian_inverse().cast<cd>();
  auto adj = [&](const Eigen::MatrixXcd& T) -> Eigen::MatrixXcd { return Winv * T.adjoint() * W; };
  std::vector<std::array<double, 3>> res(modes.size());
  for_each_index(modes.size(), [&](std::size_t i) {
    const Eigen::MatrixXcd D = lab.symbol(modes[i]);
    const auto del = deltas_from_table(lab, t, modes[i]);
    const double scale = std::max(1.0, max_abs(D));
    res[i] = {max_abs(adj(del[0]) + del[2]) / scale, max_abs(adj(del[1]) - del[3]) / scale,
              max_abs(adj(D) - (-del[0] - del[2] + del[1] + del[3])) / scale};
  });
  std::array<double, 3> worst{};
  for (std::size_t i = 0; i < modes.size(); ++i) {
    for (int j = 0; j < 3; ++j) worst[j] = std::max(worst[j], res[i][j]);
    out.modes.push_back({modes[i], std::max({res[i][0], res[i][1], res[i][2]})});
  }
  out.values.emplace_back("plus_residual", worst[0]);
  out.values.emplace_back("minus_residual", worst[1]);
  out.values.emplace_back("full_adjoint_residual", worst[2]);
  out.residual = std::max({worst[0], worst[1], worst[2]});
  out.finish();
  return out;
}

CheckOutcome laplacian_check(const TorusLab& lab) {
  require_gk(lab);
  require_instanton(lab.scenario());
  CheckOutcome out;
  out.name = "laplacian_identities";
  out.anchor = check_anchor(out.name);
  out.threshold = 1e-9;
  const DeltaTable t = delta_table(lab);
  const auto modes = lab.modes();
  const Eigen::MatrixXcd& E = lab.ev_plus();
  const Eigen::MatrixXcd& O = lab.odd();
  const Eigen::MatrixXcd Pp = lab.sd_projector().cast<cd>();
  const Eigen::MatrixXcd mixed = lab.coords(O, lab.upq(-1, 1) + lab.upq(1, -1), O);
  const Eigen::MatrixXcd same = lab.coords(O, lab.upq(1, 1) + lab.upq(-1, -1), O);
  std::vector<Eigen::MatrixXcd> odd_blocks, ev_blocks;
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})
    odd_blocks.push_back(lab.coords(O, lab.upq(p, q), O));
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{2, 0}, {-2, 0}, {0, 2}, {0, -2}})
    ev_blocks.push_back(lab.coords(E, lab.upq(p, q), E));

  enum { EV, MIXED_H, MIXED_MINUS, SAME_H, SAME_PLUS, PRESERVE, TERMINAL, COUNT };
  std::vector<std::array<double, COUNT>> res(modes.size());
  for_each_index(modes.size(), [&](std::size_t i) {
    const Eigen::MatrixXcd D = lab.symbol(modes[i]);
    const auto del = deltas_from_table(lab, t, modes[i]);
    const std::array<Eigen::MatrixXcd, 3> ops = {D, del[0] + del[2], del[1] + del[3]};
    std::array<Eigen::MatrixXcd, 3> ev, od, term;
    for (int j = 0; j < 3; ++j) {
      const Eigen::MatrixXcd a = lab.coords(O, ops[j], E);
      const Eigen::MatrixXcd b = lab.coords(E, Pp * ops[j], O);
      ev[j] = a.adjoint() * a;
      od[j] = a * a.adjoint() + b.adjoint() * b;
      term[j] = b * b.adjoint();
    }
    // Squares (δ± + δ̄±)² on odd forms; δ₊ + δ̄₊ is skew-adjoint and δ₋ + δ̄₋ self-adjoint.
    const Eigen::MatrixXcd sq_plus = lab.coords(O, ops[1] * ops[1], O);
    const Eigen::MatrixXcd sq_minus = lab.coords(O, ops[2] * ops[2], O);
    const double scale = std::max(1.0, max_abs(od[0]));
    auto& r = res[i];
    r[EV] = std::max(max_abs(ev[0] - 2.0 * ev[1]), max_abs(ev[0] - 2.0 * ev[2])) / scale;
    r[MIXED_H] = std::max(max_abs((od[0] + 2.0 * sq_plus) * mixed), max_abs((od[0] - od[1]) * mixed)) / scale;
    r[MIXED_MINUS] = max_abs(od[2] * mixed) / scale;
    r[SAME_H] = std::max(max_abs((od[0] - 2.0 * sq_minus) * same), max_abs((od[0] - od[2]) * same)) / scale;
    r[SAME_PLUS] = max_abs(od[1] * same) / scale;
    r[TERMINAL] = std::max(max_abs(term[0] - 2.0 * term[1]), max_abs(term[0] - 2.0 * term[2])) / scale;
    double pres = 0;
    for (int j = 0; j < 3; ++j) {
      for (const auto& P : odd_blocks) pres = std::max(pres, max_abs(od[j] * P - P * od[j]));
      for (const auto& P : ev_blocks) pres = std::max(pres, max_abs(ev[j] * P - P * ev[j]));
    }
    r[PRESERVE] = pres / scale;
  });
  std::array<double, COUNT> worst{};
  for (std::size_t i = 0; i < modes.size(); ++i) {
    double m = 0;
    for (int j = 0; j < COUNT; ++j) {
      worst[j] = std::max(worst[j], res[i][j]);
      if (j != TERMINAL) m = std::max(m, res[i][j]);
    }
    out.modes.push_back({modes[i], m});
    out.residual = std::max(out.residual, m);
  }
  out.values.emplace_back("ev_plus", worst[EV]);
  out.values.emplace_back("mixed_block_H_vs_plus", worst[MIXED_H]);
  out.values.emplace_back("mixed_block_minus_zero", worst[MIXED_MINUS]);
  out.values.emplace_back("same_block_H_vs_minus", worst[SAME_H]);
  out.values.emplace_back("same_block_plus_zero", worst[SAME_PLUS]);
  out.values.emplace_back("pq_preservation", worst[PRESERVE]);
  out.values.emplace_back("terminal_ev_plus", worst[TERMINAL]);
  out.finish();
  return out;
}

CheckOutcome gk_inheritance_check(const TorusLab& lab) {
  require_gk(lab);
  CheckOutcome out;
  out.name = "gk_inheritance";
  out.anchor = check_anchor(out.name);
  out.threshold = lab.scenario().tol;
  const HarmonicSpaces hs = harmonic_spaces(lab);
  const Eigen::MatrixXcd& O = lab.odd();
  const std::array<Eigen::MatrixXcd, 2> J = {lab.coords(O, lab.jexp(1), O), lab.coords(O, lab.jexp(2), O)};
  std::vector<Eigen::MatrixXcd> blocks;
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}})
    blocks.push_back(lab.coords(O, lab.upq(p, q), O));
  const GenMetric G = lab.scenario().gk->metric();
  const Eigen::MatrixXd star16 = hodge_star_matrix(G, lab.scenario().orientation);
  const LaForm<cd> A(4, lab.scenario().algebra, lab.scenario().A.coeffs().cast<cd>());
  const Form<cd> H = lab.scenario().H.cast<cd>();

  double invariance = 0, components = 0, tau = 0, min_gram = std::numeric_limits<double>::infinity();
  for (const auto& h : hs.modes) {
    if (h.harmonic_dim == 0) continue;
    const Eigen::MatrixXcd c = O.adjoint() * lab.hermitian().cast<cd>() * h.basis;
    const Eigen::MatrixXcd proj_out = Eigen::MatrixXcd::Identity(c.rows(), c.rows()) - c * c.adjoint();
    double r = 0;
    for (const auto& Ji : J) r = std::max(r, max_abs(proj_out * Ji * c));
    double pc = 0;
    for (const auto& P : blocks) pc = std::max(pc, max_abs(proj_out * P * c));

    // Self-dual representatives X + ⋆X through exterior-algebra operations.
    Form<cd> kvec(4);
    for (int j = 0; j < 4; ++j) kvec[index_mask(j + 1)] = kI * kTwoPi * double(h.k[j]);
    double t = 0;
    Eigen::MatrixXcd gram(h.harmonic_dim, h.harmonic_dim);
    std::vector<LaForm<cd>> forms;
    for (int j = 0; j < h.harmonic_dim; ++j) forms.push_back(to_laform(h.basis.col(j), lab));
    for (int a = 0; a < h.harmonic_dim; ++a) {
      LaForm<cd> sd(4, lab.scenario().algebra);
      for (int e = 0; e < lab.lie_dim(); ++e) {
        const Form<cd> comp = forms[a].component(e);
        sd.set_component(e, cd(0.5) * (comp + Form<cd>(4, star16.cast<cd>() * comp.coeffs())));
      }
      const LaForm<cd> X = sd.part(1), X3 = sd.part(3);
      const LaForm<cd> dX = wedge(kvec, X) + bracket_wedge(A, X);
      Eigen::VectorXcd v = from_laform(dX.part(2));
      const double self_dual = (lab.sd_projector().cast<cd>() * v).norm();
      const LaForm<cd> top4 = wedge(kvec, X3) + bracket_wedge(A, X3) + wedge(H, X);
      t = std::max({t, self_dual, from_laform(top4.part(4)).norm()});
      const Eigen::MatrixXd& kappa = lab.scenario().algebra->kappa();
      for (int b = 0; b < h.harmonic_dim; ++b) {
        cd s = 0;
        for (int i = 0; i < lab.lie_dim(); ++i)
          for (int j = 0; j < lab.lie_dim(); ++j)
            if (kappa(i, j) != 0.0)
              s += kappa(i, j) * chevalley(forms[a].component(i),
                                           Form<cd>(4, star16.cast<cd>() * forms[b].component(j).coeffs().conjugate()));
        gram(b, a) = s;
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (gram + gram.adjoint()), Eigen::EigenvaluesOnly);
    min_gram = std::min(min_gram, es.eigenvalues().minCoeff());
    invariance = std::max(invariance, r);
    components = std::max(components, pc);
    tau = std::max(tau, t);
    out.modes.push_back({h.k, std::max({r, pc, t})});
  }
  if (!std::isfinite(min_gram)) min_gram = 1.0;
  out.values.emplace_back("harmonic_dim", hs.total);
  out.values.emplace_back("invariance_residual", invariance);
  out.values.emplace_back("pq_component_residual", components);
  out.values.emplace_back("tau_plus_residual", tau);
  out.values.emplace_back("metric_min_eigenvalue", min_gram);
  out.residual = std::max({invariance, components, tau, min_gram > 0 ? 0.0 : 1.0});
  out.finish();
  return out;
}

}  // namespace genk
