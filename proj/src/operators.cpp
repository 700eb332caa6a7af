#include "scarf/operators.hpp"

#include <cmath>
#include <numbers>

#include "scarf/decomp.hpp"
#include "scarf/error.hpp"
#include "scarf/orthopoly.hpp"
#include "scarf/serialize.hpp"
#include "scarf/spoly.hpp"

namespace scarf {

namespace {

constexpr double kPi = std::numbers::pi;

Jet product(const Jet& a, const Jet& b) {
  return {a.value * b.value, a.d1 * b.value + a.value * b.d1, a.d2 * b.value + 2 * a.d1 * b.d1 + a.value * b.d2};
}

Jet scaled(const Jet& a, double s) { return {a.value * s, a.d1 * s, a.d2 * s}; }

Jet& accumulate(Jet& acc, const Jet& a) {
  acc.value += a.value;
  acc.d1 += a.d1;
  acc.d2 += a.d2;
  return acc;
}

// exp(b atanh sin chi), with atanh sin chi = asinh tan chi.
Jet finv_jet(double b, double chi) {
  const double c = std::cos(chi);
  const double v = std::exp(b * std::asinh(std::tan(chi)));
  return {v, b / c * v, (b * std::sin(chi) + b * b) / (c * c) * v};
}

Jet cos_power_jet(double p, double chi) {
  if (p == 0.0) return {1.0, 0.0, 0.0};
  const double v = std::pow(std::cos(chi), p);
  const double t = std::tan(chi);
  return {v, -p * t * v, (p * (p - 1) * t * t - p) * v};
}

// f(sin chi) from f, f', f'' at s.
Jet chain_sin(double f, double df, double ddf, double chi) {
  const double s = std::sin(chi);
  const double c = std::cos(chi);
  return {f, df * c, ddf * c * c - df * s};
}

Jet gegenbauer_jet(int k, int lambda, double chi) {
  const double s = std::sin(chi);
  return chain_sin(gegenbauer_value(k, lambda, s), gegenbauer_value(k, lambda, s, 1), gegenbauer_value(k, lambda, s, 2),
                   chi);
}

Jet jacobi_jet(int n, double alpha, double beta, double chi) {
  const double s = std::sin(chi);
  return chain_sin(jacobi_value(n, alpha, beta, s), jacobi_value(n, alpha, beta, s, 1),
                   jacobi_value(n, alpha, beta, s, 2), chi);
}

void require_interior(double chi) {
  if (!(std::abs(chi) < kPi / 2)) {
    throw Error(ErrorCode::DomainError, "chi=" + std::to_string(chi) + " outside (-pi/2, pi/2)");
  }
}

void require_state_indices(int N, int ell) {
  if (N < 1 || ell < 0 || ell > N - 1) {
    throw Error(ErrorCode::InvalidArgument, "need N >= 1 and 0 <= ell <= N-1");
  }
}

void require_points(int points) {
  if (points < 1) throw Error(ErrorCode::InvalidArgument, "grid needs at least one point");
}

// K^2 + 1 on a jet, for orbital momentum l.
double casimir_plus_one(const Jet& f, int ell, double chi) {
  const double c = std::cos(chi);
  return -f.d2 + 2 * std::tan(chi) * f.d1 + (ell * (ell + 1.0) / (c * c) + 1.0) * f.value;
}

// r with target = r * output, when r is a constant.
std::optional<Rational> constant_ratio(const BPoly& output, const BPoly& target) {
  if (output.is_zero() || output.degree() != target.degree()) return std::nullopt;
  const Rational r = target.coefficient(target.degree()) / output.coefficient(output.degree());
  if (target != output * r) return std::nullopt;
  return r;
}

PolyComponent make_component(int K, BPoly output, BPoly target, const Rational& b) {
  PolyComponent c;
  c.K = K;
  c.output_at_b = output.eval(b);
  c.target_at_b = target.eval(b);
  c.match = output == target;
  c.ratio = constant_ratio(output, target);
  c.output = std::move(output);
  c.target = std::move(target);
  return c;
}

PolyForm apply_terms(const std::string& name, const std::vector<CasimirTerm>& terms, const DecompositionTable& table,
                     const Rational& b) {
  PolyForm form;
  form.name = name;
  form.available = !terms.empty();
  if (!form.available) return form;
  const Rational n2 = Rational(table.N()) * Rational(table.N());
  for (int K = table.lowest_K(); K <= table.highest_K(); ++K) {
    const Rational x = ProjectorPolynomial::node(K);
    BPoly out;
    for (const auto& t : terms) out += t.at(x);
    form.components.push_back(make_component(K, std::move(out), table.coefficient(K) * n2, b));
  }
  return form;
}

std::vector<Rational> poly_mul_linear(const std::vector<Rational>& p, const Rational& root, const Rational& scale) {
  // p(x) * (x - root) * scale
  std::vector<Rational> out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i] * scale;
    out[i] -= p[i] * root * scale;
  }
  return out;
}

}  // namespace

const char* state_kind_name(StateKind kind) {
  switch (kind) {
    case StateKind::FInv: return "F_inv";
    case StateKind::S: return "S";
    case StateKind::STilde: return "S_tilde";
    case StateKind::Phi: return "phi";
    case StateKind::U: return "U";
  }
  return "?";
}

Jet eval_state(const StateSampler& st, double chi) {
  require_interior(chi);
  if (!std::isfinite(st.b)) throw Error(ErrorCode::InvalidArgument, "b must be finite");
  switch (st.kind) {
    case StateKind::FInv:
      return finv_jet(st.b, chi);
    case StateKind::S:
    case StateKind::STilde: {
      if (st.ell < 0 || st.index < st.ell) throw Error(ErrorCode::InvalidArgument, "need 0 <= ell <= K");
      Jet s = product(cos_power_jet(st.ell, chi), gegenbauer_jet(st.index - st.ell, st.ell + 1, chi));
      return st.kind == StateKind::S ? s : product(finv_jet(st.b, chi), s);
    }
    case StateKind::Phi:
    case StateKind::U: {
      require_state_indices(st.index, st.ell);
      if (st.d < 1) throw Error(ErrorCode::InvalidArgument, "d must be >= 1");
      const double a = st.ell + (st.d - 2) / 2.0;
      const int n = st.index - 1 - st.ell;
      const double power = st.kind == StateKind::Phi ? st.ell : a + 1;
      return product(finv_jet(st.b, chi),
                     product(cos_power_jet(power, chi), jacobi_jet(n, a - st.b + 0.5, a + st.b + 0.5, chi)));
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown state kind");
}

std::vector<double> interior_grid(int points) {
  require_points(points);
  std::vector<double> g(static_cast<std::size_t>(points));
  const double h = kPi / (points + 1);
  for (int j = 1; j <= points; ++j) g[static_cast<std::size_t>(j - 1)] = -kPi / 2 + j * h;
  return g;
}

double eval_at(const BPoly& p, double b) { return p.eval(Rational::from_double(b)).to_double(); }

double gradient_identity_residual(int N, int ell, double b, int points) {
  require_state_indices(N, ell);
  const auto table = jacobi_to_gegenbauer(N, ell);
  std::vector<double> c;
  for (int K = ell; K < N; ++K) c.push_back(eval_at(table.coefficient(K), b));
  const int n = N - 1 - ell;
  const double alpha = ell - b + 0.5;
  const double beta = ell + b + 0.5;
  const double n2 = static_cast<double>(N) * N;

  double worst = 0.0;
  for (double chi : interior_grid(points)) {
    double casimir = 0.0;
    for (int K = ell; K < N; ++K) {
      const double stilde = eval_state({StateKind::STilde, K, ell, b}, chi).value;
      casimir += (K + 1.0) * (K + 1.0) * c[static_cast<std::size_t>(K - ell)] * stilde;
    }
    const double prefactor = finv_jet(b, chi).value * std::pow(std::cos(chi), ell);
    const double gradient = 2 * b * prefactor * jacobi_value(n, alpha, beta, std::sin(chi), 1);
    const double phi = eval_state({StateKind::Phi, N, ell, b}, chi).value;
    worst = std::max(worst, std::abs(casimir - gradient - n2 * phi));
  }
  return worst;
}

double casimir_differential_residual(int K, int ell, double b, int points) {
  if (ell < 0 || K < ell) throw Error(ErrorCode::InvalidArgument, "need 0 <= ell <= K");
  const double eig = (K + 1.0) * (K + 1.0);
  double worst = 0.0;
  double scale = 1.0;
  for (double chi : interior_grid(points)) {
    const Jet f = eval_state({StateKind::STilde, K, ell, b}, chi);
    const double c = std::cos(chi);
    const double t = std::tan(chi);
    const double applied = casimir_plus_one(f, ell, chi) + (-b * b / (c * c) - b * t / c) * f.value + 2 * b / c * f.d1;
    worst = std::max(worst, std::abs(applied - eig * f.value));
    scale = std::max(scale, std::abs(eig * f.value));
  }
  return worst / scale;
}

double commutator_probe(int N, int ell, double b, int points) {
  require_state_indices(N, ell);
  const auto table = jacobi_to_gegenbauer(N, ell);
  const auto basis = rescaled_harmonic_basis(N, ell);

  // S~-components of H_Sc phi: F^{-1} cos^l R(s) with
  // R = sum_K (K+1)^2 c_K C_{K-l} - 2b dP/ds, expanded exactly in Q[b].
  SPoly R;
  for (int K = ell; K < N; ++K) {
    R += basis[static_cast<std::size_t>(K - ell)] * (table.coefficient(K) * Rational((K + 1) * (K + 1)));
  }
  R += jacobi_exact(N - 1 - ell, ell).derivative() * (BPoly::b() * Rational(-2));
  const auto r = triangular_change_of_basis(R, basis);

  std::vector<double> c_now;
  std::vector<double> c_after;
  for (int K = ell; K < N; ++K) {
    const auto i = static_cast<std::size_t>(K - ell);
    const double casimir = K * (K + 2.0);
    c_now.push_back(casimir * eval_at(table.coefficient(K), b));
    c_after.push_back(casimir * eval_at(r[i], b));
  }

  const double h = kPi / (points + 1);
  double sum = 0.0;
  for (double chi : interior_grid(points)) {
    Jet f;  // K~^2 phi
    double after = 0.0;
    for (int K = ell; K < N; ++K) {
      const auto i = static_cast<std::size_t>(K - ell);
      const Jet s = eval_state({StateKind::STilde, K, ell, b}, chi);
      accumulate(f, scaled(s, c_now[i]));
      after += c_after[i] * s.value;
    }
    const double cs = std::cos(chi);
    const double V = b * b / (cs * cs) - b * (2 * ell + 1) * std::tan(chi) / cs;
    const double before = casimir_plus_one(f, ell, chi) + V * f.value;
    const double diff = before - after;
    sum += diff * diff * cs * cs * h;
  }
  return std::sqrt(sum);
}

bool LedgerReport::holds() const {
  if (components.empty()) return false;
  for (const auto& c : components) {
    if (!c.match) return false;
  }
  return true;
}

nlohmann::json LedgerReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : components) {
    rows.push_back({{"K", c.K},
                    {"eigen_term", scarf::to_json(c.eigen_term)},
                    {"gradient_term", scarf::to_json(c.gradient_term)},
                    {"total", scarf::to_json(c.total)},
                    {"target", scarf::to_json(c.target)},
                    {"total_text", c.total.to_string()},
                    {"match", c.match}});
  }
  return {{"schema", 1}, {"N", N}, {"ell", ell}, {"holds", holds()}, {"components", rows}};
}

LedgerReport ledger_identity(int N, int ell) {
  require_state_indices(N, ell);
  const auto table = jacobi_to_gegenbauer(N, ell);
  const auto basis = rescaled_harmonic_basis(N, ell);
  const SPoly dP = jacobi_exact(N - 1 - ell, ell).derivative();
  const auto g = triangular_change_of_basis(dP, basis);
  const Rational n2 = Rational(N) * Rational(N);
  LedgerReport report;
  report.N = N;
  report.ell = ell;
  for (int K = ell; K < N; ++K) {
    const auto i = static_cast<std::size_t>(K - ell);
    LedgerComponent c;
    c.K = K;
    c.eigen_term = table.coefficient(K) * Rational((K + 1) * (K + 1));
    c.gradient_term = i < g.size() ? g[i] * BPoly::b() * Rational(-2) : BPoly();
    c.total = c.eigen_term + c.gradient_term;
    c.target = table.coefficient(K) * n2;
    c.match = c.total == c.target;
    report.components.push_back(std::move(c));
  }
  return report;
}

ProjectorPolynomial::ProjectorPolynomial(int N, int ell) : N_(N), ell_(ell) {
  require_state_indices(N, ell);
  for (int K = ell; K < N; ++K) nodes_.push_back(node(K));
}

Rational ProjectorPolynomial::lagrange(int K, const Rational& x) const {
  if (K < ell_ || K > N_ - 1) throw Error(ErrorCode::InvalidArgument, "K outside [ell, N-1]");
  const Rational xk = node(K);
  Rational acc(1);
  for (const auto& xj : nodes_) {
    if (xj == xk) continue;
    acc *= (x - xj) / (xk - xj);
  }
  return acc;
}

BPoly CasimirTerm::at(const Rational& x) const {
  Rational scalar = x + shift;
  for (const auto& [node, target] : factors) scalar *= (x - node) / (target - node);
  return coefficient * scalar;
}

std::vector<CasimirTerm> printed_casimir_polynomial(int N, int ell) {
  require_state_indices(N, ell);
  const Rational n(N);
  const Rational x1 = n * n;                                // N^2
  const Rational x2 = (n - Rational(1)) * (n - Rational(1));  // (N-1)^2
  const Rational x3 = (n - Rational(2)) * (n - Rational(2));  // (N-2)^2
  const BPoly b = BPoly::b();
  std::vector<CasimirTerm> terms;
  if (ell == N - 2) {
    terms.push_back({BPoly(1), Rational(0), {{x2, x1}}});
    terms.push_back({-b, Rational(2 * N - 1), {{x1, x2}}});
  } else if (ell == N - 3) {
    terms.push_back({BPoly(1), Rational(0), {{x2, x1}, {x3, x1}}});
    terms.push_back({b * (-(n - Rational(1)) / (Rational(2) * (n - Rational(2)))), Rational(2 * N - 1), {{x1, x2}, {x3, x2}}});
    terms.push_back({BPoly::monomial(Rational(1, 2), 2), Rational(4 * (N - 1)), {{x1, x3}, {x2, x3}}});
  }
  return terms;
}

bool PolyForm::all_match() const {
  if (!available || components.empty()) return false;
  for (const auto& c : components) {
    if (!c.match) return false;
  }
  return true;
}

nlohmann::json PolyForm::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : components) {
    rows.push_back({{"K", c.K},
                    {"output", scarf::to_json(c.output)},
                    {"target", scarf::to_json(c.target)},
                    {"output_text", c.output.to_string()},
                    {"target_text", c.target.to_string()},
                    {"output_at_b", c.output_at_b.to_string()},
                    {"target_at_b", c.target_at_b.to_string()},
                    {"ratio", c.ratio ? nlohmann::json(c.ratio->to_string()) : nlohmann::json(nullptr)},
                    {"match", c.match}});
  }
  return {{"name", name}, {"available", available}, {"all_match", all_match()}, {"components", rows}};
}

nlohmann::json DynamicalReport::to_json() const {
  nlohmann::json poly = nlohmann::json::array();
  for (const auto& p : generalized_polynomial) poly.push_back(scarf::to_json(p));
  return {{"schema", 1},
          {"N", N},
          {"ell", ell},
          {"b", b.to_string()},
          {"literal", literal.to_json()},
          {"corrected", corrected.to_json()},
          {"generalized", generalized.to_json()},
          {"generalized_polynomial", poly}};
}

DynamicalReport dynamical_polynomial_apply(int N, int ell, const Rational& b) {
  require_state_indices(N, ell);
  const auto table = jacobi_to_gegenbauer(N, ell);
  DynamicalReport report;
  report.N = N;
  report.ell = ell;
  report.b = b;

  auto terms = printed_casimir_polynomial(N, ell);
  report.literal = apply_terms("literal", terms, table, b);
  if (!terms.empty()) terms.front().coefficient *= table.coefficient(N - 1);
  report.corrected = apply_terms("corrected", terms, table, b);

  // D(x) = sum_K N^2 c_K L_K(x), expanded in powers of x.
  const Rational n2 = Rational(N) * Rational(N);
  const ProjectorPolynomial proj(N, ell);
  std::vector<BPoly> D(proj.nodes().size());
  for (int K = ell; K < N; ++K) {
    const Rational xk = ProjectorPolynomial::node(K);
    std::vector<Rational> L{Rational(1)};
    for (const auto& xj : proj.nodes()) {
      if (xj != xk) L = poly_mul_linear(L, xj, Rational(1) / (xk - xj));
    }
    const BPoly weight = table.coefficient(K) * n2;
    for (std::size_t k = 0; k < L.size(); ++k) D[k] += weight * L[k];
  }
  report.generalized_polynomial = D;
  report.generalized.name = "generalized";
  report.generalized.available = true;
  for (int K = ell; K < N; ++K) {
    const Rational x = ProjectorPolynomial::node(K);
    BPoly out;
    Rational xp(1);
    for (const auto& coeff : D) {
      out += coeff * xp;
      xp *= x;
    }
    report.generalized.components.push_back(make_component(K, std::move(out), table.coefficient(K) * n2, b));
  }
  return report;
}

}  // namespace scarf
