#include "scarf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scarf/error.hpp"

namespace scarf {

namespace {

constexpr double kPi = std::numbers::pi;

using Matrix = std::vector<std::vector<double>>;

// (P_n(x), P_n'(x)) by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1.0;
  double p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

double state_weight(Measure measure, int d, double chi) {
  return measure == Measure::DChi ? 1.0 : std::pow(std::cos(chi), d);
}

// Accumulates w * v_i v_j * weight(chi) into G for one node t in (-1, 1).
void add_node(Matrix& G, const std::vector<StateSampler>& states, Measure measure, int d, double t, double w) {
  const double chi = kPi / 2 * t;
  if (!(std::abs(chi) < kPi / 2)) return;
  const double scale = w * kPi / 2 * state_weight(measure, d, chi);
  std::vector<double> v(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) v[i] = eval_state(states[i], chi).value;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) G[i][j] += scale * v[i] * v[j];
  }
}

Matrix symmetrize(Matrix G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) G[j][i] = G[i][j];
  }
  return G;
}

Matrix gram_gauss(const std::vector<StateSampler>& states, Measure measure, int d, const QuadratureRule& rule) {
  Matrix G(states.size(), std::vector<double>(states.size(), 0.0));
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) add_node(G, states, measure, d, rule.nodes[k], rule.weights[k]);
  return symmetrize(std::move(G));
}

// Largest |A_ij - B_ij| / sqrt(|B_ii B_jj|).
double relative_change(const Matrix& A, const Matrix& B) {
  double worst = 0.0;
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < A.size(); ++j) {
      const double scale = std::sqrt(std::abs(B[i][i] * B[j][j]));
      worst = std::max(worst, std::abs(A[i][j] - B[i][j]) / std::max(scale, 1e-300));
    }
  }
  return worst;
}

// Tanh-sinh on the whole matrix: step h = 2^-level, levels reuse the
// previous nodes (only odd multiples are new).
Matrix gram_tanh_sinh(const std::vector<StateSampler>& states, Measure measure, int d) {
  constexpr double kTMax = 4.0;
  constexpr int kMaxLevel = 12;
  const std::size_t n = states.size();
  Matrix sum(n, std::vector<double>(n, 0.0));
  auto node = [&](double t) {
    const double u = kPi / 2 * std::sinh(t);
    const double ch = std::cosh(u);
    const double w = kPi / 2 * std::cosh(t) / (ch * ch);
    add_node(sum, states, measure, d, std::tanh(u), w);
  };
  double h = 1.0;
  node(0.0);
  for (int k = 1; k * h <= kTMax; ++k) {
    node(k * h);
    node(-k * h);
  }
  auto scaled = [&](double step) {
    Matrix G = symmetrize(sum);
    for (auto& row : G) {
      for (double& x : row) x *= step;
    }
    return G;
  };
  Matrix prev = scaled(h);
  for (int level = 1; level <= kMaxLevel; ++level) {
    h /= 2;
    for (int k = 1; k * h <= kTMax; k += 2) {
      node(k * h);
      node(-k * h);
    }
    Matrix G = scaled(h);
    if (level >= 3 && relative_change(prev, G) < 1e-13) return G;
    prev = std::move(G);
  }
  return prev;
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "quadrature order must be >= 1");
  QuadratureRule rule;
  rule.order = n;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 1; i <= (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i - 0.25) / (n + 0.5));
    if (2 * i - 1 == n) x = 0.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged) throw Error(ErrorCode::ConvergenceFailure, "Newton iteration for Legendre root did not converge");
    const double dp = legendre(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto hi = static_cast<std::size_t>(n - i);
    const auto lo = static_cast<std::size_t>(i - 1);
    rule.nodes[hi] = x;
    rule.nodes[lo] = -x;
    rule.weights[hi] = w;
    rule.weights[lo] = w;
  }
  return rule;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
  double acc = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) acc += rule.weights[k] * f(rule.nodes[k]);
  return acc;
}

double tanh_sinh(const std::function<double(double)>& f, double tol) {
  constexpr double kTMax = 4.0;
  double sum = 0.0;
  double abs_sum = 0.0;
  auto node = [&](double t) {
    const double u = kPi / 2 * std::sinh(t);
    const double x = std::tanh(u);
    if (std::abs(x) >= 1.0) return;
    const double ch = std::cosh(u);
    const double v = kPi / 2 * std::cosh(t) / (ch * ch) * f(x);
    sum += v;
    abs_sum += std::abs(v);
  };
  double h = 1.0;
  node(0.0);
  for (int k = 1; k * h <= kTMax; ++k) {
    node(k * h);
    node(-k * h);
  }
  double prev = sum * h;
  for (int level = 1; level <= 12; ++level) {
    h /= 2;
    for (int k = 1; k * h <= kTMax; k += 2) {
      node(k * h);
      node(-k * h);
    }
    const double cur = sum * h;
    if (level >= 3 && std::abs(cur - prev) <= tol * std::max(abs_sum * h, 1e-300)) return cur;
    prev = cur;
  }
  return prev;
}

const char* measure_name(Measure m) { return m == Measure::DChi ? "dchi" : "cos^d dchi"; }

nlohmann::json GramReport::to_json() const {
  return {{"schema", 1},
          {"method", method},
          {"order", order},
          {"raw", raw},
          {"normalized", normalized},
          {"max_off_diagonal", max_off_diagonal},
          {"max_diagonal_error", max_diagonal_error}};
}

GramReport gram_matrix(const std::vector<StateSampler>& states, Measure measure, int d, int order) {
  if (states.empty()) throw Error(ErrorCode::InvalidArgument, "gram_matrix needs at least one state");
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be >= 1");
  int max_index = 1;
  for (const auto& s : states) max_index = std::max(max_index, s.index);
  if (order <= 0) order = 128 + 32 * max_index;

  GramReport report;
  report.order = order;
  const Matrix G1 = gram_gauss(states, measure, d, gauss_legendre(order));
  const Matrix G2 = gram_gauss(states, measure, d, gauss_legendre(2 * order));
  if (relative_change(G1, G2) <= 1e-10) {
    report.method = "gauss-legendre";
    report.raw = G2;
  } else {
    report.method = "tanh-sinh";
    report.raw = gram_tanh_sinh(states, measure, d);
  }

  const std::size_t n = states.size();
  report.normalized.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = report.raw[i][j] / std::sqrt(report.raw[i][i] * report.raw[j][j]);
      report.normalized[i][j] = v;
      if (i == j) {
        report.max_diagonal_error = std::max(report.max_diagonal_error, std::abs(v - 1.0));
      } else {
        report.max_off_diagonal = std::max(report.max_off_diagonal, std::abs(v));
      }
    }
  }
  return report;
}

}  // namespace scarf
