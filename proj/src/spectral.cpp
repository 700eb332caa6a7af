#include "scarf/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include <boost/math/special_functions/beta.hpp>

#include "scarf/error.hpp"

namespace scarf {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite_b(double b) {
  if (!std::isfinite(b)) throw Error(ErrorCode::InvalidArgument, "b must be finite");
}

void require_shape(const SpectralProblem& p, int min_M) {
  if (p.d < 1) throw Error(ErrorCode::InvalidArgument, "d must be >= 1");
  if (p.channel < 0) throw Error(ErrorCode::InvalidArgument, "channel must be >= 0");
  if (p.M < min_M) throw Error(ErrorCode::InvalidArgument, "grid M must be >= " + std::to_string(min_M));
  require_finite_b(p.b);
  check_normalizable(p);
}

Tridiagonal build_plain(const SpectralProblem& p) {
  const auto M = static_cast<std::size_t>(p.M);
  Tridiagonal T;
  T.h = kPi / (p.M + 1);
  const double inv_h2 = 1.0 / (T.h * T.h);
  T.diagonal.resize(M);
  T.off_diagonal.assign(M - 1, -inv_h2);
  for (std::size_t j = 0; j < M; ++j) {
    const double chi = -kPi / 2 + static_cast<double>(j + 1) * T.h;
    T.diagonal[j] = 2.0 * inv_h2 + scarf_potential(p, chi);
  }
  return T;
}

// Measure (1-s)^alpha (1+s)^beta ds between grid half-indices, normalized to
// total mass 1. Half-index m sits at u = chi + pi/2 = m h / 2. The lower half
// of the interval uses the regularized incomplete beta in (1+s)/2 and the
// upper half its mirror in (1-s)/2, so neither endpoint loses digits.
class WeightMeasure {
 public:
  WeightMeasure(double alpha, double beta, int M) : alpha_(alpha), beta_(beta), mid_(M + 1), h_(kPi / (M + 1)) {}

  double operator()(int m1, int m2) const {
    m1 = std::clamp(m1, 0, 2 * mid_);
    m2 = std::clamp(m2, 0, 2 * mid_);
    if (m2 <= mid_) return lower(m2) - lower(m1);
    if (m1 >= mid_) return upper(m1) - upper(m2);
    return (lower(mid_) - lower(m1)) + (upper(mid_) - upper(m2));
  }

 private:
  double lower(int m) const {
    const double x = std::sin(m * h_ / 4);
    return boost::math::ibeta(beta_ + 1, alpha_ + 1, x * x);
  }
  double upper(int m) const {
    const double x = std::sin((2 * mid_ - m) * h_ / 4);
    return boost::math::ibeta(alpha_ + 1, beta_ + 1, x * x);
  }

  double alpha_;
  double beta_;
  int mid_;
  double h_;
};

Tridiagonal build_factored(const SpectralProblem& p) {
  const double a = scarf_a(p);
  const double alpha = a - p.b + 0.5;
  const double beta = a + p.b + 0.5;
  const int nodes = p.M + 2;
  const WeightMeasure mu(alpha, beta, p.M);

  Tridiagonal T;
  T.h = kPi / (p.M + 1);
  const double inv_h2 = 1.0 / (T.h * T.h);
  std::vector<double> stiff(static_cast<std::size_t>(nodes - 1));
  std::vector<double> mass(static_cast<std::size_t>(nodes));
  for (int j = 0; j + 1 < nodes; ++j) stiff[static_cast<std::size_t>(j)] = mu(2 * j, 2 * j + 2) * inv_h2;
  for (int j = 0; j < nodes; ++j) mass[static_cast<std::size_t>(j)] = mu(2 * j - 1, 2 * j + 1);

  // w'' / w = V - (a+1)^2 for the ground-state factor, so the remainder is constant.
  const double shift = (a + 1) * (a + 1);
  T.diagonal.resize(static_cast<std::size_t>(nodes));
  T.off_diagonal.resize(static_cast<std::size_t>(nodes - 1));
  for (std::size_t j = 0; j < mass.size(); ++j) {
    const double k_left = j > 0 ? stiff[j - 1] : 0.0;
    const double k_right = j < stiff.size() ? stiff[j] : 0.0;
    T.diagonal[j] = (k_left + k_right) / mass[j] + shift;
    if (j < stiff.size()) T.off_diagonal[j] = -stiff[j] / std::sqrt(mass[j] * mass[j + 1]);
  }
  return T;
}

void require_finite(const Tridiagonal& T) {
  auto finite = [](double x) { return std::isfinite(x); };
  if (!std::all_of(T.diagonal.begin(), T.diagonal.end(), finite) ||
      !std::all_of(T.off_diagonal.begin(), T.off_diagonal.end(), finite)) {
    throw Error(ErrorCode::ConvergenceFailure, "non-finite matrix entry");
  }
}

// Solves (T - sigma I) x = rhs in place by LU with partial pivoting.
class ShiftedLU {
 public:
  ShiftedLU(const Tridiagonal& T, double sigma) {
    const std::size_t n = T.size();
    d_.resize(n);
    for (std::size_t i = 0; i < n; ++i) d_[i] = T.diagonal[i] - sigma;
    dl_ = T.off_diagonal;
    du_ = T.off_diagonal;
    du2_.assign(n > 2 ? n - 2 : 0, 0.0);
    swapped_.assign(n > 1 ? n - 1 : 0, false);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm = std::max(norm, std::abs(d_[i]));
    for (double e : dl_) norm = std::max(norm, std::abs(e));
    const double tiny = std::numeric_limits<double>::epsilon() * std::max(norm, 1.0);

    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (d_[i] == 0.0) d_[i] = tiny;
        const double f = dl_[i] / d_[i];
        dl_[i] = f;
        d_[i + 1] -= f * du_[i];
      } else {
        const double f = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = f;
        const double t = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = t - f * d_[i + 1];
        if (i + 2 < n) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -f * du_[i + 1];
        }
        swapped_[i] = true;
      }
    }
    if (n > 0 && d_[n - 1] == 0.0) d_[n - 1] = tiny;
  }

  void solve(std::vector<double>& x) const {
    const std::size_t n = d_.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped_[i]) {
        const double t = x[i];
        x[i] = x[i + 1];
        x[i + 1] = t - dl_[i] * x[i];
      } else {
        x[i + 1] -= dl_[i] * x[i];
      }
    }
    for (std::size_t k = n; k-- > 0;) {
      double acc = x[k];
      if (k + 1 < n) acc -= du_[k] * x[k + 1];
      if (k + 2 < n) acc -= du2_[k] * x[k + 2];
      x[k] = acc / d_[k];
    }
  }

 private:
  std::vector<double> d_, dl_, du_, du2_;
  std::vector<bool> swapped_;
};

void normalize(std::vector<double>& v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
}

std::vector<double> inverse_iteration(const Tridiagonal& T, double lambda,
                                      const std::vector<std::vector<double>>& previous) {
  const std::size_t n = T.size();
  const double sigma = lambda + 1e-13 * std::max(1.0, std::abs(lambda));
  const ShiftedLU lu(T, sigma);
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(0.5, 1.5);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  normalize(v);
  for (int it = 0; it < 3; ++it) {
    lu.solve(v);
    normalize(v);
  }
  // one reorthogonalization pass against the lower eigenvectors
  for (const auto& u : previous) {
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += u[i] * v[i];
    for (std::size_t i = 0; i < n; ++i) v[i] -= dot * u[i];
  }
  normalize(v);
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  for (double x : v) {
    if (std::abs(x) > 1e-8 * peak) {
      if (x < 0) {
        for (double& y : v) y = -y;
      }
      break;
    }
  }
  return v;
}

long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

double scarf_a(const SpectralProblem& problem) { return problem.channel + (problem.d - 2) / 2.0; }

double scarf_potential(const SpectralProblem& problem, double chi) {
  const double a = scarf_a(problem);
  const double b = problem.b;
  const double c = std::cos(chi);
  return (b * b + a * (a + 1)) / (c * c) - b * (2 * a + 1) * std::tan(chi) / c;
}

void check_normalizable(const SpectralProblem& problem) {
  require_finite_b(problem.b);
  const double a = scarf_a(problem);
  const double alpha = a - problem.b + 0.5;
  const double beta = a + problem.b + 0.5;
  if (!(alpha > -1.0 && beta > -1.0)) {
    throw Error(ErrorCode::NonNormalizable, "non-normalizable: need |b| < a + 3/2 (alpha=" + std::to_string(alpha) +
                                                ", beta=" + std::to_string(beta) + ")");
  }
}

Tridiagonal build_hamiltonian(const SpectralProblem& problem, Scheme scheme) {
  require_shape(problem, 1);
  return scheme == Scheme::Plain ? build_plain(problem) : build_factored(problem);
}

int sturm_count(const Tridiagonal& T, double lambda) {
  const std::size_t n = T.size();
  if (n == 0) return 0;
  constexpr double kTiny = 1e-300;
  int count = 0;
  double q = T.diagonal[0] - lambda;
  for (std::size_t i = 0;; ++i) {
    if (q == 0.0) q = -kTiny;
    if (q < 0.0) ++count;
    if (i + 1 == n) break;
    const double e = T.off_diagonal[i];
    q = T.diagonal[i + 1] - lambda - e * e / q;
  }
  return count;
}

Spectrum eigen_solve(const Tridiagonal& T, int k, bool with_vectors) {
  const std::size_t n = T.size();
  if (n == 0 || T.off_diagonal.size() + 1 != n) {
    throw Error(ErrorCode::InvalidArgument, "malformed tridiagonal matrix");
  }
  if (k < 0 || static_cast<std::size_t>(k) > n) {
    throw Error(ErrorCode::InvalidArgument, "count must satisfy 0 <= k <= matrix size");
  }
  require_finite(T);

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(T.off_diagonal[i - 1]) : 0.0) + (i + 1 < n ? std::abs(T.off_diagonal[i]) : 0.0);
    lo = std::min(lo, T.diagonal[i] - r);
    hi = std::max(hi, T.diagonal[i] + r);
  }
  const double pad = 1e-10 * std::max({1.0, std::abs(lo), std::abs(hi)});
  lo -= pad;
  hi += pad;

  Spectrum out;
  out.h = T.h;
  constexpr int kIterationCap = 400;
  double floor = lo;
  for (int idx = 0; idx < k; ++idx) {
    double a = floor;
    double b = hi;
    int it = 0;
    while (b - a >= 1e-12 * std::max(1.0, std::abs(0.5 * (a + b)))) {
      if (++it > kIterationCap) {
        throw Error(ErrorCode::ConvergenceFailure, "bisection exceeded iteration cap for eigenvalue " + std::to_string(idx));
      }
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;  // interval at machine resolution
      if (sturm_count(T, mid) > idx) {
        b = mid;
      } else {
        a = mid;
      }
    }
    const double lambda = 0.5 * (a + b);
    if (!std::isfinite(lambda)) throw Error(ErrorCode::ConvergenceFailure, "bisection produced a non-finite value");
    out.eigenvalues.push_back(lambda);
    floor = a;
  }
  if (with_vectors) {
    for (double lambda : out.eigenvalues) out.eigenvectors.push_back(inverse_iteration(T, lambda, out.eigenvectors));
  }
  return out;
}

int sign_changes(std::span<const double> v) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  int changes = 0;
  int last = 0;
  for (double x : v) {
    if (std::abs(x) <= 1e-10 * peak) continue;
    const int s = x > 0 ? 1 : -1;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

RichardsonSpectrum richardson_spectrum(const SpectralProblem& problem, int count, Scheme scheme) {
  require_shape(problem, 16);
  if (count < 1 || count > problem.M) throw Error(ErrorCode::InvalidArgument, "count must satisfy 1 <= count <= M");
  SpectralProblem fine = problem;
  fine.M = 2 * problem.M + 1;
  RichardsonSpectrum out;
  out.M = problem.M;
  out.coarse = eigen_solve(build_hamiltonian(problem, scheme), count, false).eigenvalues;
  out.fine = eigen_solve(build_hamiltonian(fine, scheme), count, false).eigenvalues;
  for (int i = 0; i < count; ++i) {
    const auto u = static_cast<std::size_t>(i);
    out.extrapolated.push_back((4.0 * out.fine[u] - out.coarse[u]) / 3.0);
  }
  return out;
}

long harmonic_dimension(int c, int d) {
  if (c < 0 || d < 1) throw Error(ErrorCode::InvalidArgument, "harmonic_dimension needs c >= 0 and d >= 1");
  return binomial(c + d, d) - binomial(c + d - 2, d);
}

bool DegeneracyReport::pass() const {
  if (channels.empty()) return false;
  for (const auto& c : channels) {
    if (!c.pass) return false;
  }
  return total_multiplicity == expected_multiplicity;
}

nlohmann::json DegeneracyReport::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& c : channels) {
    rows.push_back({{"channel", c.channel},
                    {"node_index", c.node_index},
                    {"multiplicity", c.multiplicity},
                    {"expected", c.expected},
                    {"eigenvalue_raw", c.raw},
                    {"eigenvalue_richardson", c.extrapolated},
                    {"abs_error", c.error},
                    {"pass", c.pass}});
  }
  return {{"schema", 1},
          {"N", N},
          {"d", d},
          {"b", b},
          {"grid", M},
          {"tol", tol},
          {"normalization", "U"},
          {"expected_eigenvalue", expected_eigenvalue},
          {"expected_multiplicity", expected_multiplicity},
          {"total_multiplicity", total_multiplicity},
          {"channels", rows},
          {"pass", pass()}};
}

DegeneracyReport degeneracy_audit(int N, int d, double b, int M, double tol) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "N must be >= 1");
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "d must be >= 1");
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
  for (int c = 0; c < N; ++c) check_normalizable(SpectralProblem{d, c, b, M});

  DegeneracyReport report;
  report.N = N;
  report.d = d;
  report.b = b;
  report.M = M;
  report.tol = tol;
  const double K = N - 1;
  report.expected_eigenvalue = K * (K + d) + d * d / 4.0;
  report.expected_multiplicity = harmonic_dimension(N - 1, d + 1);
  for (int c = 0; c < N; ++c) {
    ChannelAudit entry;
    entry.channel = c;
    entry.node_index = N - 1 - c;
    entry.multiplicity = harmonic_dimension(c, d);
    entry.expected = report.expected_eigenvalue;
    const auto spec = richardson_spectrum(SpectralProblem{d, c, b, M}, entry.node_index + 1);
    entry.raw = spec.coarse.back();
    entry.extrapolated = spec.extrapolated.back();
    entry.error = std::abs(entry.extrapolated - entry.expected);
    entry.pass = entry.error <= tol;
    if (entry.pass) report.total_multiplicity += entry.multiplicity;
    report.channels.push_back(entry);
  }
  return report;
}

}  // namespace scarf
