#include "scarf/orthopoly.hpp"

#include <cmath>
#include <string>

#include "scarf/error.hpp"

namespace scarf {

namespace {

void require_nonnegative(int v, const char* name) {
  if (v < 0) throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be non-negative");
}

void require_unit_interval(double x) {
  if (!(std::abs(x) <= 1.0)) {
    throw Error(ErrorCode::DomainError, "argument " + std::to_string(x) + " outside [-1, 1]");
  }
}

}  // namespace

SPoly jacobi_exact(int n, int ell) {
  require_nonnegative(n, "n");
  require_nonnegative(ell, "ell");
  const Rational half(1, 2);
  const BPoly alpha = BPoly(Rational(ell) + half) - BPoly::b();
  const BPoly beta = BPoly(Rational(ell) + half) + BPoly::b();
  const Rational sigma(2 * ell + 1);  // alpha + beta

  SPoly prev(BPoly(1));
  if (n == 0) return prev;
  // P_1 = (alpha - beta)/2 + (alpha + beta + 2) s / 2
  SPoly curr = SPoly((alpha - beta) * half) + SPoly::monomial(BPoly((sigma + Rational(2)) * half), 1);
  for (int m = 2; m <= n; ++m) {
    const Rational mm(m);
    const Rational t = Rational(2) * mm + sigma;  // 2m + alpha + beta
    const Rational denom = Rational(2) * mm * (mm + sigma) * (t - Rational(2));
    // (2m+a+b-1) [ (2m+a+b)(2m+a+b-2) s + a^2 - b^2 ] P_{m-1}
    const BPoly a2_minus_b2 = (alpha - beta) * BPoly(sigma);
    SPoly lin = SPoly(a2_minus_b2) + SPoly::monomial(BPoly(t * (t - Rational(2))), 1);
    SPoly next = lin * curr * BPoly(t - Rational(1));
    // - 2 (m+a-1)(m+b-1)(2m+a+b) P_{m-2}
    const BPoly tail = (alpha + BPoly(mm - Rational(1))) * (beta + BPoly(mm - Rational(1))) * Rational(2) * t;
    next -= prev * tail;
    next *= BPoly(Rational(1) / denom);
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

SPoly gegenbauer_exact(int k, int lambda) {
  require_nonnegative(k, "k");
  if (lambda < 1) throw Error(ErrorCode::InvalidArgument, "Gegenbauer order lambda must be >= 1");
  const Rational lam(lambda);
  SPoly prev(BPoly(1));
  if (k == 0) return prev;
  SPoly curr = SPoly::monomial(BPoly(Rational(2) * lam), 1);
  for (int m = 2; m <= k; ++m) {
    const Rational mm(m);
    SPoly next = SPoly::monomial(BPoly(Rational(2) * (mm + lam - Rational(1))), 1) * curr;
    next -= prev * BPoly(mm + Rational(2) * lam - Rational(2));
    next *= BPoly(Rational(1) / mm);
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

double jacobi_value(int n, double alpha, double beta, double x, int order) {
  require_nonnegative(n, "n");
  if (order < 0 || order > 2) throw Error(ErrorCode::InvalidArgument, "derivative order must be 0, 1 or 2");
  if (order > n) return 0.0;
  if (order == 1) {
    return 0.5 * (n + alpha + beta + 1.0) * jacobi_value(n - 1, alpha + 1.0, beta + 1.0, x, 0);
  }
  if (order == 2) {
    return 0.25 * (n + alpha + beta + 1.0) * (n + alpha + beta + 2.0) *
           jacobi_value(n - 2, alpha + 2.0, beta + 2.0, x, 0);
  }
  double prev = 1.0;
  if (n == 0) return prev;
  double curr = 0.5 * (alpha - beta) + 0.5 * (alpha + beta + 2.0) * x;
  const double sigma = alpha + beta;
  for (int m = 2; m <= n; ++m) {
    const double t = 2.0 * m + sigma;
    const double denom = 2.0 * m * (m + sigma) * (t - 2.0);
    const double next = ((t - 1.0) * (t * (t - 2.0) * x + alpha * alpha - beta * beta) * curr -
                         2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * t * prev) /
                        denom;
    prev = curr;
    curr = next;
  }
  return curr;
}

double gegenbauer_value(int k, double lambda, double x, int order) {
  require_nonnegative(k, "k");
  if (order < 0 || order > 2) throw Error(ErrorCode::InvalidArgument, "derivative order must be 0, 1 or 2");
  if (order > k) return 0.0;
  if (order == 1) return 2.0 * lambda * gegenbauer_value(k - 1, lambda + 1.0, x, 0);
  if (order == 2) return 4.0 * lambda * (lambda + 1.0) * gegenbauer_value(k - 2, lambda + 2.0, x, 0);
  double prev = 1.0;
  if (k == 0) return prev;
  double curr = 2.0 * lambda * x;
  for (int m = 2; m <= k; ++m) {
    const double next = (2.0 * (m + lambda - 1.0) * x * curr - (m + 2.0 * lambda - 2.0) * prev) / m;
    prev = curr;
    curr = next;
  }
  return curr;
}

FamilyValue eval_float_family(const JacobiParams& params, double b0, double x, bool with_derivative) {
  require_unit_interval(x);
  require_nonnegative(params.ell, "ell");
  const double alpha = params.ell - b0 + 0.5;
  const double beta = params.ell + b0 + 0.5;
  FamilyValue out{jacobi_value(params.n, alpha, beta, x, 0), std::nullopt};
  if (with_derivative) out.derivative = jacobi_value(params.n, alpha, beta, x, 1);
  return out;
}

FamilyValue eval_float_family(const GegenbauerParams& params, double x, bool with_derivative) {
  require_unit_interval(x);
  if (params.lambda < 1) throw Error(ErrorCode::InvalidArgument, "Gegenbauer order lambda must be >= 1");
  FamilyValue out{gegenbauer_value(params.k, params.lambda, x, 0), std::nullopt};
  if (with_derivative) out.derivative = gegenbauer_value(params.k, params.lambda, x, 1);
  return out;
}

}  // namespace scarf
