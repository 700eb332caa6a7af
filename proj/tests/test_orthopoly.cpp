#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "scarf/error.hpp"
#include "scarf/orthopoly.hpp"

using namespace scarf;

namespace {

// Oracle: explicit sum
//   P_n^{a,b}(x) = sum_m binom(n+a, n-m) binom(n+b, m) ((x-1)/2)^m ((x+1)/2)^{n-m}
// with symbolic a = l + 1/2 - b and symbolic b-parameter b' = l + 1/2 + b.
BPoly falling_binomial(const BPoly& top, int j) {
  BPoly acc(1);
  Rational fact(1);
  for (int i = 0; i < j; ++i) {
    acc *= top - BPoly(Rational(i));
    fact *= Rational(i + 1);
  }
  return acc * (Rational(1) / fact);
}

SPoly spow(const SPoly& p, int e) {
  SPoly r(BPoly(1));
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

SPoly jacobi_sum_oracle(int n, int ell) {
  const BPoly alpha = BPoly(Rational(2 * ell + 1, 2)) - BPoly::b();
  const BPoly beta = BPoly(Rational(2 * ell + 1, 2)) + BPoly::b();
  const SPoly xm = (SPoly::s() - SPoly(BPoly(1))) * BPoly(Rational(1, 2));
  const SPoly xp = (SPoly::s() + SPoly(BPoly(1))) * BPoly(Rational(1, 2));
  SPoly sum;
  for (int m = 0; m <= n; ++m) {
    const BPoly c = falling_binomial(alpha + BPoly(Rational(n)), n - m) * falling_binomial(beta + BPoly(Rational(n)), m);
    sum += spow(xm, m) * spow(xp, n - m) * c;
  }
  return sum;
}

// Oracle: C_k^lambda(x) = sum_m (-1)^m (lambda)_{k-m} / (m! (k-2m)!) (2x)^{k-2m}
SPoly gegenbauer_sum_oracle(int k, int lambda) {
  SPoly sum;
  for (int m = 0; 2 * m <= k; ++m) {
    Rational pochhammer(1);
    for (int i = 0; i < k - m; ++i) pochhammer *= Rational(lambda + i);
    Rational denom(1);
    for (int i = 2; i <= m; ++i) denom *= Rational(i);
    for (int i = 2; i <= k - 2 * m; ++i) denom *= Rational(i);
    Rational c = pochhammer / denom * pow(Rational(2), static_cast<unsigned>(k - 2 * m));
    if (m % 2 == 1) c = -c;
    sum += SPoly::monomial(BPoly(c), k - 2 * m);
  }
  return sum;
}

bool proportional(const SPoly& a, const SPoly& b) {
  if (a.degree() != b.degree()) return false;
  const int d = a.degree();
  const Rational ratio = a.coefficient(d).coefficient(0) / b.coefficient(d).coefficient(0);
  if (ratio.is_zero()) return false;
  return a == b * BPoly(ratio);
}

}  // namespace

TEST_CASE("jacobi exact examples") {
  CHECK(jacobi_exact(0, 3) == SPoly(BPoly(1)));
  for (int N = 2; N <= 9; ++N) {
    CAPTURE(N);
    const SPoly expected = SPoly(-BPoly::b()) + SPoly::monomial(BPoly(Rational(2 * N - 1, 2)), 1);
    CHECK(jacobi_exact(1, N - 2) == expected);
  }
  // n = 2, l = 0, frozen from the explicit-sum oracle:
  // (b^2/2 - 5/8) - 2b s + (5/2) s^2
  const SPoly frozen(std::vector<BPoly>{
      BPoly({Rational(-5, 8), Rational(0), Rational(1, 2)}), BPoly::monomial(Rational(-2), 1), BPoly(Rational(5, 2))});
  CHECK(jacobi_sum_oracle(2, 0) == frozen);
  CHECK(jacobi_exact(2, 0) == frozen);
}

TEST_CASE("jacobi recurrence agrees with the explicit sum") {
  for (int n = 0; n <= 10; ++n) {
    for (int ell = 0; ell <= 4; ++ell) {
      CAPTURE(n);
      CAPTURE(ell);
      const SPoly p = jacobi_exact(n, ell);
      CHECK(p.degree() == n);
      CHECK(p == jacobi_sum_oracle(n, ell));
    }
  }
}

TEST_CASE("gegenbauer exact examples") {
  CHECK(gegenbauer_exact(0, 4) == SPoly(BPoly(1)));
  CHECK(gegenbauer_exact(1, 3) == SPoly::monomial(BPoly(6), 1));
  const SPoly c22 = SPoly::monomial(BPoly(12), 2) - SPoly(BPoly(2));
  CHECK(gegenbauer_exact(2, 2) == c22);
  for (int k = 0; k <= 12; ++k) {
    for (int lambda = 1; lambda <= 6; ++lambda) {
      CAPTURE(k);
      CAPTURE(lambda);
      CHECK(gegenbauer_exact(k, lambda) == gegenbauer_sum_oracle(k, lambda));
    }
  }
  CHECK_THROWS_AS(gegenbauer_exact(2, 0), Error);
  CHECK_THROWS_AS(jacobi_exact(-1, 0), Error);
}

TEST_CASE("float family examples") {
  const auto p = eval_float_family(JacobiParams{1, 0}, 1.0, 0.3, true);
  CHECK(p.value == doctest::Approx(-0.55).epsilon(1e-15));
  // derivative of P_1 is (alpha+beta+2)/2 = 3/2 for every x
  for (double x : {-0.9, 0.0, 0.4, 1.0}) {
    CHECK(*eval_float_family(JacobiParams{1, 0}, 1.0, x, true).derivative == doctest::Approx(1.5).epsilon(1e-15));
  }
  CHECK(eval_float_family(GegenbauerParams{1, 2}, 0.5, false).value == doctest::Approx(2.0));
  CHECK_FALSE(eval_float_family(GegenbauerParams{1, 2}, 0.5, false).derivative.has_value());
  CHECK_THROWS_AS(eval_float_family(GegenbauerParams{1, 2}, 1.5, false), Error);
  try {
    eval_float_family(JacobiParams{2, 1}, 0.3, -1.01, false);
    FAIL("expected DomainError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainError);
  }
}

TEST_CASE("float evaluation agrees with exact polynomials") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long> snum(-100, 100);
  std::uniform_int_distribution<long> bnum(-300, 300);
  for (int n = 0; n <= 10; ++n) {
    for (int ell = 0; ell <= 3; ++ell) {
      const SPoly exact = jacobi_exact(n, ell);
      const SPoly exact_d = exact.derivative();
      for (int trial = 0; trial < 5; ++trial) {
        const Rational s0(snum(rng), 100);
        const Rational b0(bnum(rng), 100);
        const double ref = exact.eval(s0, b0).to_double();
        const double got = jacobi_value(n, ell - b0.to_double() + 0.5, ell + b0.to_double() + 0.5, s0.to_double());
        CHECK(std::abs(got - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
        const double dref = exact_d.eval(s0, b0).to_double();
        const double dgot = jacobi_value(n, ell - b0.to_double() + 0.5, ell + b0.to_double() + 0.5, s0.to_double(), 1);
        CHECK(std::abs(dgot - dref) <= 1e-11 * std::max(1.0, std::abs(dref)));
        const double ddref = exact_d.derivative().eval(s0, b0).to_double();
        const double ddgot = jacobi_value(n, ell - b0.to_double() + 0.5, ell + b0.to_double() + 0.5, s0.to_double(), 2);
        CHECK(std::abs(ddgot - ddref) <= 1e-11 * std::max(1.0, std::abs(ddref)));
      }
    }
  }
  for (int k = 0; k <= 10; ++k) {
    for (int lambda = 1; lambda <= 4; ++lambda) {
      const SPoly g = gegenbauer_exact(k, lambda);
      for (long sn : {-97L, -40L, 3L, 61L, 100L}) {
        const Rational s0(sn, 100);
        const double ref = g.eval(s0, Rational(0)).to_double();
        CHECK(std::abs(gegenbauer_value(k, lambda, s0.to_double()) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
        const double dref = g.derivative().eval(s0, Rational(0)).to_double();
        CHECK(std::abs(gegenbauer_value(k, lambda, s0.to_double(), 1) - dref) <= 1e-12 * std::max(1.0, std::abs(dref)));
        const double ddref = g.derivative().derivative().eval(s0, Rational(0)).to_double();
        CHECK(std::abs(gegenbauer_value(k, lambda, s0.to_double(), 2) - ddref) <= 1e-12 * std::max(1.0, std::abs(ddref)));
      }
    }
  }
}

TEST_CASE("jacobi reflection symmetry") {
  // P_n^{a,b}(-x) = (-1)^n P_n^{b,a}(x); swapping a and b is b -> -b here.
  for (int n = 0; n <= 10; ++n) {
    for (int ell = 0; ell <= 3; ++ell) {
      const SPoly p = jacobi_exact(n, ell);
      CHECK(p.reflect() == (n % 2 == 0 ? p : -p));
    }
  }
}

TEST_CASE("undeformed jacobi is proportional to gegenbauer") {
  for (int n = 0; n <= 10; ++n) {
    for (int ell = 0; ell <= 4; ++ell) {
      CAPTURE(n);
      CAPTURE(ell);
      CHECK(proportional(jacobi_exact(n, ell).at_b(Rational(0)), gegenbauer_exact(n, ell + 1)));
    }
  }
}

TEST_CASE("gegenbauer parity") {
  for (int k = 0; k <= 12; ++k) {
    for (int lambda = 1; lambda <= 5; ++lambda) {
      const SPoly g = gegenbauer_exact(k, lambda);
      CHECK(g.reflect() == (k % 2 == 0 ? g : -g));
    }
  }
}
