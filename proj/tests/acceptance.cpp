// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "scarf/decomp.hpp"
#include "scarf/operators.hpp"
#include "scarf/quadrature.hpp"
#include "scarf/spectral.hpp"

using namespace scarf;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("threw: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!v.pass) ++failures;
  std::printf("criterion %d %s  %s: %s (%.2fs)\n", id, v.pass ? "PASS" : "FAIL", name, v.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Plain three-term recurrences, kept separate from the library's families.
double jacobi(int n, double a, double b, double x) {
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = (a + 1) + (a + b + 2) * (x - 1) / 2;
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + a + b;
    const double p2 = ((s - 1) * (s * (s - 2) * x + a * a - b * b) * p1 - 2 * (k + a - 1) * (k + b - 1) * s * p0) /
                      (2.0 * k * (k + a + b) * (s - 2));
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double gegenbauer(int n, double lambda, double x) {
  if (n == 0) return 1.0;
  double c0 = 1.0;
  double c1 = 2 * lambda * x;
  for (int k = 2; k <= n; ++k) {
    const double c2 = (2 * x * (k + lambda - 1) * c1 - (k + 2 * lambda - 2) * c0) / k;
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

double legendre(int n, double x) { return gegenbauer(n, 0.5, x); }

long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// dim of degree-K harmonics on S^m
long harmonics(long K, long m) { return binomial(K + m, m) - binomial(K + m - 2, m); }

struct Sweep {
  double worst_rel = 0.0;
  double worst_shift = 0.0;
  double seconds = 0.0;
  bool done = false;
};

Sweep& spectrum_sweep() {
  static Sweep s;
  if (s.done) return s;
  const auto t0 = std::chrono::steady_clock::now();
  for (int ell : {0, 1, 2}) {
    std::vector<double> at_zero;
    for (double b : {0.0, 0.3, 0.9}) {
      const auto r = richardson_spectrum(SpectralProblem{2, ell, b, 4000}, 3);
      for (int n = 0; n < 3; ++n) {
        const double expected = (ell + n + 1.0) * (ell + n + 1.0);
        const double ev = r.extrapolated[static_cast<std::size_t>(n)];
        s.worst_rel = std::max(s.worst_rel, std::abs(ev - expected) / expected);
        if (b == 0.0) {
          at_zero.push_back(ev);
        } else {
          s.worst_shift = std::max(s.worst_shift, std::abs(ev - at_zero[static_cast<std::size_t>(n)]));
        }
      }
    }
  }
  s.seconds = elapsed_since(t0);
  s.done = true;
  return s;
}

}  // namespace

int main() {
  report(1, "closed-form table", [] {
    const auto t0 = std::chrono::steady_clock::now();
    int entries = 0;
    Verdict v;
    for (int N = 5; N <= 12; ++N) {
      const auto rows = closed_form_rows(N);
      if (rows.size() != 4) v = {false, "missing rows at N=" + std::to_string(N)};
      const auto r = verify_closed_forms(N);
      entries += static_cast<int>(r.entries.size());
      for (const auto& e : r.entries) {
        if (!e.match) {
          v.pass = false;
          v.detail = "mismatch at N=" + std::to_string(N) + " " + e.row + " K=" + std::to_string(e.K);
        }
      }
    }
    const double secs = elapsed_since(t0);
    if (secs >= 5.0) v = {false, "took " + std::to_string(secs) + "s"};
    if (v.pass) v.detail = std::to_string(entries) + " coefficients bit-exact for N=5..12, l=N-1..N-4";
    return v;
  });

  report(2, "decomposition structure", [] {
    int tables = 0;
    double worst = 0.0;
    const Rational probe(3, 7);
    for (int N = 1; N <= 12; ++N) {
      for (int ell = 0; ell < N; ++ell) {
        const auto t = jacobi_to_gegenbauer(N, ell);
        const auto s = check_structure(t);
        if (!s.ok()) return Verdict{false, "structure fails at N=" + std::to_string(N) + " l=" + std::to_string(ell)};
        for (int K = ell; K < N; ++K) {
          const auto& c = t.coefficient(K);
          const int sign = (N - 1 - K) % 2 == 0 ? 1 : -1;
          const bool ok = c.degree() <= N - 1 - K && (K < N - 1 ? c.eval(Rational(0)).is_zero()
                                                                : !c.eval(Rational(0)).is_zero()) &&
                          c.eval(-probe) == Rational(sign) * c.eval(probe);
          if (!ok) return Verdict{false, "direct check fails at N=" + std::to_string(N) + " K=" + std::to_string(K)};
        }
        // reconstruction against independent float recurrences
        const int n = N - 1 - ell;
        for (double b : {-0.45, 0.3, 0.8}) {
          for (double x : {-0.9, -0.2, 0.35, 0.7}) {
            double sum = 0.0;
            for (int K = ell; K < N; ++K) sum += t.coefficient(K).eval(b) * gegenbauer(K - ell, ell + 1.0, x);
            const double p = jacobi(n, ell - b + 0.5, ell + b + 0.5, x);
            worst = std::max(worst, std::abs(sum - p) / std::max(1.0, std::abs(p)));
          }
        }
        ++tables;
      }
    }
    if (worst > 1e-9) return Verdict{false, "float reconstruction off by " + sci(worst)};
    return Verdict{true, std::to_string(tables) + " tables exact (reconstruction, degree, b=0 limit, parity); float "
                                                  "cross-check " +
                             sci(worst)};
  });

  report(3, "spectrum (a+n+1)^2", [] {
    const auto& s = spectrum_sweep();
    Verdict v{s.worst_rel < 1e-6 && s.seconds < 60.0, ""};
    v.detail = "max relative error " + sci(s.worst_rel) + " over d=2, l=0..2, b in {0,0.3,0.9}, n=0..2, M=4000/8001";
    return v;
  });

  report(4, "b-independence", [] {
    const auto& s = spectrum_sweep();
    return Verdict{s.worst_shift < 2e-6, "max |eps(b) - eps(0)| = " + sci(s.worst_shift)};
  });

  report(5, "degeneracy audit", [] {
    Verdict v;
    double worst = 0.0;
    for (int N : {2, 3, 4}) {
      const auto r = degeneracy_audit(N, 2, 0.5);
      if (!r.pass() || r.total_multiplicity != N * N) {
        return Verdict{false, "d=2 N=" + std::to_string(N) + " multiplicity " + std::to_string(r.total_multiplicity)};
      }
      for (const auto& c : r.channels) worst = std::max(worst, c.error);
    }
    for (int d : {1, 3, 4}) {
      for (int N : {2, 3}) {
        const auto r = degeneracy_audit(N, d, 0.5);
        const double K = N - 1;
        const double expected = K * (K + d) + d * d / 4.0;
        long mult = 0;
        for (int ell = 0; ell < N; ++ell) mult += harmonics(ell, d);
        const bool ok = r.pass() && std::abs(r.expected_eigenvalue - expected) < 1e-12 &&
                        r.total_multiplicity == harmonics(N - 1, d + 1) && mult == r.total_multiplicity;
        if (!ok) return Verdict{false, "d=" + std::to_string(d) + " N=" + std::to_string(N)};
        for (const auto& c : r.channels) worst = std::max(worst, c.error);
      }
    }
    v.detail = "N^2 in every channel for N=2..4 (d=2); K(K+d)+d^2/4 for d=1,3,4; max error " + sci(worst);
    return v;
  });

  report(6, "gradient identity", [] {
    double worst = 0.0;
    for (int N = 1; N <= 8; ++N) {
      for (int ell = 0; ell < N; ++ell) {
        for (double b : {0.3, 0.9}) worst = std::max(worst, gradient_identity_residual(N, ell, b, 200));
      }
    }
    return Verdict{worst < 1e-10, "max residual " + sci(worst) + " for N<=8, 200 points"};
  });

  report(7, "commutator dichotomy", [] {
    double zero_max = 0.0;
    double nonzero_min = 1e300;
    for (int N = 1; N <= 6; ++N) {
      for (int ell = 0; ell < N; ++ell) {
        zero_max = std::max(zero_max, commutator_probe(N, ell, 0.0));
        const double p = commutator_probe(N, ell, 0.5);
        if (ell == N - 1) {
          zero_max = std::max(zero_max, p);
        } else {
          nonzero_min = std::min(nonzero_min, p);
        }
      }
    }
    return Verdict{zero_max <= 1e-10 && nonzero_min >= 1e-3,
                   "max over b=0 or l=N-1: " + sci(zero_max) + ", min over b=0.5, l<N-1: " + sci(nonzero_min)};
  });

  report(8, "polynomial invariants", [] {
    int checked = 0;
    int top_mismatch = 0;
    for (int N = 1; N <= 8; ++N) {
      for (int ell = 0; ell < N; ++ell) {
        for (const Rational& b : {Rational(0), Rational(1, 3), Rational(-5, 4), Rational(7, 2)}) {
          const auto r = dynamical_polynomial_apply(N, ell, b);
          if (!r.generalized.all_match()) {
            return Verdict{false, "D fails at N=" + std::to_string(N) + " l=" + std::to_string(ell)};
          }
          ++checked;
          if (!r.literal.available) continue;
          const auto table = jacobi_to_gegenbauer(N, ell);
          for (const auto& c : r.literal.components) {
            if (c.K < N - 1 && !c.match) return Verdict{false, "printed K<N-1 component differs"};
            if (c.K == N - 1) {
              if (!c.ratio || BPoly(*c.ratio) != table.coefficient(N - 1)) {
                return Verdict{false, "printed top component outside the c_{N-1} normalization"};
              }
              if (!c.match) ++top_mismatch;
            }
          }
          if (!r.corrected.all_match()) return Verdict{false, "corrected printed form fails"};
        }
      }
    }
    return Verdict{true, "D reproduces N^2 c_K exactly in " + std::to_string(checked) +
                             " cases; printed forms: lower components exact, top component off by c_{N-1} in " +
                             std::to_string(top_mismatch) + " cases"};
  });

  report(9, "orthogonality and quadrature", [] {
    double worst = 0.0;
    for (int ell : {0, 1, 2, 3}) {
      for (double b : {0.0, 0.4, 0.9, -0.6}) {
        std::vector<StateSampler> states;
        for (int N = ell + 1; N <= 8; ++N) states.push_back({StateKind::U, N, ell, b});
        const auto g = gram_matrix(states, Measure::DChi);
        worst = std::max({worst, g.max_off_diagonal, g.max_diagonal_error});
      }
    }
    // n-point rule: exact on P_i P_j for i + j <= 2n-1, and gives 0 for P_n^2
    double exact_err = 0.0;
    double sharp_min = 1e300;
    for (int n = 1; n <= 64; ++n) {
      const auto rule = gauss_legendre(n);
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
          const double q = integrate(rule, [&](double x) { return legendre(i, x) * legendre(j, x); });
          const double exact = i == j ? 2.0 / (2 * i + 1) : 0.0;
          if (i + j <= 2 * n - 1) {
            exact_err = std::max(exact_err, std::abs(q - exact));
          } else {
            sharp_min = std::min(sharp_min, std::abs(q - exact) / exact);
          }
        }
      }
    }
    const bool ok = worst < 1e-9 && exact_err < 1e-13 && sharp_min > 0.5;
    return Verdict{ok, "gram deviation " + sci(worst) + "; rules n<=64 exact to " + sci(exact_err) +
                           " through degree 2n-1, relative miss " + sci(sharp_min) + " at degree 2n"};
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
