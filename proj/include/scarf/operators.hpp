#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scarf/bpoly.hpp"
#include "scarf/rational.hpp"

namespace scarf {

// ---- state functions -------------------------------------------------------

enum class StateKind {
  FInv,    // F^{-1}(chi) = exp(b atanh sin chi)
  S,       // S_{Kl} = cos^l C_{K-l}^{l+1}(sin chi)
  STilde,  // F^{-1} S_{Kl}
  Phi,     // F^{-1} cos^c P_n^{alpha,beta}(sin chi), n = N-1-c
  U,       // cos^{d/2} phi, the Schroedinger function
};

const char* state_kind_name(StateKind kind);

/// `index` is K for S and S_tilde, N for phi and U, unused for F_inv. `ell`
/// is the channel; for phi and U with d != 2 it is K_{d+1} and
/// alpha, beta = a -+ b + 1/2 with a = ell + (d-2)/2.
struct StateSampler {
  StateKind kind = StateKind::Phi;
  int index = 1;
  int ell = 0;
  double b = 0.0;
  int d = 2;
};

struct Jet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// Value and first two chi-derivatives. DomainError unless |chi| < pi/2.
Jet eval_state(const StateSampler& sampler, double chi);

/// chi_j = -pi/2 + j pi/(points+1), j = 1..points.
std::vector<double> interior_grid(int points);

/// Double value of an exact coefficient at a float b (b is converted exactly).
double eval_at(const BPoly& p, double b);

// ---- identities on a grid -------------------------------------------------

/// max_j | sum_K (K+1)^2 c_K S~_K - 2b F^{-1} cos^l dP/ds - N^2 phi |.
double gradient_identity_residual(int N, int ell, double b, int points = 200);

/// Max over the grid of |(K~^2+1) S~_K - (K+1)^2 S~_K|, relative to
/// max(1, max |(K+1)^2 S~_K|), with K~^2 applied as
/// the differential operator
///   K^2 + 1 - b^2/cos^2 - b tan/cos + (2b/cos) d/dchi,
///   K^2 f = -f'' + 2 tan f' + l(l+1) sec^2 f.
double casimir_differential_residual(int K, int ell, double b, int points = 200);

/// Discrete L^2 norm (weight cos^2 chi) of [H_Sc, K~^2] phi_{Nl}:
/// H_Sc applied differentially to K~^2 phi, minus K~^2 applied through the
/// S~-components of H_Sc phi.
double commutator_probe(int N, int ell, double b, int points = 200);

// ---- exact ledger ------------------------------------------------------------

/// Per component K: (K+1)^2 c_K + g_K = N^2 c_K, where g_K is the K-th
/// Gegenbauer component of the gradient term -2b dP/ds.
struct LedgerComponent {
  int K = 0;
  BPoly eigen_term;
  BPoly gradient_term;
  BPoly total;
  BPoly target;
  bool match = false;
};

struct LedgerReport {
  int N = 0;
  int ell = 0;
  std::vector<LedgerComponent> components;

  bool holds() const;
  nlohmann::json to_json() const;
};

LedgerReport ledger_identity(int N, int ell);

// ---- polynomial invariants ----------------------------------------------------

/// Lagrange factors in x = K~^2 + 1 over the nodes {(K+1)^2 : K = l..N-1}.
class ProjectorPolynomial {
 public:
  ProjectorPolynomial(int N, int ell);

  int N() const { return N_; }
  int ell() const { return ell_; }
  const std::vector<Rational>& nodes() const { return nodes_; }
  static Rational node(int K) { return Rational(K + 1) * Rational(K + 1); }

  /// prod_{J != K} (x - x_J)/(x_K - x_J)
  Rational lagrange(int K, const Rational& x) const;

 private:
  int N_;
  int ell_;
  std::vector<Rational> nodes_;
};

/// coefficient * (x + shift) * prod (x - node)/(target - node)
struct CasimirTerm {
  BPoly coefficient;
  Rational shift;
  std::vector<std::pair<Rational, Rational>> factors;  // (node, target)

  BPoly at(const Rational& x) const;
};

/// The printed Casimir polynomials: two terms for l = N-2, three for l = N-3.
/// Empty for any other l.
std::vector<CasimirTerm> printed_casimir_polynomial(int N, int ell);

struct PolyComponent {
  int K = 0;
  BPoly output;
  BPoly target;  // N^2 c_K
  bool match = false;
  std::optional<Rational> ratio;  // target = ratio * output, when constant
  Rational output_at_b;
  Rational target_at_b;
};

struct PolyForm {
  std::string name;
  bool available = false;
  std::vector<PolyComponent> components;

  bool all_match() const;
  nlohmann::json to_json() const;
};

struct DynamicalReport {
  int N = 0;
  int ell = 0;
  Rational b;
  PolyForm literal;      // printed polynomial on the unit-coefficient mixture
  PolyForm corrected;    // printed polynomial with its top term scaled by c_{N-1}
  PolyForm generalized;  // D = sum_K N^2 c_K P^[(K+1)^2], expanded in x
  std::vector<BPoly> generalized_polynomial;  // D as coefficients of x^k

  nlohmann::json to_json() const;
};

DynamicalReport dynamical_polynomial_apply(int N, int ell, const Rational& b);

}  // namespace scarf
