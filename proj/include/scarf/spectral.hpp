#pragma once

#include <span>
#include <vector>

#include <json.hpp>

namespace scarf {

/// Quasi-radial Scarf I problem on S^{d+1}:
///   -U'' + V(chi) U = eps U,  V = (b^2 + a(a+1))/cos^2 - b(2a+1) tan/cos,
/// with a = channel + (d-2)/2.
struct SpectralProblem {
  int d = 2;
  int channel = 0;
  double b = 0.0;
  int M = 4000;
};

enum class Scheme {
  // Central differences on the M interior nodes, Dirichlet at +-pi/2.
  Plain,
  // Ground-state factored form U = w v, w = (1-s)^p (1+s)^q, discretized by
  // weighted linear elements on all M+2 nodes with lumped mass.
  Factored,
};

double scarf_a(const SpectralProblem& problem);
double scarf_potential(const SpectralProblem& problem, double chi);

/// Throws NonNormalizable unless alpha = a - b + 1/2 > -1 and beta = a + b + 1/2 > -1.
void check_normalizable(const SpectralProblem& problem);

struct Tridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;
  double h = 0.0;

  std::size_t size() const { return diagonal.size(); }
};

Tridiagonal build_hamiltonian(const SpectralProblem& problem, Scheme scheme = Scheme::Plain);

struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<std::vector<double>> eigenvectors;  // empty unless requested
  double h = 0.0;
};

/// Number of eigenvalues of T strictly below lambda.
int sturm_count(const Tridiagonal& T, double lambda);

/// The k lowest eigenpairs by Sturm bisection and inverse iteration.
Spectrum eigen_solve(const Tridiagonal& T, int k, bool with_vectors = true);

/// Sign changes along a vector, skipping entries below 1e-10 of its max.
int sign_changes(std::span<const double> v);

struct RichardsonSpectrum {
  int M = 0;
  std::vector<double> coarse;        // grid M
  std::vector<double> fine;          // grid 2M+1, half the step
  std::vector<double> extrapolated;  // (4 fine - coarse) / 3
};

/// Requires M >= 16.
RichardsonSpectrum richardson_spectrum(const SpectralProblem& problem, int count,
                                       Scheme scheme = Scheme::Factored);

/// Number of independent harmonics of degree c on S^d.
long harmonic_dimension(int c, int d);

struct ChannelAudit {
  int channel = 0;
  int node_index = 0;
  long multiplicity = 0;
  double expected = 0.0;
  double raw = 0.0;
  double extrapolated = 0.0;
  double error = 0.0;
  bool pass = false;
};

struct DegeneracyReport {
  int N = 0;
  int d = 0;
  double b = 0.0;
  int M = 0;
  double tol = 0.0;
  double expected_eigenvalue = 0.0;
  long expected_multiplicity = 0;
  long total_multiplicity = 0;  // summed over passing channels
  std::vector<ChannelAudit> channels;

  bool pass() const;
  nlohmann::json to_json() const;
};

/// Per channel c = 0..N-1, checks that node n = N-1-c carries
/// eps = K(K+d) + d^2/4 with K = N-1. Throws NonNormalizable if any channel
/// violates the guard; numerical misses are report entries.
DegeneracyReport degeneracy_audit(int N, int d, double b, int M = 4000, double tol = 1e-5);

}  // namespace scarf
