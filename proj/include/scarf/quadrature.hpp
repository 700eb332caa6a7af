#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "scarf/operators.hpp"

namespace scarf {

struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;    // increasing, in (-1, 1)
  std::vector<double> weights;  // positive, sum 2
};

/// Legendre roots by Newton iteration from Chebyshev guesses.
QuadratureRule gauss_legendre(int n);

/// Integral over (-1, 1), affine nodes.
double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);

/// Double-exponential rule over (-1, 1); refines the step until two levels
/// agree to `tol` (relative to the running magnitude).
double tanh_sinh(const std::function<double(double)>& f, double tol = 1e-13);

enum class Measure {
  DChi,     // d chi
  CosDChi,  // cos^d chi d chi
};

const char* measure_name(Measure m);

struct GramReport {
  std::vector<std::vector<double>> raw;
  std::vector<std::vector<double>> normalized;  // raw_ij / sqrt(raw_ii raw_jj)
  int order = 0;                                // Gauss-Legendre order used
  std::string method;                           // "gauss-legendre" or "tanh-sinh"
  double max_off_diagonal = 0.0;                // over the normalized matrix
  double max_diagonal_error = 0.0;

  bool is_identity(double tol) const { return max_off_diagonal <= tol && max_diagonal_error <= tol; }
  nlohmann::json to_json() const;
};

/// Pairwise inner products over chi in (-pi/2, pi/2) of the state values.
/// Gauss-Legendre at `order` (default 128 + 32 max N) is accepted when a
/// rule of twice the order agrees to 1e-10; otherwise tanh-sinh is used.
GramReport gram_matrix(const std::vector<StateSampler>& states, Measure measure, int d = 2, int order = 0);

}  // namespace scarf
