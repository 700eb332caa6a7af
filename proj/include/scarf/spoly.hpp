#pragma once

#include <span>
#include <string>
#include <vector>

#include "scarf/bpoly.hpp"

namespace scarf {

/// Polynomial in s = sin(chi) whose coefficients are BPolys. Same trimming
/// rule as BPoly: index k is the coefficient of s^k, no trailing zeros.
class SPoly {
 public:
  static constexpr int kZeroDegree = -1;

  SPoly() = default;
  SPoly(BPoly constant);  // NOLINT(google-explicit-constructor)
  explicit SPoly(std::vector<BPoly> coefficients);

  /// The polynomial `c * s^power`.
  static SPoly monomial(const BPoly& c, int power);
  /// The polynomial s.
  static SPoly s() { return monomial(BPoly(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  BPoly coefficient(int k) const;
  std::span<const BPoly> coefficients() const { return c_; }

  /// d/ds.
  SPoly derivative() const;
  /// s -> -s together with b -> -b.
  SPoly reflect() const;
  /// Substitute b = b0 exactly; the result has constant BPoly coefficients.
  SPoly at_b(const Rational& b0) const;

  Rational eval(const Rational& s0, const Rational& b0) const;
  double eval(double s0, double b0) const;

  SPoly operator-() const;
  SPoly& operator+=(const SPoly& o);
  SPoly& operator-=(const SPoly& o);
  SPoly& operator*=(const BPoly& factor);

  friend SPoly operator+(SPoly a, const SPoly& b) { return a += b; }
  friend SPoly operator-(SPoly a, const SPoly& b) { return a -= b; }
  friend SPoly operator*(const SPoly& a, const SPoly& b);
  friend SPoly operator*(SPoly a, const BPoly& f) { return a *= f; }
  friend SPoly operator*(const BPoly& f, SPoly a) { return a *= f; }
  friend bool operator==(const SPoly& a, const SPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<BPoly> c_;
};

/// Coefficients e_k with sum_k e_k * basis[k] == target, where basis[k] has
/// exact s-degree k. Back-substitution from the top degree down; every
/// division is checked to be exact in Q[b].
///
/// Throws DegreeMismatch when the target is not in the span of the basis or
/// the basis is not graded, InexactDivision when a leading coefficient fails
/// to divide.
std::vector<BPoly> triangular_change_of_basis(const SPoly& target, std::span<const SPoly> basis);

/// sum_k coefficients[k] * basis[k].
SPoly recombine(std::span<const BPoly> coefficients, std::span<const SPoly> basis);

}  // namespace scarf
