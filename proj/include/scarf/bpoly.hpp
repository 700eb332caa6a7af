#pragma once

#include <span>
#include <string>
#include <vector>

#include "scarf/rational.hpp"

namespace scarf {

/// Dense univariate polynomial in the deformation parameter b with rational
/// coefficients. Index k of the coefficient list is the coefficient of b^k;
/// trailing zeros are never stored.
class BPoly {
 public:
  static constexpr int kZeroDegree = -1;

  BPoly() = default;
  BPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  BPoly(long constant) : BPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit BPoly(std::vector<Rational> coefficients);

  /// The polynomial `c * b^power`.
  static BPoly monomial(const Rational& c, int power);
  /// The polynomial b.
  static BPoly b() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Lowest power with a nonzero coefficient; kZeroDegree for the zero polynomial.
  int min_degree() const;

  /// Coefficient of b^k (zero past the stored degree).
  Rational coefficient(int k) const;
  std::span<const Rational> coefficients() const { return c_; }

  Rational eval(const Rational& b0) const;
  double eval(double b0) const;

  /// p(-b).
  BPoly reflect() const;

  BPoly operator-() const;
  BPoly& operator+=(const BPoly& o);
  BPoly& operator-=(const BPoly& o);
  BPoly& operator*=(const BPoly& o);
  BPoly& operator*=(const Rational& s);

  friend BPoly operator+(BPoly a, const BPoly& b) { return a += b; }
  friend BPoly operator-(BPoly a, const BPoly& b) { return a -= b; }
  friend BPoly operator*(const BPoly& a, const BPoly& b);
  friend BPoly operator*(BPoly a, const Rational& s) { return a *= s; }
  friend BPoly operator*(const Rational& s, BPoly a) { return a *= s; }
  friend bool operator==(const BPoly& a, const BPoly& b) { return a.c_ == b.c_; }

  /// Readable form, e.g. "1/2*b^2 - b + 3/4"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

struct BPolyDivision {
  BPoly quotient;
  BPoly remainder;
};

/// Euclidean division over Q[b]. Throws DivisionByZero for a zero divisor.
BPolyDivision divmod(const BPoly& numerator, const BPoly& divisor);

/// Quotient that must be exact; throws InexactDivision otherwise.
BPoly exact_quotient(const BPoly& numerator, const BPoly& divisor);

}  // namespace scarf
