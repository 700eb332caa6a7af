#include "scarf/bpoly.hpp"

#include <algorithm>

#include "scarf/error.hpp"

namespace scarf {

BPoly::BPoly(Rational constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

BPoly::BPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

BPoly BPoly::monomial(const Rational& c, int power) {
  if (power < 0) throw Error(ErrorCode::InvalidArgument, "negative power in BPoly::monomial");
  if (c.is_zero()) return {};
  std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = c;
  return BPoly(std::move(coeffs));
}

void BPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BPoly::min_degree() const {
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (!c_[k].is_zero()) return static_cast<int>(k);
  }
  return kZeroDegree;
}

Rational BPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return Rational();
  return c_[static_cast<std::size_t>(k)];
}

Rational BPoly::eval(const Rational& b0) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * b0 + *it;
  return acc;
}

double BPoly::eval(double b0) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * b0 + it->to_double();
  return acc;
}

BPoly BPoly::reflect() const {
  BPoly r = *this;
  for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
  return r;
}

BPoly BPoly::operator-() const {
  BPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

BPoly& BPoly::operator+=(const BPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

BPoly& BPoly::operator-=(const BPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

BPoly operator*(const BPoly& a, const BPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return BPoly(std::move(out));
}

BPoly& BPoly::operator*=(const BPoly& o) { return *this = *this * o; }

BPoly& BPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

std::string BPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mag_str = mag.is_integer() ? mag.numerator() : mag.to_string();
    if (k == 0) {
      out += mag_str;
    } else {
      if (mag != Rational(1)) out += mag_str + "*";
      out += k == 1 ? "b" : "b^" + std::to_string(k);
    }
  }
  return out;
}

BPolyDivision divmod(const BPoly& numerator, const BPoly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "BPoly division by zero polynomial");
  const int dd = divisor.degree();
  const Rational lead = divisor.coefficient(dd);
  BPoly rem = numerator;
  std::vector<Rational> quot(static_cast<std::size_t>(std::max(0, numerator.degree() - dd + 1)));
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    const Rational factor = rem.coefficient(rem.degree()) / lead;
    quot[static_cast<std::size_t>(shift)] = factor;
    rem -= BPoly::monomial(factor, shift) * divisor;
  }
  return {BPoly(std::move(quot)), rem};
}

BPoly exact_quotient(const BPoly& numerator, const BPoly& divisor) {
  auto [q, r] = divmod(numerator, divisor);
  if (!r.is_zero()) {
    throw Error(ErrorCode::InexactDivision,
                "(" + numerator.to_string() + ") is not divisible by (" + divisor.to_string() + ")");
  }
  return q;
}

}  // namespace scarf
