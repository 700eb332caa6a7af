#include "scarf/spoly.hpp"

#include "scarf/error.hpp"

namespace scarf {

SPoly::SPoly(BPoly constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

SPoly::SPoly(std::vector<BPoly> coefficients) : c_(std::move(coefficients)) { trim(); }

SPoly SPoly::monomial(const BPoly& c, int power) {
  if (power < 0) throw Error(ErrorCode::InvalidArgument, "negative power in SPoly::monomial");
  if (c.is_zero()) return {};
  std::vector<BPoly> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = c;
  return SPoly(std::move(coeffs));
}

void SPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BPoly SPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return {};
  return c_[static_cast<std::size_t>(k)];
}

SPoly SPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BPoly> out(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return SPoly(std::move(out));
}

SPoly SPoly::reflect() const {
  std::vector<BPoly> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) {
    out[k] = c_[k].reflect();
    if (k % 2 == 1) out[k] = -out[k];
  }
  return SPoly(std::move(out));
}

SPoly SPoly::at_b(const Rational& b0) const {
  std::vector<BPoly> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.emplace_back(c.eval(b0));
  return SPoly(std::move(out));
}

Rational SPoly::eval(const Rational& s0, const Rational& b0) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s0 + it->eval(b0);
  return acc;
}

double SPoly::eval(double s0, double b0) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s0 + it->eval(b0);
  return acc;
}

SPoly SPoly::operator-() const {
  SPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

SPoly& SPoly::operator+=(const SPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

SPoly& SPoly::operator-=(const SPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

SPoly& SPoly::operator*=(const BPoly& factor) {
  for (auto& c : c_) c *= factor;
  trim();
  return *this;
}

SPoly operator*(const SPoly& a, const SPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BPoly> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return SPoly(std::move(out));
}

std::string SPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BPoly& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (k == 1) out += "*s";
    if (k > 1) out += "*s^" + std::to_string(k);
  }
  return out;
}

std::vector<BPoly> triangular_change_of_basis(const SPoly& target, std::span<const SPoly> basis) {
  const int top = static_cast<int>(basis.size()) - 1;
  if (target.degree() > top) {
    throw Error(ErrorCode::DegreeMismatch, "target degree " + std::to_string(target.degree()) +
                                               " exceeds basis span " + std::to_string(top));
  }
  for (int k = 0; k <= top; ++k) {
    if (basis[static_cast<std::size_t>(k)].degree() != k) {
      throw Error(ErrorCode::DegreeMismatch, "basis element " + std::to_string(k) + " has degree " +
                                                 std::to_string(basis[static_cast<std::size_t>(k)].degree()));
    }
  }
  std::vector<BPoly> coeffs(basis.size());
  SPoly rest = target;
  for (int k = top; k >= 0; --k) {
    const SPoly& element = basis[static_cast<std::size_t>(k)];
    BPoly e = exact_quotient(rest.coefficient(k), element.coefficient(k));
    if (!e.is_zero()) rest -= element * e;
    coeffs[static_cast<std::size_t>(k)] = std::move(e);
  }
  if (!rest.is_zero()) {
    throw Error(ErrorCode::InexactDivision, "back-substitution left remainder " + rest.to_string());
  }
  return coeffs;
}

SPoly recombine(std::span<const BPoly> coefficients, std::span<const SPoly> basis) {
  if (coefficients.size() != basis.size()) {
    throw Error(ErrorCode::InvalidArgument, "coefficient and basis lengths differ");
  }
  SPoly sum;
  for (std::size_t k = 0; k < basis.size(); ++k) sum += basis[k] * coefficients[k];
  return sum;
}

}  // namespace scarf
