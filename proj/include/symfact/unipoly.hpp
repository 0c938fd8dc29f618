#ifndef SYMFACT_UNIPOLY_HPP
#define SYMFACT_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "symfact/errors.hpp"
#include "symfact/multipoly.hpp"
#include "symfact/rational.hpp"

namespace symfact {

/// Dense univariate polynomial; coeffs()[d] multiplies z^d. The zero
/// polynomial has no coefficients, otherwise the last one is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static UniPoly constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }
  static UniPoly monomial(int degree, const Rational& c = Rational(1)) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return UniPoly(std::move(v));
  }
  /// z + shift
  static UniPoly linear(const Rational& slope, const Rational& intercept) {
    return UniPoly{intercept, slope};
  }

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coefficient(int d) const {
    return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : Rational(0);
  }

  Rational operator()(const Rational& z) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }
  double operator()(double z) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + it->get_d();
    return acc;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + b * Rational(-1); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(v));
  }
  friend UniPoly operator*(UniPoly a, const Rational& s) {
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
  }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return std::move(a) * s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

inline UniPoly pow(const UniPoly& base, int exponent) {
  UniPoly acc = UniPoly::constant(1);
  for (int i = 0; i < exponent; ++i) acc = acc * base;
  return acc;
}

inline UniPoly derivative(const UniPoly& p) {
  std::vector<Rational> v;
  for (int d = 1; d <= p.degree(); ++d) v.push_back(p.coefficient(d) * d);
  return UniPoly(std::move(v));
}

/// z d/dz
inline UniPoly euler(const UniPoly& p) {
  std::vector<Rational> v(p.coeffs());
  for (std::size_t d = 0; d < v.size(); ++d) v[d] *= static_cast<long>(d);
  return UniPoly(std::move(v));
}

/// Exact quotient p / (z - root)^multiplicity by repeated synthetic division.
inline UniPoly divide_by_root_power(const UniPoly& p, const Rational& root, int multiplicity) {
  std::vector<Rational> c = p.coeffs();
  for (int m = 0; m < multiplicity; ++m) {
    if (c.empty()) return {};
    std::vector<Rational> q(c.size() - 1, Rational(0));
    Rational carry(0);
    for (std::size_t i = c.size(); i-- > 0;) {
      carry = carry * root + c[i];
      if (i > 0) q[i - 1] = carry;
    }
    if (carry != 0) throw NotDivisible("univariate polynomial has no root of the required multiplicity");
    c = std::move(q);
  }
  return UniPoly(std::move(c));
}

/// Embeds p(z) as a polynomial in slot `slot` of an `arity`-slot ring.
inline MultiPoly to_multipoly(const UniPoly& p, std::size_t arity, std::size_t slot) {
  MultiPoly out(arity);
  for (int d = 0; d <= p.degree(); ++d) {
    Exponents e(arity, 0);
    e.at(slot) = d;
    out.add_term(std::move(e), p.coefficient(d));
  }
  return out;
}

/// Reads a polynomial that only involves `slot` back as univariate.
inline UniPoly to_unipoly(const MultiPoly& f, std::size_t slot) {
  std::vector<Rational> v;
  for (const auto& [e, c] : f.terms()) {
    if (total_degree(e) != e.at(slot)) throw StructuralError("polynomial is not univariate in slot");
    if (static_cast<int>(v.size()) <= e[slot]) v.resize(static_cast<std::size_t>(e[slot]) + 1, Rational(0));
    v[e[slot]] = c;
  }
  return UniPoly(std::move(v));
}

inline std::string to_string(const UniPoly& p, const std::string& var = "z") {
  return to_string(to_multipoly(p, 1, 0).with_names({var}));
}

}  // namespace symfact

#endif  // SYMFACT_UNIPOLY_HPP
