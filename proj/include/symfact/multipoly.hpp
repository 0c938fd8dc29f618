#ifndef SYMFACT_MULTIPOLY_HPP
#define SYMFACT_MULTIPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symfact/errors.hpp"
#include "symfact/rational.hpp"

namespace symfact {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Graded reverse lexicographic order: higher total degree first; on ties,
/// the vector whose last nonzero entry of (a - b) is negative is smaller.
inline bool grevlex_less(const Exponents& a, const Exponents& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const { return grevlex_less(b, a); }
};

inline std::vector<std::string> default_names(const std::string& prefix, std::size_t n,
                                              std::size_t first_index = 1) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(first_index + i));
  return out;
}

/// Sparse polynomial over the rationals in a fixed number of variable slots.
/// Terms are kept in descending grevlex order, so begin() is the leading term,
/// and zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrevlexGreater>;

  MultiPoly() : MultiPoly(std::size_t{0}) {}
  explicit MultiPoly(std::size_t arity) : arity_(arity), names_(default_names("x", arity)) {}
  explicit MultiPoly(std::vector<std::string> names) : arity_(names.size()), names_(std::move(names)) {}

  static MultiPoly constant(std::size_t arity, const Rational& c) {
    MultiPoly p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
  }
  static MultiPoly variable(std::size_t arity, std::size_t slot) {
    if (slot >= arity) throw StructuralError("variable slot out of range");
    Exponents e(arity, 0);
    e[slot] = 1;
    MultiPoly p(arity);
    p.add_term(std::move(e), Rational(1));
    return p;
  }
  static MultiPoly monomial(Exponents e, const Rational& c = Rational(1)) {
    MultiPoly p(e.size());
    p.add_term(std::move(e), c);
    return p;
  }

  std::size_t arity() const { return arity_; }
  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names) {
    if (names.size() != arity_) throw StructuralError("name count does not match arity");
    names_ = std::move(names);
  }
  MultiPoly with_names(std::vector<std::string> names) const {
    MultiPoly out(*this);
    out.set_names(std::move(names));
    return out;
  }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coefficient(Exponents(arity_, 0)); }

  const std::pair<const Exponents, Rational>& leading() const {
    if (terms_.empty()) throw StructuralError("leading term of zero polynomial");
    return *terms_.begin();
  }

  void add_term(Exponents e, const Rational& c) {
    if (e.size() != arity_) throw StructuralError("exponent length does not match arity");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// this += scale * x^shift * other
  void add_scaled(const MultiPoly& other, const Exponents& shift, const Rational& scale) {
    check_arity(other);
    if (scale == 0) return;
    Exponents e(arity_);
    for (const auto& [oe, oc] : other.terms_) {
      for (std::size_t i = 0; i < arity_; ++i) e[i] = oe[i] + shift[i];
      add_term(e, oc * scale);
    }
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  MultiPoly operator-() const {
    MultiPoly out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly out(a.arity_);
    out.names_ = a.names_;
    Exponents e(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  /// Equality of canonical forms; variable names are display metadata only.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  void check_arity(const MultiPoly& o) const {
    if (o.arity_ != arity_)
      throw StructuralError("arity mismatch: " + std::to_string(arity_) + " vs " +
                            std::to_string(o.arity_));
  }

 private:
  std::size_t arity_;
  std::vector<std::string> names_;
  TermMap terms_;
};

enum class ArithOp { Add, Sub, Mul };

inline MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
  }
  throw StructuralError("unknown arithmetic op");
}

inline MultiPoly pow(const MultiPoly& base, int exponent) {
  if (exponent < 0) throw StructuralError("negative polynomial power");
  MultiPoly acc = MultiPoly::constant(base.arity(), 1).with_names(base.names());
  MultiPoly b = base;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) acc = acc * b;
    if (e > 1) b = b * b;
  }
  return acc;
}

/// Exact quotient num/den by leading-term reduction under grevlex. Throws
/// NotDivisible when a nonzero remainder is left.
inline MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den) {
  num.check_arity(den);
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto& [lde, ldc] = den.leading();
  MultiPoly quotient(num.arity());
  quotient.set_names(num.names());
  MultiPoly rem = num;
  Exponents shift(num.arity());
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading();
    for (std::size_t i = 0; i < shift.size(); ++i) {
      shift[i] = re[i] - lde[i];
      if (shift[i] < 0) throw NotDivisible("polynomial is not divisible");
    }
    Rational c = rc / ldc;
    quotient.add_term(shift, c);
    rem.add_scaled(den, shift, -c);
  }
  return quotient;
}

/// d/dx_slot
inline MultiPoly derivative(const MultiPoly& f, std::size_t slot) {
  if (slot >= f.arity()) throw StructuralError("derivative slot out of range");
  MultiPoly out(f.arity());
  out.set_names(f.names());
  for (const auto& [e, c] : f.terms()) {
    if (e[slot] == 0) continue;
    Exponents d = e;
    d[slot] -= 1;
    out.add_term(std::move(d), c * e[slot]);
  }
  return out;
}

/// Euler operator x_slot * d/dx_slot.
inline MultiPoly apply_D(const MultiPoly& f, std::size_t slot) {
  if (slot >= f.arity()) throw StructuralError("Euler operator slot out of range");
  MultiPoly out(f.arity());
  out.set_names(f.names());
  for (const auto& [e, c] : f.terms()) out.add_term(e, c * e[slot]);
  return out;
}

inline Rational evaluate(const MultiPoly& f, std::span<const Rational> point) {
  if (point.size() != f.arity()) throw StructuralError("evaluation point has wrong length");
  std::vector<std::vector<Rational>> powers(f.arity(), std::vector<Rational>{Rational(1)});
  Rational acc(0);
  for (const auto& [e, c] : f.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * point[i]);
      t *= pw[e[i]];
    }
    acc += t;
  }
  return acc;
}

inline Rational evaluate(const MultiPoly& f, std::initializer_list<Rational> point) {
  std::vector<Rational> p(point);
  return evaluate(f, std::span<const Rational>(p));
}

/// Floating evaluation; coefficients are rounded to double only here.
inline double evaluate_double(const MultiPoly& f, std::span<const double> point) {
  if (point.size() != f.arity()) throw StructuralError("evaluation point has wrong length");
  double acc = 0.0;
  for (const auto& [e, c] : f.terms()) {
    double t = to_double(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

/// f(images[0], ..., images[arity-1]); every image has `target_arity` slots.
inline MultiPoly substitute(const MultiPoly& f, std::span<const MultiPoly> images,
                            std::size_t target_arity) {
  if (images.size() != f.arity()) throw StructuralError("substitution needs one image per slot");
  for (const auto& im : images)
    if (im.arity() != target_arity) throw StructuralError("substitution images disagree on arity");
  MultiPoly out(target_arity);
  if (!images.empty()) out.set_names(images[0].names());
  std::vector<std::vector<MultiPoly>> powers(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i)
    powers[i].push_back(MultiPoly::constant(target_arity, 1));
  for (const auto& [e, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(target_arity, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[e[i]];
    }
    out += t;
  }
  return out;
}

inline MultiPoly substitute(const MultiPoly& f, std::span<const MultiPoly> images) {
  if (images.empty()) throw StructuralError("substitution needs an explicit target arity");
  return substitute(f, images, images[0].arity());
}

/// Moves the exponent of source slot i to target slot target_of_source[i];
/// slots mapped to the same target are identified (exponents add).
inline MultiPoly remap_slots(const MultiPoly& f, const std::vector<std::size_t>& target_of_source,
                             std::vector<std::string> target_names) {
  if (target_of_source.size() != f.arity()) throw StructuralError("slot map has wrong length");
  std::size_t arity = target_names.size();
  MultiPoly out(std::move(target_names));
  for (const auto& [e, c] : f.terms()) {
    Exponents t(arity, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (target_of_source[i] >= arity) throw StructuralError("slot map target out of range");
      t[target_of_source[i]] += e[i];
    }
    out.add_term(std::move(t), c);
  }
  return out;
}

/// Sets the listed slots to a value; the arity is unchanged and the listed
/// slots no longer occur.
inline MultiPoly specialize(const MultiPoly& f, const std::vector<std::size_t>& slots,
                            const Rational& value) {
  MultiPoly out(f.arity());
  out.set_names(f.names());
  for (const auto& [e, c] : f.terms()) {
    Exponents t = e;
    Rational k = c;
    for (auto s : slots) {
      if (s >= f.arity()) throw StructuralError("specialized slot out of range");
      k *= pow(value, t[s]);
      t[s] = 0;
    }
    out.add_term(std::move(t), k);
  }
  return out;
}

/// Keeps only the listed slots (in that order). Dropped slots must not occur.
inline MultiPoly project(const MultiPoly& f, const std::vector<std::size_t>& keep) {
  std::vector<std::string> names;
  for (auto s : keep) names.push_back(f.names().at(s));
  MultiPoly out(std::move(names));
  for (const auto& [e, c] : f.terms()) {
    Exponents t;
    int kept = 0;
    for (auto s : keep) {
      t.push_back(e.at(s));
      kept += e[s];
    }
    if (kept != total_degree(e)) throw StructuralError("projected-away slot occurs in polynomial");
    out.add_term(std::move(t), c);
  }
  return out;
}

/// Appends `extra` unused slots.
inline MultiPoly extend_arity(const MultiPoly& f, std::vector<std::string> extra_names) {
  auto names = f.names();
  names.insert(names.end(), extra_names.begin(), extra_names.end());
  MultiPoly out(std::move(names));
  for (const auto& [e, c] : f.terms()) {
    Exponents t = e;
    t.resize(out.arity(), 0);
    out.add_term(std::move(t), c);
  }
  return out;
}

/// True when f is invariant under every adjacent transposition of its first
/// n slots (the remaining slots are parameters).
inline bool is_symmetric(const MultiPoly& f, std::size_t n) {
  if (n > f.arity()) throw StructuralError("symmetry block exceeds arity");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<std::size_t> swap(f.arity());
    std::iota(swap.begin(), swap.end(), std::size_t{0});
    std::swap(swap[i], swap[i + 1]);
    if (!(remap_slots(f, swap, f.names()) == f)) return false;
  }
  return true;
}

inline bool is_symmetric(const MultiPoly& f) { return is_symmetric(f, f.arity()); }

/// Splits f into polynomials in its first n slots, keyed by the exponents of
/// the remaining (parameter) slots.
inline std::map<Exponents, MultiPoly> slice_parameters(const MultiPoly& f, std::size_t n) {
  if (n > f.arity()) throw StructuralError("slice block exceeds arity");
  std::vector<std::string> head(f.names().begin(), f.names().begin() + static_cast<long>(n));
  std::map<Exponents, MultiPoly> out;
  for (const auto& [e, c] : f.terms()) {
    Exponents key(e.begin() + static_cast<long>(n), e.end());
    auto it = out.try_emplace(std::move(key), MultiPoly(head)).first;
    it->second.add_term(Exponents(e.begin(), e.begin() + static_cast<long>(n)), c);
  }
  return out;
}

inline std::string to_string(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Rational a = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += f.names()[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string term;
    if (mono.empty()) term = to_string(a);
    else if (a == 1) term = mono;
    else term = to_string(a) + "*" + mono;
    if (first) out += (c < 0 ? "-" : "") + term;
    else out += (c < 0 ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

}  // namespace symfact

#endif  // SYMFACT_MULTIPOLY_HPP
