#ifndef SYMFACT_SYM_BASES_HPP
#define SYMFACT_SYM_BASES_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symfact/determinant.hpp"
#include "symfact/errors.hpp"
#include "symfact/multipoly.hpp"
#include "symfact/partition.hpp"
#include "symfact/rational.hpp"

namespace symfact {

enum class Basis { Monomial, Elementary, Schur };

inline std::string basis_tag(Basis b) {
  switch (b) {
    case Basis::Monomial: return "m";
    case Basis::Elementary: return "E";
    case Basis::Schur: return "s";
  }
  return "?";
}

inline Basis parse_basis(const std::string& tag) {
  if (tag == "m" || tag == "M") return Basis::Monomial;
  if (tag == "E" || tag == "e") return Basis::Elementary;
  if (tag == "s" || tag == "S") return Basis::Schur;
  throw std::invalid_argument("unknown basis tag: " + tag);
}

/// A basis polynomial together with its value at (1,...,1) and the
/// normalization to unit value there.
struct NormalizedBasisPoly {
  MultiPoly raw;
  Rational valueAtOne;
  MultiPoly normalized;
};

inline NormalizedBasisPoly make_normalized(MultiPoly raw) {
  std::vector<Rational> ones(raw.arity(), Rational(1));
  Rational v = evaluate(raw, std::span<const Rational>(ones));
  if (v == 0) throw InvariantViolation("basis polynomial vanishes at the unit point");
  MultiPoly normalized = raw * (Rational(1) / v);
  return {std::move(raw), v, std::move(normalized)};
}

// ---------------------------------------------------------------------------
// Monomial symmetric functions

inline NormalizedBasisPoly monomial_sym(const Partition& lambda) {
  const std::size_t n = lambda.size();
  MultiPoly raw(n);
  Exponents e(lambda.parts().rbegin(), lambda.parts().rend());  // ascending
  do {
    raw.add_term(e, Rational(1));
  } while (std::next_permutation(e.begin(), e.end()));

  // Average over the full symmetric group (with repetitions).
  MultiPoly averaged(n);
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  Rational inv_fact = Rational(1) / factorial(static_cast<int>(n));
  do {
    Exponents t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = lambda[sigma[i]];
    averaged.add_term(std::move(t), inv_fact);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  auto out = make_normalized(std::move(raw));
  if (!(out.normalized == averaged))
    throw InvariantViolation("distinct-permutation and full-group averages of m_lambda disagree");
  return out;
}

inline NormalizedBasisPoly monomial_sym(const Partition& lambda, std::size_t n) {
  if (lambda.size() != n) throw StructuralError("partition length differs from n");
  return monomial_sym(lambda);
}

// ---------------------------------------------------------------------------
// Elementary symmetric functions

/// e_r(x_1..x_n) as a sum over r-subsets.
inline MultiPoly elementary_sym(int r, std::size_t n) {
  if (r < 0 || static_cast<std::size_t>(r) > n)
    throw std::out_of_range("elementary symmetric index out of range");
  MultiPoly out(n);
  std::vector<int> mask(n, 0);
  std::fill(mask.begin(), mask.begin() + r, 1);
  std::sort(mask.begin(), mask.end());
  do {
    out.add_term(Exponents(mask.begin(), mask.end()), Rational(1));
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

/// w_n(t) = prod_i (1 + t x_i) in slots (x_1..x_n, t).
inline MultiPoly elementary_generating_function(std::size_t n) {
  auto names = default_names("x", n);
  names.push_back("t");
  MultiPoly w = MultiPoly::constant(n + 1, 1).with_names(names);
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e(n + 1, 0);
    e[i] = 1;
    e[n] = 1;
    MultiPoly factor = MultiPoly::constant(n + 1, 1);
    factor.add_term(std::move(e), Rational(1));
    w = w * factor;
  }
  return w.with_names(names);
}

/// Coefficient of t^j in a polynomial whose last slot is t, as a polynomial
/// in the remaining slots.
inline MultiPoly coefficient_of_last_slot(const MultiPoly& f, int j) {
  if (f.arity() == 0) throw StructuralError("no slot to extract from");
  std::size_t n = f.arity() - 1;
  MultiPoly out(std::vector<std::string>(f.names().begin(), f.names().end() - 1));
  for (const auto& [e, c] : f.terms())
    if (e[n] == j) out.add_term(Exponents(e.begin(), e.end() - 1), c);
  (void)n;
  return out;
}

/// E_lambda = prod_j e_j^(lambda_j - lambda_{j+1}).
inline NormalizedBasisPoly E_poly(const Partition& lambda) {
  const std::size_t n = lambda.size();
  MultiPoly raw = MultiPoly::constant(n, 1);
  Rational closed(1);
  for (std::size_t j = 0; j < n; ++j) {
    int g = lambda.gap(j);
    if (g == 0) continue;
    raw = raw * pow(elementary_sym(static_cast<int>(j + 1), n), g);
    closed *= pow(binomial(static_cast<int>(n), static_cast<int>(j + 1)), g);
  }
  auto out = make_normalized(std::move(raw));
  if (out.valueAtOne != closed) throw InvariantViolation("E_lambda(1) differs from product of binomials");
  return out;
}

inline NormalizedBasisPoly E_poly(const Partition& lambda, std::size_t n) {
  if (lambda.size() != n) throw StructuralError("partition length differs from n");
  return E_poly(lambda);
}

// ---------------------------------------------------------------------------
// Schur functions

/// Delta_n(x) = prod_{i<j} (x_i - x_j) in the first n slots of an arity-slot ring.
inline MultiPoly vandermonde(std::size_t n, std::size_t arity) {
  MultiPoly v = MultiPoly::constant(arity, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      v = v * (MultiPoly::variable(arity, i) - MultiPoly::variable(arity, j));
  return v;
}
inline MultiPoly vandermonde(std::size_t n) { return vandermonde(n, n); }

/// Delta_n evaluated on a list of numbers.
inline Rational vandermonde_value(const std::vector<int>& v) {
  Rational acc(1);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) acc *= (v[i] - v[j]);
  return acc;
}
inline Rational vandermonde_value(std::span<const Rational> v) {
  Rational acc(1);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) acc *= (v[i] - v[j]);
  return acc;
}

/// a_mu(x) = det{x_i^{mu_j}}
inline MultiPoly alternant(const std::vector<int>& mu) {
  const std::size_t n = mu.size();
  Matrix<MultiPoly> m(n, std::vector<MultiPoly>(n, MultiPoly(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Exponents e(n, 0);
      e[i] = mu[j];
      m[i][j] = MultiPoly::monomial(std::move(e));
    }
  if (n == 0) return MultiPoly::constant(0, 1);
  return poly_det(m);
}

/// s_lambda(1) = Delta_n(mu) / Delta_n(delta) = prod_{i<j} (mu_i - mu_j)/(j - i).
inline Rational schur_value_at_one(const Partition& lambda) {
  auto mu = lambda.staircase_shift();
  std::vector<int> delta(lambda.size());
  for (std::size_t i = 0; i < delta.size(); ++i) delta[i] = static_cast<int>(delta.size() - 1 - i);
  return vandermonde_value(mu.parts()) / vandermonde_value(delta);
}

/// Bialternant s_lambda = a_{lambda+delta} / a_delta. The unit value is
/// computed both by evaluation and by the closed product form.
inline NormalizedBasisPoly schur_poly(const Partition& lambda) {
  const std::size_t n = lambda.size();
  auto mu = lambda.staircase_shift();
  MultiPoly raw = divide_exact(alternant(mu.parts()), vandermonde(n));
  auto out = make_normalized(std::move(raw));
  if (out.valueAtOne != schur_value_at_one(lambda))
    throw InvariantViolation("s_lambda(1) closed form disagrees with evaluation");
  return out;
}

inline NormalizedBasisPoly schur_poly(const Partition& lambda, std::size_t n) {
  if (lambda.size() != n) throw StructuralError("partition length differs from n");
  return schur_poly(lambda);
}

inline NormalizedBasisPoly basis_poly(Basis basis, const Partition& lambda) {
  switch (basis) {
    case Basis::Monomial: return monomial_sym(lambda);
    case Basis::Elementary: return E_poly(lambda);
    case Basis::Schur: return schur_poly(lambda);
  }
  throw std::invalid_argument("unknown basis");
}

/// Restriction x_k = ... = x_n = 1 of the Schur function as a ratio of the
/// mixed determinant a_mu^(k) and its closed-form denominator a_delta^(k).
/// Both live in the k-1 variables x_1..x_{k-1}; k is 1-based.
struct RestrictedSchur {
  MultiPoly numerator;    // a_mu^(k)
  MultiPoly denominator;  // a_delta^(k)
  MultiPoly ratio() const { return divide_exact(numerator, denominator); }
};

inline RestrictedSchur restricted_schur(const Partition& lambda, std::size_t k) {
  const std::size_t n = lambda.size();
  if (k < 1 || k > n) throw std::out_of_range("restriction index k must satisfy 1 <= k <= n");
  const std::size_t vars = k - 1;
  auto mu = lambda.staircase_shift();
  Matrix<MultiPoly> m(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
  for (std::size_t i = 0; i < vars; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Exponents e(vars, 0);
      e[i] = mu[j];
      m[i][j] = MultiPoly::monomial(std::move(e));
    }
  // Remaining rows: mu_j^(n-k), ..., mu_j, 1.
  for (std::size_t r = vars; r < n; ++r) {
    int power = static_cast<int>(n - 1 - r);
    for (std::size_t j = 0; j < n; ++j) m[r][j] = MultiPoly::constant(vars, pow(Rational(mu[j]), power));
  }
  MultiPoly numerator = determinant(m, MultiPoly(vars));

  Rational factorials(1);
  for (std::size_t i = 1; i <= n - k; ++i) factorials *= factorial(static_cast<int>(i));
  MultiPoly denominator = MultiPoly::constant(vars, factorials);
  for (std::size_t j = 0; j < vars; ++j)
    denominator = denominator * pow(MultiPoly::variable(vars, j) - MultiPoly::constant(vars, 1),
                                    static_cast<int>(n - k + 1));
  denominator = denominator * vandermonde(vars);
  return {numerator, denominator};
}

// ---------------------------------------------------------------------------
// Expansion in a basis

struct SymExpansion {
  Basis basis = Basis::Monomial;
  std::size_t n = 0;
  std::map<Partition, Rational> coeffs;  // over the raw (unnormalized) basis

  friend bool operator==(const SymExpansion&, const SymExpansion&) = default;
};

/// Per-call cache of raw basis polynomials.
class BasisCache {
 public:
  explicit BasisCache(Basis basis) : basis_(basis) {}
  const NormalizedBasisPoly& get(const Partition& lambda) {
    auto it = cache_.find(lambda);
    if (it == cache_.end()) it = cache_.emplace(lambda, basis_poly(basis_, lambda)).first;
    return it->second;
  }
  Basis basis() const { return basis_; }

 private:
  Basis basis_;
  std::map<Partition, NormalizedBasisPoly> cache_;
};

/// Exponent vector of the lexicographically largest term.
inline const Exponents& lex_leading_exponents(const MultiPoly& f) {
  const Exponents* best = nullptr;
  for (const auto& [e, c] : f.terms())
    if (best == nullptr || e > *best) best = &e;
  if (best == nullptr) throw StructuralError("lex leading term of zero polynomial");
  return *best;
}

inline SymExpansion expand_in_basis(const MultiPoly& f, Basis basis, BasisCache& cache) {
  const std::size_t n = f.arity();
  if (!is_symmetric(f)) throw NotSymmetric("expand_in_basis: polynomial is not symmetric");
  SymExpansion out{basis, n, {}};
  if (basis == Basis::Monomial) {
    for (const auto& [e, c] : f.terms())
      if (std::is_sorted(e.begin(), e.end(), std::greater<int>())) out.coeffs.emplace(Partition(e), c);
    return out;
  }
  // E_lambda and s_lambda both have lex-leading monomial x^lambda with
  // coefficient 1, and the lex-leading exponent of a symmetric polynomial is a
  // partition, so subtracting it strictly lowers the leading term.
  MultiPoly rem = f;
  while (!rem.is_zero()) {
    Partition lambda(lex_leading_exponents(rem));
    Rational c = rem.coefficient(lambda.parts());
    out.coeffs[lambda] += c;
    rem.add_scaled(cache.get(lambda).raw, Exponents(n, 0), -c);
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline SymExpansion expand_in_basis(const MultiPoly& f, Basis basis) {
  BasisCache cache(basis);
  return expand_in_basis(f, basis, cache);
}

inline MultiPoly reconstruct(const SymExpansion& x, BasisCache& cache) {
  MultiPoly out(x.n);
  for (const auto& [lambda, c] : x.coeffs) out.add_scaled(cache.get(lambda).raw, Exponents(x.n, 0), c);
  return out;
}

inline MultiPoly reconstruct(const SymExpansion& x) {
  BasisCache cache(x.basis);
  return reconstruct(x, cache);
}

}  // namespace symfact

#endif  // SYMFACT_SYM_BASES_HPP
