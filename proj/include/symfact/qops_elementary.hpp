#ifndef SYMFACT_QOPS_ELEMENTARY_HPP
#define SYMFACT_QOPS_ELEMENTARY_HPP

#include <string>
#include <vector>

#include "symfact/errors.hpp"
#include "symfact/multipoly.hpp"
#include "symfact/partition.hpp"
#include "symfact/spectral.hpp"
#include "symfact/sym_bases.hpp"
#include "symfact/unipoly.hpp"

namespace symfact::elementary {

/// e_j of the first `vars` slots inside an `arity`-slot ring; 0 when j is out
/// of range, 1 for j = 0.
inline MultiPoly e_in(int j, std::size_t vars, std::size_t arity) {
  if (j < 0 || static_cast<std::size_t>(j) > vars) return MultiPoly(arity);
  MultiPoly e = elementary_sym(j, vars);
  std::vector<std::size_t> target(vars);
  std::iota(target.begin(), target.end(), std::size_t{0});
  return remap_slots(e, target, default_names("x", arity));
}

/// Gauss reduction: rewrites f, symmetric in its first k slots, as a
/// polynomial in eps_1..eps_k = e_1..e_k of those slots. Remaining slots are
/// parameters and keep their positions.
inline MultiPoly to_elementary(const MultiPoly& f, std::size_t k) {
  if (!is_symmetric(f, k)) throw NotSymmetric("polynomial is not symmetric in the reduced block");
  BasisCache cache(Basis::Elementary);
  std::map<Exponents, MultiPoly> out_slices;
  for (const auto& [key, slice] : slice_parameters(f, k)) {
    MultiPoly eps(default_names("eps", k));
    MultiPoly rem = slice;
    while (!rem.is_zero()) {
      Partition lambda(lex_leading_exponents(rem));
      Rational c = rem.coefficient(lambda.parts());
      Exponents gaps(k);
      for (std::size_t j = 0; j < k; ++j) gaps[j] = lambda.gap(j);
      eps.add_term(std::move(gaps), c);
      rem.add_scaled(cache.get(lambda).raw, Exponents(k, 0), -c);
    }
    out_slices.emplace(key, std::move(eps));
  }
  auto names = default_names("eps", k);
  names.insert(names.end(), f.names().begin() + static_cast<long>(k), f.names().end());
  return join_parameters(out_slices, k, names);
}

/// Inverse of to_elementary: eps_j <- e_j(x_1..x_k).
inline MultiPoly from_elementary(const MultiPoly& g, std::size_t k) {
  const std::size_t arity = g.arity();
  std::vector<MultiPoly> images;
  for (std::size_t j = 0; j < k; ++j) images.push_back(e_in(static_cast<int>(j + 1), k, arity));
  for (std::size_t s = k; s < arity; ++s) images.push_back(MultiPoly::variable(arity, s));
  auto names = default_names("x", k);
  names.insert(names.end(), g.names().begin() + static_cast<long>(k), g.names().end());
  return substitute(g, images, arity).with_names(names);
}

/// S_n^(0): E_lambda -> prod_j eps_j^{lambda_j - lambda_{j+1}}
inline MultiPoly S0_forward(const MultiPoly& f) {
  if (!is_symmetric(f)) throw NotSymmetric("S0 needs a symmetric polynomial");
  return to_elementary(f, f.arity());
}
inline MultiPoly S0_inverse(const MultiPoly& g) { return from_elementary(g, g.arity()); }

/// H_j = (S0)^{-1} eps_j d/deps_j S0
inline MultiPoly H_apply(int j, const MultiPoly& f) {
  const std::size_t n = f.arity();
  if (j < 1 || static_cast<std::size_t>(j) > n) throw std::out_of_range("H_j needs 1 <= j <= n");
  return S0_inverse(apply_D(S0_forward(f), static_cast<std::size_t>(j - 1))).with_names(f.names());
}

/// Forward-mode dual number over the rationals: value plus gradient.
struct Dual {
  Rational value;
  std::vector<Rational> grad;

  static Dual constant(const Rational& v, std::size_t n) { return {v, std::vector<Rational>(n, Rational(0))}; }
  static Dual variable(const Rational& v, std::size_t n, std::size_t i) {
    Dual d = constant(v, n);
    d.grad[i] = 1;
    return d;
  }
  friend Dual operator+(Dual a, const Dual& b) {
    a.value += b.value;
    for (std::size_t i = 0; i < a.grad.size(); ++i) a.grad[i] += b.grad[i];
    return a;
  }
  friend Dual operator-(Dual a, const Dual& b) {
    a.value -= b.value;
    for (std::size_t i = 0; i < a.grad.size(); ++i) a.grad[i] -= b.grad[i];
    return a;
  }
  friend Dual operator*(const Dual& a, const Dual& b) {
    Dual r = constant(a.value * b.value, a.grad.size());
    for (std::size_t i = 0; i < a.grad.size(); ++i) r.grad[i] = a.grad[i] * b.value + a.value * b.grad[i];
    return r;
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    Dual r = constant(a.value / b.value, a.grad.size());
    Rational b2 = b.value * b.value;
    for (std::size_t i = 0; i < a.grad.size(); ++i)
      r.grad[i] = (a.grad[i] * b.value - a.value * b.grad[i]) / b2;
    return r;
  }
};

inline Dual evaluate_dual(const MultiPoly& f, const std::vector<Dual>& x) {
  const std::size_t n = x.empty() ? 0 : x[0].grad.size();
  Dual acc = Dual::constant(0, n);
  for (const auto& [e, c] : f.terms()) {
    Dual t = Dual::constant(c, n);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int p = 0; p < e[i]; ++p) t = t * x[i];
    acc = acc + t;
  }
  return acc;
}

/// Value of the explicit rational-coefficient form
///   e_j(x) sum_i (-x_i)^{n-j} / prod_{m != i}(x_m - x_i) * df/dx_i
/// at a point with pairwise distinct coordinates.
inline Rational H_explicit_at(int j, const MultiPoly& f, const std::vector<Rational>& point) {
  const std::size_t n = f.arity();
  if (point.size() != n) throw StructuralError("point has wrong length");
  Rational ej = elementary_value(std::span<const Rational>(point), j);
  Rational acc(0);
  for (std::size_t i = 0; i < n; ++i) {
    Rational num = pow(Rational(-point[i]), static_cast<int>(n) - j);
    Rational den(1);
    for (std::size_t m = 0; m < n; ++m)
      if (m != i) den *= point[m] - point[i];
    if (den == 0) throw std::domain_error("explicit H_j needs distinct coordinates");
    acc += ej * num / den * evaluate(derivative(f, i), std::span<const Rational>(point));
  }
  return acc;
}

/// H_j(H_k f) at a point, both factors in the explicit rational form. The
/// inner result is carried as a dual number so its gradient is exact.
inline Rational H_explicit_composed_at(int j, int k, const MultiPoly& f, const std::vector<Rational>& point) {
  const std::size_t n = f.arity();
  std::vector<Dual> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(Dual::variable(point[i], n, i));
  Dual one = Dual::constant(1, n);
  Dual ek = evaluate_dual(e_in(k, n, n), x);
  Dual inner = Dual::constant(0, n);
  for (std::size_t i = 0; i < n; ++i) {
    Dual num = one;
    for (int p = 0; p < static_cast<int>(n) - k; ++p) num = num * (Dual::constant(0, n) - x[i]);
    Dual den = one;
    for (std::size_t m = 0; m < n; ++m)
      if (m != i) den = den * (x[m] - x[i]);
    inner = inner + ek * num / den * evaluate_dual(derivative(f, i), x);
  }
  Rational ej = elementary_value(std::span<const Rational>(point), j);
  Rational acc(0);
  for (std::size_t i = 0; i < n; ++i) {
    Rational num = pow(Rational(-point[i]), static_cast<int>(n) - j);
    Rational den(1);
    for (std::size_t m = 0; m < n; ++m)
      if (m != i) den *= point[m] - point[i];
    acc += ej * num / den * inner.grad[i];
  }
  return acc;
}

/// 1 + (z - 1) j / n as a univariate polynomial.
inline UniPoly scale_factor(int j, std::size_t n) {
  Rational r = Rational(j) / static_cast<long>(n);
  return UniPoly::linear(r, Rational(1) - r);
}

/// q_lambda(z) = prod_j (1 + (z-1) j/n)^{lambda_j - lambda_{j+1}}
inline UniPoly q(const Partition& lambda) {
  const std::size_t n = lambda.size();
  UniPoly acc = UniPoly::constant(1);
  for (std::size_t j = 0; j < n; ++j) acc = acc * pow(scale_factor(static_cast<int>(j + 1), n), lambda.gap(j));
  return acc;
}

/// Residual of dq/dz = sum_j lambda_{j,j+1} / (z + (n-j)/j) q, multiplied
/// through by prod_j (j z + n - j). Zero iff q solves the equation.
inline UniPoly ode_residual(const Partition& lambda, const UniPoly& candidate) {
  const std::size_t n = lambda.size();
  std::vector<UniPoly> factors;
  for (std::size_t j = 1; j <= n; ++j)
    factors.push_back(UniPoly::linear(Rational(static_cast<long>(j)), Rational(static_cast<long>(n - j))));
  UniPoly all = UniPoly::constant(1);
  for (const auto& fct : factors) all = all * fct;
  UniPoly residual = all * derivative(candidate);
  for (std::size_t j = 1; j <= n; ++j) {
    int g = lambda.gap(j - 1);
    if (g == 0) continue;
    UniPoly others = UniPoly::constant(1);
    for (std::size_t m = 1; m <= n; ++m)
      if (m != j) others = others * factors[m - 1];
    residual = residual - others * candidate * Rational(g * static_cast<long>(j));
  }
  return residual;
}

inline UniPoly ode_residual(const Partition& lambda) { return ode_residual(lambda, q(lambda)); }

/// Q_z: eps_j -> (1 + (z-1) j/n) eps_j, on [x_1..x_n, parameters...]; appends z.
inline MultiPoly Q_apply(const MultiPoly& f, std::size_t n, const std::string& z_name = "z") {
  MultiPoly eps = extend_arity(to_elementary(f, n), {z_name});
  const std::size_t arity = eps.arity();
  std::vector<MultiPoly> images;
  for (std::size_t j = 0; j < n; ++j)
    images.push_back(e_in(static_cast<int>(j + 1), n, arity) *
                     to_multipoly(scale_factor(static_cast<int>(j + 1), n), arity, arity - 1));
  for (std::size_t s = n; s < arity; ++s) images.push_back(MultiPoly::variable(arity, s));
  return substitute(eps, images, arity).with_names(names_plus(f, z_name));
}

inline MultiPoly Q_apply(const MultiPoly& f) { return Q_apply(f, f.arity()); }

inline DiagonalOperator Q_spectral() { return DiagonalOperator{Basis::Elementary, q}; }

/// A_k on e^(k)-coordinates:
///   e_j^(k) -> e_j^(k-1)(1 + (z_k-1) j/n) + e_{j-1}^(k-1)(1 + (z_k-1)(n-k+j)/n), j < k
///   e_k^(k) -> z_k e_{k-1}^(k-1)
/// with z_k identified with slot k; slots after k hold z_{k+1}.. as parameters.
inline MultiPoly A_apply(std::size_t k, std::size_t n, const MultiPoly& g) {
  if (k < 1 || k > n) throw std::out_of_range("A_k needs 1 <= k <= n");
  if (g.arity() != n) throw StructuralError("A_k works in an n-slot ring");
  MultiPoly eps = to_elementary(g, k);
  MultiPoly zk = MultiPoly::variable(n, k - 1);
  MultiPoly one = MultiPoly::constant(n, 1);
  auto lin = [&](const Rational& r) { return one + (zk - one) * r; };
  std::vector<MultiPoly> images;
  for (std::size_t j = 1; j < k; ++j) {
    int ji = static_cast<int>(j);
    images.push_back(e_in(ji, k - 1, n) * lin(Rational(ji) / static_cast<long>(n)) +
                     e_in(ji - 1, k - 1, n) * lin(Rational(static_cast<long>(n - k + j)) / static_cast<long>(n)));
  }
  images.push_back(zk * e_in(static_cast<int>(k - 1), k - 1, n));
  for (std::size_t s = k; s < n; ++s) images.push_back(MultiPoly::variable(n, s));
  return substitute(eps, images, n).with_names(g.names());
}

/// S_n by substitution: eps_j -> C(n,j) prod_i (1 + (z_i - 1) j/n).
inline MultiPoly S_by_substitution(const MultiPoly& f) {
  const std::size_t n = f.arity();
  MultiPoly eps = S0_forward(f);
  std::vector<MultiPoly> images;
  for (std::size_t j = 1; j <= n; ++j) {
    MultiPoly img = MultiPoly::constant(n, binomial(static_cast<int>(n), static_cast<int>(j)));
    for (std::size_t i = 0; i < n; ++i) img = img * to_multipoly(scale_factor(static_cast<int>(j), n), n, i);
    images.push_back(img);
  }
  return substitute(eps, images, n).with_names(default_names("z", n));
}

inline MultiPoly S_by_chain(const MultiPoly& f) {
  const std::size_t n = f.arity();
  MultiPoly g = f;
  for (std::size_t k = n; k >= 1; --k) g = A_apply(k, n, g);
  return g.with_names(default_names("z", n));
}

inline MultiPoly S_by_q_composition(const MultiPoly& f) {
  const std::size_t n = f.arity();
  return separate_by_q_composition(f, [n](const MultiPoly& g, const std::string& z) { return Q_apply(g, n, z); });
}

/// Separating operator (substitution route). Builds with SYMFACT_CHECK_ROUTES
/// also run the A-chain and rho_0 Q...Q routes and require agreement.
inline MultiPoly S_apply(const MultiPoly& f) {
  MultiPoly s = S_by_substitution(f);
#ifdef SYMFACT_CHECK_ROUTES
  if (!(s == S_by_chain(f))) throw InvariantViolation("substitution and A-chain routes disagree");
  if (!(s == S_by_q_composition(f))) throw InvariantViolation("substitution and rho_0 Q...Q routes disagree");
#endif
  return s;
}

/// Q_0': e_j^(n-1) -> ((n-j)/n) e_j^(n); n-1 slots in, n out.
inline MultiPoly Q0prime_apply(const MultiPoly& f) {
  const std::size_t n = f.arity() + 1;
  MultiPoly eps = S0_forward(f);
  std::vector<MultiPoly> images;
  for (std::size_t j = 1; j < n; ++j)
    images.push_back(e_in(static_cast<int>(j), n, n) * (Rational(static_cast<long>(n - j)) / static_cast<long>(n)));
  return substitute(eps, images, n).with_names(default_names("x", n));
}

}  // namespace symfact::elementary

#endif  // SYMFACT_QOPS_ELEMENTARY_HPP
