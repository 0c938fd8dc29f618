#ifndef SYMFACT_QOPS_SCHUR_HPP
#define SYMFACT_QOPS_SCHUR_HPP

#include <string>
#include <vector>

#include "symfact/errors.hpp"
#include "symfact/multipoly.hpp"
#include "symfact/partition.hpp"
#include "symfact/spectral.hpp"
#include "symfact/sym_bases.hpp"
#include "symfact/unipoly.hpp"

namespace symfact::schur {

/// phi_lambda(z) = sum_j c_j z^{mu_j}, c_j = prod_{k != j} (mu_j - mu_k)^{-1}.
struct PhiData {
  ShiftedPartition mu;
  std::vector<Rational> c;
  UniPoly phi;
};

/// sum_j mu_j^power c_j
inline Rational moment(const PhiData& d, int power) {
  Rational acc(0);
  for (std::size_t j = 0; j < d.c.size(); ++j) acc += pow(Rational(d.mu[j]), power) * d.c[j];
  return acc;
}

inline PhiData phi_lambda(const Partition& lambda) {
  auto mu = lambda.staircase_shift();
  const std::size_t n = mu.size();
  std::vector<Rational> c(n);
  UniPoly phi;
  for (std::size_t j = 0; j < n; ++j) {
    Rational prod(1);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) prod *= mu[j] - mu[k];
    c[j] = Rational(1) / prod;
    phi = phi + UniPoly::monomial(mu[j], c[j]);
  }
  PhiData d{mu, c, phi};
  for (int k = 0; k + 1 < static_cast<int>(n); ++k)
    if (moment(d, k) != 0) throw InvariantViolation("phi moment condition fails");
  if (n > 0 && moment(d, static_cast<int>(n) - 1) != 1) throw InvariantViolation("phi normalization fails");
  // Divisibility by (z-1)^{n-1}; throws NotDivisible otherwise.
  if (n > 1) (void)divide_by_root_power(phi, Rational(1), static_cast<int>(n) - 1);
  return d;
}

/// q_lambda(z) = (n-1)! phi_lambda(z) / (z-1)^{n-1}
inline UniPoly q(const Partition& lambda) {
  const int n = static_cast<int>(lambda.size());
  if (n == 0) return UniPoly::constant(1);
  auto d = phi_lambda(lambda);
  try {
    return divide_by_root_power(d.phi * factorial(n - 1), Rational(1), n - 1);
  } catch (const NotDivisible&) {
    throw InvariantViolation("phi_lambda is not divisible by (z-1)^(n-1)");
  }
}

/// q_lambda via the restricted-Schur ratio at k = 2, divided by s_lambda(1).
inline UniPoly q_via_restriction(const Partition& lambda) {
  if (lambda.size() < 2) return to_unipoly(schur_poly(lambda).normalized, 0);
  MultiPoly ratio = restricted_schur(lambda, 2).ratio();
  return to_unipoly(ratio, 0) * (Rational(1) / schur_value_at_one(lambda));
}

/// q_lambda(z) = s-bar_lambda(z, 1, ..., 1) by direct substitution.
inline UniPoly q_via_substitution(const Partition& lambda) {
  const std::size_t n = lambda.size();
  MultiPoly sbar = schur_poly(lambda).normalized;
  std::vector<std::size_t> rest;
  for (std::size_t s = 1; s < n; ++s) rest.push_back(s);
  return to_unipoly(specialize(sbar, rest, Rational(1)), 0);
}

/// prod_j (z d/dz - mu_j) phi; zero for every lambda.
inline UniPoly phi_ode_residual(const Partition& lambda) {
  auto d = phi_lambda(lambda);
  UniPoly p = d.phi;
  for (int m : d.mu.parts()) p = euler(p) - p * Rational(m);
  return p;
}

/// numerator / (z - 1)^order
struct PoleForm {
  UniPoly numerator;
  int order = 0;
};

/// Z = z (d/dz + (n-1)/(z-1)) acting on p/(z-1)^m:
///   z [p'(z-1) + (n-1-m) p] / (z-1)^{m+1}
inline PoleForm apply_Z(const PoleForm& f, std::size_t n) {
  UniPoly zm1 = UniPoly::linear(1, -1);
  UniPoly inner = derivative(f.numerator) * zm1 +
                  f.numerator * Rational(static_cast<long>(n) - 1 - f.order);
  return {UniPoly::monomial(1) * inner, f.order + 1};
}

/// Numerator of [Z^n + sum_k (-1)^k h_k Z^{n-k}] candidate with h_k = e_k(mu),
/// brought over the common denominator (z-1)^n.
inline UniPoly separated_ode_residual(const Partition& lambda, const UniPoly& candidate) {
  const std::size_t n = lambda.size();
  auto mu = lambda.staircase_shift();
  std::vector<PoleForm> powers{PoleForm{candidate, 0}};
  for (std::size_t i = 0; i < n; ++i) powers.push_back(apply_Z(powers.back(), n));
  UniPoly zm1 = UniPoly::linear(1, -1);
  UniPoly total;
  for (std::size_t k = 0; k <= n; ++k) {
    Rational h = elementary_value(mu.parts(), static_cast<int>(k));
    if (k % 2 == 1) h = -h;
    const PoleForm& term = powers[n - k];
    total = total + term.numerator * pow(zm1, static_cast<int>(n) - term.order) * h;
  }
  return total;
}

inline UniPoly separated_ode_residual(const Partition& lambda) { return separated_ode_residual(lambda, q(lambda)); }

/// H_j = Delta^{-1} e_j(D) Delta
inline MultiPoly H_apply(int j, const MultiPoly& f) {
  const std::size_t n = f.arity();
  if (j < 1 || static_cast<std::size_t>(j) > n) throw std::out_of_range("H_j needs 1 <= j <= n");
  MultiPoly delta = vandermonde(n);
  MultiPoly lifted = delta * f;
  MultiPoly out(n);
  std::vector<int> mask(n, 0);
  std::fill(mask.end() - j, mask.end(), 1);
  do {
    MultiPoly g = lifted;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) g = apply_D(g, i);
    out += g;
  } while (std::next_permutation(mask.begin(), mask.end()));
  try {
    return divide_exact(out, delta).with_names(f.names());
  } catch (const NotDivisible&) {
    throw InvariantViolation("H_j image is not divisible by the Vandermonde determinant");
  }
}

inline DiagonalOperator Q_spectral() { return DiagonalOperator{Basis::Schur, q}; }

/// Q_z defined on the normalized Schur basis; input [x_1..x_n, parameters...].
inline MultiPoly Q_apply(const MultiPoly& f, std::size_t n, const std::string& z_name = "z") {
  return Q_spectral().apply(f, n, z_name);
}
inline MultiPoly Q_apply(const MultiPoly& f) { return Q_apply(f, f.arity()); }

/// K_n = prod_{i<j} (D_i - D_j)
inline MultiPoly K_apply(const MultiPoly& f) {
  const std::size_t n = f.arity();
  MultiPoly g = f;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g = apply_D(g, i) - apply_D(g, j);
  return g;
}

/// S_n, realized spectrally: s-bar_lambda -> prod_j q_lambda(z_j).
inline MultiPoly S_apply(const MultiPoly& f) { return separate_spectral(f, Basis::Schur, q); }

inline MultiPoly S_by_q_composition(const MultiPoly& f) {
  const std::size_t n = f.arity();
  return separate_by_q_composition(f, [n](const MultiPoly& g, const std::string& z) { return Q_apply(g, n, z); });
}

/// S_n^{-1} = (-1)^{n(n-1)/2} / [(n-1)!]^n * Delta_n(delta)/Delta_n(x) o K_n o prod_k (x_k - 1)^{n-1}
/// with the z slots identified with x slots. Throws NotDivisible when g is not
/// in the image of S_n.
inline MultiPoly S_inverse_apply(const MultiPoly& g) {
  const std::size_t n = g.arity();
  const int ni = static_cast<int>(n);
  MultiPoly x = g.with_names(default_names("x", n));
  MultiPoly weight = MultiPoly::constant(n, 1);
  for (std::size_t k = 0; k < n; ++k)
    weight = weight * pow(MultiPoly::variable(n, k) - MultiPoly::constant(n, 1), ni - 1);
  MultiPoly k_image = K_apply(weight * x);
  MultiPoly quotient = divide_exact(k_image, vandermonde(n));
  Rational delta_delta(1);
  for (int i = 1; i < ni; ++i) delta_delta *= factorial(i);
  Rational scale = delta_delta / pow(factorial(ni - 1), ni);
  if ((ni * (ni - 1) / 2) % 2 == 1) scale = -scale;
  return (quotient * scale).with_names(default_names("x", n));
}

/// Q_0': s-bar_{lambda'} -> s-bar_{lambda' 0}; n-1 slots in, n out.
inline MultiPoly Q0prime_apply(const MultiPoly& f) {
  const std::size_t n = f.arity() + 1;
  BasisCache small(Basis::Schur);
  auto expansion = expand_in_basis(f, Basis::Schur, small);
  MultiPoly out(n);
  for (const auto& [lambda, c] : expansion.coeffs) {
    Rational unit = small.get(lambda).valueAtOne;
    out += schur_poly(lambda.append_zero()).normalized * (c * unit);
  }
  return out;
}

/// q_lambda(0) = (n-1)! / prod_{i<n} mu_i when lambda_n = 0, and 0 otherwise.
inline Rational q_at_zero_closed_form(const Partition& lambda) {
  const std::size_t n = lambda.size();
  if (n == 0) return Rational(1);
  if (lambda[n - 1] != 0) return Rational(0);
  auto mu = lambda.staircase_shift();
  Rational prod(1);
  for (std::size_t i = 0; i + 1 < n; ++i) prod *= mu[i];
  return factorial(static_cast<int>(n) - 1) / prod;
}

}  // namespace symfact::schur

#endif  // SYMFACT_QOPS_SCHUR_HPP
