#ifndef SYMFACT_QOPS_MONOMIAL_HPP
#define SYMFACT_QOPS_MONOMIAL_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "symfact/errors.hpp"
#include "symfact/multipoly.hpp"
#include "symfact/partition.hpp"
#include "symfact/spectral.hpp"
#include "symfact/sym_bases.hpp"
#include "symfact/unipoly.hpp"

namespace symfact::monomial {

/// H_j = e_j(D_1, ..., D_n): sum over j-subsets of products of Euler operators.
inline MultiPoly H_apply(int j, const MultiPoly& f) {
  const std::size_t n = f.arity();
  if (j < 1 || static_cast<std::size_t>(j) > n) throw std::out_of_range("H_j needs 1 <= j <= n");
  MultiPoly out(n);
  out.set_names(f.names());
  std::vector<int> mask(n, 0);
  std::fill(mask.end() - j, mask.end(), 1);
  do {
    MultiPoly g = f;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) g = apply_D(g, i);
    out += g;
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

/// q_lambda(z) = (1/n) sum_j z^{lambda_j}
inline UniPoly q(const Partition& lambda) {
  UniPoly acc;
  for (std::size_t j = 0; j < lambda.size(); ++j) acc = acc + UniPoly::monomial(lambda[j]);
  return acc * (Rational(1) / static_cast<long>(std::max<std::size_t>(lambda.size(), 1)));
}

/// (Q_z f)(x) = (1/n) sum_j f(..., z x_j, ...). Works on any polynomial, with
/// parameter slots after the first n; appends the z slot.
inline MultiPoly Q_apply(const MultiPoly& f, std::size_t n, const std::string& z_name = "z") {
  MultiPoly out(names_plus(f, z_name));
  Rational w = Rational(1) / static_cast<long>(n);
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t j = 0; j < n; ++j) {
      Exponents t = e;
      t.push_back(e[j]);
      out.add_term(std::move(t), c * w);
    }
  }
  return out;
}

inline MultiPoly Q_apply(const MultiPoly& f) { return Q_apply(f, f.arity()); }

/// Same operator defined spectrally on the normalized monomial basis.
inline DiagonalOperator Q_spectral() { return DiagonalOperator{Basis::Monomial, q}; }

/// P_jk f = f(..., x_j x_k, ..., 1, ...) with x_j x_k in slot j and 1 in slot
/// k (1-based, j < k).
inline MultiPoly projector(const MultiPoly& f, std::size_t j, std::size_t k) {
  if (!(1 <= j && j < k && k <= f.arity())) throw std::out_of_range("projector needs 1 <= j < k <= arity");
  MultiPoly out(f.arity());
  out.set_names(f.names());
  for (const auto& [e, c] : f.terms()) {
    Exponents t = e;
    t[k - 1] = e[j - 1];
    out.add_term(std::move(t), c);
  }
  return out;
}

/// A_k = (1/n)(n - k + 1 + sum_{j<k} P_jk), with z_k identified with slot k.
/// Slots k+1.. carry z_{k+1}.. from earlier links of the chain.
inline MultiPoly A_apply(std::size_t k, std::size_t n, const MultiPoly& g) {
  if (k < 1 || k > n) throw std::out_of_range("A_k needs 1 <= k <= n");
  MultiPoly acc = g * Rational(static_cast<long>(n - k + 1));
  for (std::size_t j = 1; j < k; ++j) acc += projector(g, j, k);
  return acc * (Rational(1) / static_cast<long>(n));
}

/// A_k^{-1} = (1/(n-k+1))(n - sum_{j<k} P_jk)
inline MultiPoly A_inverse_apply(std::size_t k, std::size_t n, const MultiPoly& g) {
  if (k < 1 || k > n) throw std::out_of_range("A_k needs 1 <= k <= n");
  MultiPoly acc = g * Rational(static_cast<long>(n));
  for (std::size_t j = 1; j < k; ++j) acc -= projector(g, j, k);
  return acc * (Rational(1) / static_cast<long>(n - k + 1));
}

/// S_n = A_1 A_2 ... A_n; output slots are (z_1..z_n).
inline MultiPoly S_by_chain(const MultiPoly& f) {
  const std::size_t n = f.arity();
  MultiPoly g = f;
  for (std::size_t k = n; k >= 1; --k) g = A_apply(k, n, g);
  return g.with_names(default_names("z", n));
}

/// S_n = rho_0 Q_{z_1} ... Q_{z_n} using the substitution form of Q_z.
inline MultiPoly S_by_q_composition(const MultiPoly& f) {
  const std::size_t n = f.arity();
  return separate_by_q_composition(f, [n](const MultiPoly& g, const std::string& z) { return Q_apply(g, n, z); });
}

/// Separating operator. Builds with SYMFACT_CHECK_ROUTES also run the
/// rho_0 Q...Q route and require agreement.
inline MultiPoly S_apply(const MultiPoly& f) {
  if (!is_symmetric(f)) throw NotSymmetric("S_n needs a symmetric polynomial");
  MultiPoly chain = S_by_chain(f);
#ifdef SYMFACT_CHECK_ROUTES
  if (!(chain == S_by_q_composition(f))) throw InvariantViolation("A-chain and rho_0 Q...Q routes disagree");
#endif
  return chain;
}

/// Q_0' f = (1/n) sum_j f(x_1, ..., x_j omitted, ..., x_n): n-1 slots in, n out.
inline MultiPoly Q0prime_apply(const MultiPoly& f) {
  const std::size_t n = f.arity() + 1;
  MultiPoly out(n);
  Rational w = Rational(1) / static_cast<long>(n);
  for (std::size_t omit = 0; omit < n; ++omit) {
    std::vector<std::size_t> target(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) target[i] = i < omit ? i : i + 1;
    out += remap_slots(f, target, default_names("x", n)) * w;
  }
  return out;
}

}  // namespace symfact::monomial

#endif  // SYMFACT_QOPS_MONOMIAL_HPP
