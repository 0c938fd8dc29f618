#ifndef SYMFACT_SPECTRAL_HPP
#define SYMFACT_SPECTRAL_HPP

#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "symfact/multipoly.hpp"
#include "symfact/partition.hpp"
#include "symfact/sym_bases.hpp"
#include "symfact/unipoly.hpp"

namespace symfact {

using EigenvalueFn = std::function<UniPoly(const Partition&)>;

/// Names for the output of an operator that appends one new variable slot.
inline std::vector<std::string> names_plus(const MultiPoly& f, const std::string& extra) {
  auto names = f.names();
  names.push_back(extra);
  return names;
}

/// Joins polynomials in the first n slots, keyed by parameter exponents, back
/// into one polynomial with the parameter slots after the first n.
inline MultiPoly join_parameters(const std::map<Exponents, MultiPoly>& slices, std::size_t n,
                                 std::vector<std::string> names) {
  MultiPoly out(std::move(names));
  for (const auto& [key, poly] : slices) {
    for (const auto& [e, c] : poly.terms()) {
      Exponents t(e.begin(), e.begin() + static_cast<long>(n));
      t.insert(t.end(), key.begin(), key.end());
      t.insert(t.end(), e.begin() + static_cast<long>(n), e.end());
      out.add_term(std::move(t), c);
    }
  }
  return out;
}

/// An operator defined by its eigenbasis and eigenvalue polynomials:
/// P_lambda -> q_lambda(z) P_lambda, applied by expand / scale / reassemble.
///
/// Input layout: slots [x_1..x_n, parameters...]; the symmetric variables are
/// the first n slots. Output appends the slot z at the end.
struct DiagonalOperator {
  Basis basis;
  EigenvalueFn eigenvalue;

  MultiPoly apply(const MultiPoly& f, std::size_t n, const std::string& z_name = "z") const {
    BasisCache cache(basis);
    std::map<Exponents, MultiPoly> out_slices;
    for (const auto& [key, slice] : slice_parameters(f, n)) {
      auto expansion = expand_in_basis(slice, basis, cache);
      MultiPoly acc(n + 1);
      for (const auto& [lambda, c] : expansion.coeffs) {
        MultiPoly q = to_multipoly(eigenvalue(lambda), n + 1, n);
        acc += extend_arity(cache.get(lambda).raw, {"z"}) * q * c;
      }
      out_slices.emplace(key, std::move(acc));
    }
    return join_parameters(out_slices, n, names_plus(f, z_name));
  }
};

/// Spectral separation: sum_lambda c_lambda P_lambda(1) prod_j q_lambda(z_j).
inline MultiPoly separate_spectral(const MultiPoly& f, Basis basis, const EigenvalueFn& q) {
  const std::size_t n = f.arity();
  BasisCache cache(basis);
  auto expansion = expand_in_basis(f, basis, cache);
  MultiPoly out(default_names("z", n));
  for (const auto& [lambda, c] : expansion.coeffs) {
    UniPoly ql = q(lambda);
    MultiPoly prod = MultiPoly::constant(n, c * cache.get(lambda).valueAtOne);
    for (std::size_t j = 0; j < n; ++j) prod = prod * to_multipoly(ql, n, j);
    out += prod;
  }
  return out;
}

/// rho_0 Q_{z_1} ... Q_{z_n} f for any Q that appends a z slot to an input laid
/// out as [x_1..x_n, parameters...]. Output slots are (z_1..z_n).
inline MultiPoly separate_by_q_composition(
    const MultiPoly& f, const std::function<MultiPoly(const MultiPoly&, const std::string&)>& q_apply) {
  const std::size_t n = f.arity();
  MultiPoly g = f;
  // Q_{z_n} acts first, so slots are appended as z_n, z_{n-1}, ..., z_1.
  for (std::size_t i = n; i >= 1; --i) g = q_apply(g, "z" + std::to_string(i));
  std::vector<std::size_t> x_slots(n);
  std::iota(x_slots.begin(), x_slots.end(), std::size_t{0});
  g = specialize(g, x_slots, Rational(1));
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j) keep.push_back(2 * n - 1 - j);  // z_1 .. z_n
  return project(g, keep);
}

/// rho_k: sets x_{k+1}, ..., x_n (0-based slots k..n-1) to 1; arity unchanged.
inline MultiPoly rho(const MultiPoly& f, std::size_t k, std::size_t n) {
  std::vector<std::size_t> slots;
  for (std::size_t s = k; s < n; ++s) slots.push_back(s);
  return specialize(f, slots, Rational(1));
}

}  // namespace symfact

#endif  // SYMFACT_SPECTRAL_HPP
