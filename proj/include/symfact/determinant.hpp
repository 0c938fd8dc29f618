#ifndef SYMFACT_DETERMINANT_HPP
#define SYMFACT_DETERMINANT_HPP

#include <cstddef>
#include <vector>

#include "symfact/errors.hpp"
#include "symfact/multipoly.hpp"
#include "symfact/rational.hpp"

namespace symfact {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) { return divide_exact(a, b); }

inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

inline Rational one_like(const Rational&) { return Rational(1); }
inline MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.arity(), 1); }

template <class T>
T laplace(const Matrix<T>& m, std::vector<std::size_t>& cols, std::size_t row, const T& zero) {
  if (cols.empty()) return zero + T(one_like(zero));
  T acc = zero;
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    const T& entry = m[row][cols[idx]];
    if (is_zero(entry)) continue;
    std::size_t col = cols[idx];
    cols.erase(cols.begin() + static_cast<long>(idx));
    T minor = laplace(m, cols, row + 1, zero);
    cols.insert(cols.begin() + static_cast<long>(idx), col);
    if (idx % 2 == 0) acc = acc + entry * minor;
    else acc = acc - entry * minor;
  }
  return acc;
}

/// Fraction-free Gaussian elimination; every division is exact.
template <class T>
T bareiss(Matrix<T> m, const T& zero) {
  const std::size_t n = m.size();
  T one = zero + T(one_like(zero));
  T prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t p = k + 1;
      while (p < n && is_zero(m[p][k])) ++p;
      if (p == n) return zero;
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_quotient(T(m[i][j] * m[k][k] - m[i][k] * m[k][j]), prev);
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  return negate ? zero - det : det;
}

}  // namespace detail

/// Exact determinant: cofactor expansion up to order 5, fraction-free
/// elimination above. `zero` fixes the ring (arity) for the 0x0 case.
template <class T>
T determinant(const Matrix<T>& m, const T& zero) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw StructuralError("determinant of a non-square matrix");
  if (m.size() <= 5) {
    std::vector<std::size_t> cols(m.size());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return detail::laplace(m, cols, 0, zero);
  }
  return detail::bareiss(m, zero);
}

inline Rational determinant(const Matrix<Rational>& m) { return determinant(m, Rational(0)); }

inline MultiPoly poly_det(const Matrix<MultiPoly>& m) {
  if (m.empty()) return MultiPoly::constant(0, 1);
  return determinant(m, MultiPoly(m[0][0].arity()));
}

/// Forces the elimination route regardless of order (used to cross-check the
/// two determinant algorithms against each other).
template <class T>
T determinant_bareiss(const Matrix<T>& m, const T& zero) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw StructuralError("determinant of a non-square matrix");
  if (m.empty()) return zero + detail::one_like(zero);
  return detail::bareiss(m, zero);
}

}  // namespace symfact

#endif  // SYMFACT_DETERMINANT_HPP
