#ifndef SYMFACT_RATIONAL_HPP
#define SYMFACT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symfact {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw std::invalid_argument("empty rational");
  s = s.substr(first, last - first + 1);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& p) {
    if (p.empty()) return false;
    std::size_t i = (p[0] == '-' || p[0] == '+') ? 1 : 0;
    if (i == p.size()) return false;
    for (; i < p.size(); ++i)
      if (p[i] < '0' || p[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational: " + std::string(text));
  if (num[0] == '+') num.erase(0, 1);
  BigInt n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// "p/q" with q omitted when it is 1.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline double to_double(const Rational& r) { return r.get_d(); }

/// a/b in lowest terms.
inline Rational ratio(long a, long b) {
  if (b == 0) throw std::domain_error("zero denominator");
  Rational r(a, b);
  r.canonicalize();
  return r;
}

inline Rational factorial(int n) {
  BigInt acc = 1;
  for (int i = 2; i <= n; ++i) acc *= i;
  return Rational(acc);
}

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

inline Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  Rational acc(1), b(base);
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) acc *= b;
    if (e > 1) b *= b;
  }
  return acc;
}

/// j-th elementary symmetric function of a list of numbers; e_0 = 1.
inline Rational elementary_value(std::span<const Rational> values, int j) {
  std::vector<Rational> e(values.size() + 1, Rational(0));
  e[0] = 1;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t r = i + 1; r >= 1; --r) e[r] += e[r - 1] * values[i];
  if (j < 0 || static_cast<std::size_t>(j) > values.size()) return Rational(0);
  return e[j];
}

inline Rational elementary_value(const std::vector<int>& values, int j) {
  std::vector<Rational> v(values.begin(), values.end());
  return elementary_value(std::span<const Rational>(v), j);
}

}  // namespace symfact

#endif  // SYMFACT_RATIONAL_HPP
