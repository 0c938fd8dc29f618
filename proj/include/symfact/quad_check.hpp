#ifndef SYMFACT_QUAD_CHECK_HPP
#define SYMFACT_QUAD_CHECK_HPP

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "symfact/determinant.hpp"
#include "symfact/errors.hpp"
#include "symfact/multipoly.hpp"
#include "symfact/partition.hpp"
#include "symfact/qops_schur.hpp"
#include "symfact/rational.hpp"
#include "symfact/sym_bases.hpp"

namespace symfact::quad {

struct QuadratureResult {
  double value = 0.0;
  double errorEstimate = 0.0;
  std::size_t evaluations = 0;
};

struct Settings {
  double relTolerance = 1e-12;
  unsigned maxDepth = 25;
  /// Enforce the last integration variable's lower bound (x_n > y_n).
  bool tailIndicator = true;
};

/// Integral of integrand(x_1..x_k) * delta(x_1 ... x_k - product) over
/// lower[i] < x_i < upper[i] (i < k) and x_k > tail. The delta is removed
/// analytically: x_k = product / (x_1 ... x_{k-1}), Jacobian 1/(x_1 ... x_{k-1}).
struct DeltaProblem {
  MultiPoly integrand;
  double product = 0.0;
  std::vector<double> lower;
  std::vector<double> upper;
  double tail = 0.0;
};

namespace detail {

using Laurent = std::map<std::vector<int>, double>;

inline double ipow(double x, int p) {
  if (p >= 0) {
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= x;
    return r;
  }
  return 1.0 / ipow(x, -p);
}

/// Antiderivative of x^p.
inline double antiderivative(double x, int p) {
  return p == -1 ? std::log(x) : ipow(x, p + 1) / static_cast<double>(p + 1);
}

inline Laurent eliminate_delta(const MultiPoly& f, double product) {
  const std::size_t k = f.arity();
  Laurent out;
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> free(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) free[i] = e[i] - e[k - 1] - 1;
    out[free] += to_double(c) * ipow(product, e[k - 1]);
  }
  return out;
}

}  // namespace detail

inline QuadratureResult integrate_delta(const DeltaProblem& problem, const Settings& settings = {}) {
  const std::size_t k = problem.integrand.arity();
  if (k == 0) throw QuadratureError("delta integral needs at least one variable");
  const std::size_t m = k - 1;
  if (problem.lower.size() != m || problem.upper.size() != m)
    throw QuadratureError("bounds must cover every free variable");
  for (std::size_t i = 0; i < m; ++i)
    if (!(problem.lower[i] < problem.upper[i])) throw QuadratureError("integration bounds are not increasing");
  const double eps = std::numeric_limits<double>::epsilon();
  auto laurent = detail::eliminate_delta(problem.integrand, problem.product);
  QuadratureResult result;

  if (m == 0) {
    if (settings.tailIndicator && !(problem.product > problem.tail)) return result;
    double mag = 0.0;
    for (const auto& [e, c] : laurent) {
      result.value += c;
      mag += std::abs(c);
    }
    result.errorEstimate = eps * mag;
    result.evaluations = 1;
    return result;
  }

  // The eliminated variable exceeds `tail` iff x_1 ... x_m < product / tail.
  const double cap = problem.product / problem.tail;

  if (m == 1) {
    const double lo = problem.lower[0];
    double hi = problem.upper[0];
    if (settings.tailIndicator) hi = std::min(hi, cap);
    if (!(hi > lo)) return result;
    double mag = 0.0;
    for (const auto& [e, c] : laurent) {
      double a = detail::antiderivative(hi, e[0]), b = detail::antiderivative(lo, e[0]);
      result.value += c * (a - b);
      mag += std::abs(c) * (std::abs(a) + std::abs(b));
    }
    result.errorEstimate = 4 * eps * mag;
    result.evaluations = 1;
    return result;
  }

  if (m == 2) {
    // Inner variable v = x_2 integrated in closed form; outer u = x_1 adaptively.
    std::map<int, std::vector<std::pair<int, double>>> by_u;
    for (const auto& [e, c] : laurent) by_u[e[0]].emplace_back(e[1], c);
    const double lo2 = problem.lower[1], hi2 = problem.upper[1];
    std::size_t evaluations = 0;
    auto inner = [&](double u) {
      ++evaluations;
      double vmax = hi2;
      if (settings.tailIndicator) vmax = std::min(vmax, cap / u);
      if (!(vmax > lo2)) return 0.0;
      double acc = 0.0;
      for (const auto& [p, terms] : by_u) {
        double s = 0.0;
        for (const auto& [q, c] : terms) s += c * (detail::antiderivative(vmax, q) - detail::antiderivative(lo2, q));
        acc += detail::ipow(u, p) * s;
      }
      return acc;
    };
    std::vector<double> cuts{problem.lower[0], problem.upper[0]};
    if (settings.tailIndicator) {
      for (double b : {cap / hi2, cap / lo2})
        if (b > problem.lower[0] && b < problem.upper[0]) cuts.push_back(b);
    }
    std::sort(cuts.begin(), cuts.end());
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      if (!(cuts[i + 1] > cuts[i])) continue;
      double error = 0.0, l1 = 0.0;
      double piece = GK::integrate(inner, cuts[i], cuts[i + 1], settings.maxDepth, settings.relTolerance, &error, &l1);
      if (!std::isfinite(piece)) throw QuadratureError("adaptive quadrature produced a non-finite value");
      if (error > 1e3 * settings.relTolerance * std::max(l1, 1.0))
        throw QuadratureError("adaptive quadrature did not converge on [" + std::to_string(cuts[i]) + ", " +
                              std::to_string(cuts[i + 1]) + "], error estimate " + std::to_string(error));
      result.value += piece;
      result.errorEstimate += error;
    }
    result.evaluations = evaluations;
    return result;
  }

  throw QuadratureError("delta integrals are supported for at most three variables");
}

inline std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  for (const auto& r : v) out.push_back(to_double(r));
  return out;
}

inline void require_increasing(const std::vector<Rational>& y, const Rational& floor, const char* what) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!(y[i] > (i == 0 ? floor : y[i - 1])))
      throw QuadratureError(std::string(what) + " must be strictly increasing and above " + to_string(floor));
  }
}

// ---------------------------------------------------------------------------
// Q_z integral

enum class Convention { Reciprocal, Printed, None, Both };

inline std::string to_string(Convention c) {
  switch (c) {
    case Convention::Reciprocal: return "(z-1)^-(n-1)";
    case Convention::Printed: return "(z-1)^+(n-1)";
    case Convention::None: return "none";
    case Convention::Both: return "ambiguous";
  }
  return "?";
}

struct QIntegral {
  QuadratureResult integral;  // bare integral of delta * Delta_n(x) f(x)
  double reciprocal = 0.0;    // (n-1)! (z-1)^{-(n-1)} / Delta_n(y) * integral
  double printed = 0.0;       // (n-1)! (z-1)^{+(n-1)} / Delta_n(y) * integral
  double oracle = 0.0;        // [Q_z f](y) from the spectral definition
  double relErrReciprocal = 0.0;
  double relErrPrinted = 0.0;
  Convention matching = Convention::None;
};

inline double rel_err(double computed, double oracle) {
  double d = std::abs(computed - oracle);
  return oracle == 0.0 ? d : d / std::abs(oracle);
}

/// Q_z domain: y_i < x_i < y_{i+1} for i < n, x_n > y_n.
inline DeltaProblem q_domain(MultiPoly integrand, const std::vector<Rational>& y, const Rational& z) {
  const std::size_t n = y.size();
  DeltaProblem p;
  p.integrand = std::move(integrand);
  Rational prod = z;
  for (const auto& v : y) prod *= v;
  p.product = to_double(prod);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    p.lower.push_back(to_double(y[i]));
    p.upper.push_back(to_double(y[i + 1]));
  }
  p.tail = to_double(y[n - 1]);
  return p;
}

inline void validate_q_inputs(std::size_t n, const std::vector<Rational>& y, const Rational& z) {
  if (y.size() != n || n == 0) throw QuadratureError("need one y value per variable");
  require_increasing(y, Rational(0), "y");
  if (!(z > 1)) throw QuadratureError("the Q_z integral needs z > 1");
}

/// Bare integral of delta(x_1 ... x_n - z y_1 ... y_n) g(x) over the Q_z domain.
inline QuadratureResult integrate_over_q_domain(const MultiPoly& g, const std::vector<Rational>& y,
                                                const Rational& z, const Settings& s = {}) {
  validate_q_inputs(g.arity(), y, z);
  return integrate_delta(q_domain(g, y, z), s);
}

/// Q_z f at y by the delta-constrained integral, under both prefactor
/// conventions, against the spectral oracle.
inline QIntegral integral_Q(const MultiPoly& f, const Rational& z, const std::vector<Rational>& y,
                            const Settings& s = {}, double tolerance = 1e-10) {
  const std::size_t n = f.arity();
  validate_q_inputs(n, y, z);
  if (!is_symmetric(f)) throw NotSymmetric("integral_Q needs a symmetric polynomial");
  QIntegral out;
  out.integral = integrate_delta(q_domain(vandermonde(n) * f, y, z), s);
  double dy = to_double(vandermonde_value(std::span<const Rational>(y)));
  double fact = to_double(factorial(static_cast<int>(n) - 1));
  double zm1 = to_double(pow(z - 1, static_cast<int>(n) - 1));
  out.reciprocal = fact / zm1 / dy * out.integral.value;
  out.printed = fact * zm1 / dy * out.integral.value;

  MultiPoly qf = schur::Q_apply(f);
  std::vector<Rational> point(y);
  point.push_back(z);
  out.oracle = to_double(evaluate(qf, std::span<const Rational>(point)));
  out.relErrReciprocal = rel_err(out.reciprocal, out.oracle);
  out.relErrPrinted = rel_err(out.printed, out.oracle);
  bool r = out.relErrReciprocal <= tolerance, p = out.relErrPrinted <= tolerance;
  out.matching = r && p ? Convention::Both : r ? Convention::Reciprocal : p ? Convention::Printed : Convention::None;
  return out;
}

/// Core identity behind the Q_z integral: the integral of delta * a_mu(x)
/// over the Q_z domain, with oracle a_mu(y) phi_lambda(z).
struct CoreIdentity {
  QuadratureResult integral;
  double oracle = 0.0;
  double relErr = 0.0;
};

inline CoreIdentity core_identity(const Partition& lambda, const Rational& z, const std::vector<Rational>& y,
                                  const Settings& s = {}) {
  auto mu = lambda.staircase_shift();
  CoreIdentity out;
  out.integral = integrate_over_q_domain(alternant(mu.parts()), y, z, s);
  Rational exact = evaluate(alternant(mu.parts()), std::span<const Rational>(y)) * schur::phi_lambda(lambda).phi(z);
  out.oracle = to_double(exact);
  out.relErr = rel_err(out.integral.value, out.oracle);
  return out;
}

// ---------------------------------------------------------------------------
// A_k integral

/// [A_k f](y~) by the delta-constrained integral over
/// 1 < x~_1 < y~_1 < x~_2 < ... < y~_{k-1} < x~_k, prefactor included.
/// f is symmetric in k variables; n is the total number of variables.
inline QuadratureResult integral_A(std::size_t k, std::size_t n, const MultiPoly& f, const Rational& z,
                                   const std::vector<Rational>& ytilde, const Settings& s = {}) {
  if (k < 1 || k > n) throw QuadratureError("integral_A needs 1 <= k <= n");
  if (f.arity() != k) throw QuadratureError("integrand must have k variables");
  if (ytilde.size() + 1 != k) throw QuadratureError("need k-1 values of y~");
  require_increasing(ytilde, Rational(1), "y~");
  if (!(z > 1)) throw QuadratureError("the A_k integral needs z_k > 1");
  const int ni = static_cast<int>(n), ki = static_cast<int>(k);

  MultiPoly integrand = vandermonde(k) * f;
  for (std::size_t j = 0; j < k; ++j)
    integrand = integrand * pow(MultiPoly::variable(k, j) - MultiPoly::constant(k, 1), ni - ki);

  DeltaProblem p;
  p.integrand = integrand;
  Rational prod = z;
  for (const auto& v : ytilde) prod *= v;
  p.product = to_double(prod);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    p.lower.push_back(i == 0 ? 1.0 : to_double(ytilde[i - 1]));
    p.upper.push_back(to_double(ytilde[i]));
  }
  p.tail = k == 1 ? 1.0 : to_double(ytilde.back());
  QuadratureResult r = integrate_delta(p, s);

  Rational pref = factorial(ni - 1) / factorial(ni - ki) / pow(z - 1, ni - 1) /
                  vandermonde_value(std::span<const Rational>(ytilde));
  for (const auto& v : ytilde) pref /= pow(v - 1, ni - ki + 1);
  if ((ki - 1) % 2 == 1) pref = -pref;
  double pd = to_double(pref);
  r.value *= pd;
  r.errorEstimate *= std::abs(pd);
  return r;
}

/// Exact right side of A_k: s-bar_lambda(x_1..x_k, 1, ..., 1) ->
/// s-bar_lambda(y~_1..y~_{k-1}, 1, ..., 1) q_lambda(z_k).
inline Rational actAP_oracle(const Partition& lambda, std::size_t k, const Rational& z,
                             const std::vector<Rational>& ytilde) {
  MultiPoly sbar = schur_poly(lambda).normalized;
  std::vector<Rational> point(lambda.size(), Rational(1));
  for (std::size_t i = 0; i + 1 < k; ++i) point[i] = ytilde[i];
  return evaluate(sbar, std::span<const Rational>(point)) * schur::q(lambda)(z);
}

/// s-bar_lambda(x_1..x_k, 1, ..., 1) as a polynomial in k variables.
inline MultiPoly restricted_normalized_schur(const Partition& lambda, std::size_t k) {
  MultiPoly sbar = schur_poly(lambda).normalized;
  std::vector<std::size_t> rest, keep;
  for (std::size_t s = 0; s < lambda.size(); ++s) (s < k ? keep : rest).push_back(s);
  return project(specialize(sbar, rest, Rational(1)), keep);
}

// ---------------------------------------------------------------------------
// Q_0' integral

/// (-1)^{n-1} (n-1)!/Delta_n(y) * integral over y_i < x_i < y_{i+1} of
/// Delta_{n-1}(x') f(x'); each row integrated by its antiderivative.
inline QuadratureResult integral_Q0prime(const MultiPoly& f, const std::vector<Rational>& y) {
  const std::size_t n = f.arity() + 1;
  if (y.size() != n) throw QuadratureError("need n values of y");
  require_increasing(y, Rational(0), "y");
  MultiPoly integrand = vandermonde(n - 1) * f;
  auto yd = to_doubles(y);
  QuadratureResult r;
  double mag = 0.0;
  for (const auto& [e, c] : integrand.terms()) {
    double t = to_double(c);
    for (std::size_t i = 0; i + 1 < n; ++i)
      t *= (detail::ipow(yd[i + 1], e[i] + 1) - detail::ipow(yd[i], e[i] + 1)) / (e[i] + 1);
    r.value += t;
    mag += std::abs(t);
  }
  double pref = to_double(factorial(static_cast<int>(n) - 1) / vandermonde_value(std::span<const Rational>(y)));
  if ((n - 1) % 2 == 1) pref = -pref;
  r.value *= pref;
  r.errorEstimate = 8 * std::numeric_limits<double>::epsilon() * mag * std::abs(pref);
  r.evaluations = integrand.size();
  return r;
}

// ---------------------------------------------------------------------------
// Determinant identities used by the integral proofs

/// Border identity for an n x (n-1) matrix t whose columns are indexed by
/// {1..n} minus {k}:
///   det[t_{i+1}^j - t_i^j] = (-1)^{k-1} det[t_i^j with column k := 1].
struct BorderIdentity {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

inline BorderIdentity matrix_identity_check(std::size_t k, const Matrix<Rational>& t) {
  const std::size_t n = t.size();
  if (n < 1 || k < 1 || k > n) throw StructuralError("border identity needs 1 <= k <= n");
  for (const auto& row : t)
    if (row.size() + 1 != n) throw StructuralError("border identity needs n rows of n-1 entries");
  Matrix<Rational> diff(n - 1, std::vector<Rational>(n - 1));
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) diff[i][j] = t[i + 1][j] - t[i][j];
  Matrix<Rational> full(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t src = 0;
    for (std::size_t j = 0; j < n; ++j) full[i][j] = (j + 1 == k) ? Rational(1) : t[i][src++];
  }
  Rational rhs = determinant(full);
  if ((k - 1) % 2 == 1) rhs = -rhs;
  return {determinant(diff), rhs};
}

/// integral over v_i < u_i < v_{i+1} (i = 1..m) of Delta_m(u) versus
/// (-1)^m / m! * Delta_{m+1}(v); m = v.size() - 1. Exact.
struct DeltaIntegralIdentity {
  Rational lhs;
  Rational rhs;
  bool holds() const { return lhs == rhs; }
};

inline DeltaIntegralIdentity delta_integral_identity(const std::vector<Rational>& v) {
  if (v.empty()) throw StructuralError("need at least one v value");
  const std::size_t m = v.size() - 1;
  MultiPoly d = vandermonde(m);
  Rational lhs(0);
  for (const auto& [e, c] : d.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m; ++i) t *= (pow(v[i + 1], e[i] + 1) - pow(v[i], e[i] + 1)) / (e[i] + 1);
    lhs += t;
  }
  Rational rhs = vandermonde_value(std::span<const Rational>(v)) / factorial(static_cast<int>(m));
  if (m % 2 == 1) rhs = -rhs;
  return {lhs, rhs};
}

}  // namespace symfact::quad

#endif  // SYMFACT_QUAD_CHECK_HPP
