// symfact: bases, factorizing operators and identity checks from the shell.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "symfact/symfact.hpp"

using namespace symfact;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = std::string::npos;
  }
  if (s.empty() || used != s.size()) throw UsageError("not an integer: '" + s + "'");
  return v;
}

/// "3,1,0": weakly decreasing nonnegative integers; unsorted input is rejected.
Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  for (const auto& tok : split(text, ',')) parts.push_back(parse_int(tok));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw UsageError("partition parts must be nonnegative: " + text);
    if (i > 0 && parts[i] > parts[i - 1]) throw UsageError("partition must be weakly decreasing: " + text);
  }
  return Partition(parts);
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& tok : split(text, ',')) {
    try {
      out.push_back(parse_rational(tok));
    } catch (const std::exception& ex) {
      throw UsageError("bad rational '" + tok + "': " + ex.what());
    }
  }
  return out;
}

Rational parse_one_rational(const std::string& text) {
  auto v = parse_rationals(text);
  if (v.size() != 1) throw UsageError("expected one rational: " + text);
  return v[0];
}

/// Inline JSON, '-' for stdin, or a file path.
MultiPoly read_polynomial(const std::string& source) {
  std::string text;
  if (!source.empty() && source.front() == '{') {
    text = source;
  } else if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(source);
    if (!in) throw UsageError("cannot open " + source);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& ex) {
    throw UsageError(std::string("invalid JSON: ") + ex.what());
  }
  try {
    return multipoly_from_json(j);
  } catch (const StructuralError& ex) {
    throw UsageError(ex.what());
  }
}

void check_length(const Partition& lambda, std::optional<std::size_t> n, std::size_t expected_offset = 0) {
  if (n && lambda.size() + expected_offset != *n)
    throw UsageError("lambda has " + std::to_string(lambda.size()) + " parts, expected " +
                     std::to_string(*n - expected_offset));
}

struct Output {
  std::string format = "json";

  void emit(const json& j, const std::string& table) const {
    if (format == "json")
      std::cout << j.dump(2) << "\n";
    else
      std::cout << table;
  }
};

std::string poly_table(const MultiPoly& f) {
  std::string vars;
  for (std::size_t i = 0; i < f.names().size(); ++i) vars += (i ? ", " : "") + f.names()[i];
  return "vars: " + vars + "\n" + to_string(f) + "\n";
}

// ---------------------------------------------------------------------------

struct SourceArgs {
  std::string basis = "s";
  std::string lambda;
  std::string input;
  std::optional<std::size_t> n;
};

void add_source(CLI::App* cmd, SourceArgs& a, const std::string& what) {
  cmd->add_option("--basis,--kind", a.basis, "m, E or s")->check(CLI::IsMember({"m", "M", "e", "E", "s", "S"}));
  auto* l = cmd->add_option("--lambda", a.lambda, "partition, e.g. 2,1,0");
  if (!what.empty()) {
    auto* i = cmd->add_option("--input", a.input, what + " as JSON: inline, '-' for stdin, or a file");
    l->excludes(i);
  }
  cmd->add_option("--n", a.n, "number of variables; must match lambda");
}

const verify::BasisOps& ops_for(Basis b) {
  for (const auto& o : verify::all_bases())
    if (o.basis == b) return o;
  throw std::logic_error("no operator table for basis");
}

MultiPoly source_poly(const SourceArgs& a, std::size_t offset = 0) {
  if (!a.input.empty()) {
    MultiPoly f = read_polynomial(a.input);
    if (a.n && f.arity() + offset != *a.n) throw UsageError("input arity does not match --n");
    return f;
  }
  if (a.lambda.empty()) throw UsageError("give --lambda or --input");
  Partition lambda = parse_partition(a.lambda);
  check_length(lambda, a.n, offset);
  return basis_poly(parse_basis(a.basis), lambda).normalized;
}

int cmd_basis(const SourceArgs& a, bool normalized, const Output& out) {
  if (a.lambda.empty()) throw UsageError("--lambda is required");
  Partition lambda = parse_partition(a.lambda);
  check_length(lambda, a.n);
  Basis b = parse_basis(a.basis);
  auto p = basis_poly(b, lambda);
  const MultiPoly& f = normalized ? p.normalized : p.raw;
  out.emit(to_json(f), poly_table(f));
  return kOk;
}

int cmd_apply_q(const SourceArgs& a, const std::string& z, const Output& out) {
  Basis b = parse_basis(a.basis);
  MultiPoly f = source_poly(a);
  if (!is_symmetric(f)) throw UsageError("Q_z needs a symmetric polynomial");
  MultiPoly g = ops_for(b).Q(f, f.arity(), z);
  json j{{"basis", basis_tag(b)}, {"result", to_json(g)}};
  std::string table = poly_table(g);
  if (!a.lambda.empty()) {
    Partition lambda = parse_partition(a.lambda);
    UniPoly q = ops_for(b).q(lambda);
    j["q"] = to_json(q);
    table = "q(" + z + ") = " + to_string(q, z) + "\n" + table;
  }
  out.emit(j, table);
  return kOk;
}

MultiPoly separate(Basis b, const MultiPoly& f) {
  switch (b) {
    case Basis::Monomial: return monomial::S_apply(f);
    case Basis::Elementary: return elementary::S_apply(f);
    case Basis::Schur: return schur::S_apply(f);
  }
  throw std::logic_error("unknown basis");
}

int cmd_separate(const SourceArgs& a, const Output& out) {
  Basis b = parse_basis(a.basis);
  MultiPoly f = source_poly(a);
  if (!is_symmetric(f)) throw UsageError("S_n needs a symmetric polynomial");
  MultiPoly g = separate(b, f);
  json j{{"basis", basis_tag(b)}};
  std::string table;
  if (!a.lambda.empty()) {
    Partition lambda = parse_partition(a.lambda);
    UniPoly q = ops_for(b).q(lambda);
    j["lambda"] = to_json(lambda);
    j["q"] = to_json(q);
    table = "q(z) = " + to_string(q, "z") + "\n";
  }
  j["product"] = to_json(g);
  out.emit(j, table + poly_table(g));
  return kOk;
}

int cmd_invert(const SourceArgs& a, const Output& out) {
  MultiPoly g;
  if (!a.input.empty()) {
    g = read_polynomial(a.input);
    if (a.n && g.arity() != *a.n) throw UsageError("input arity does not match --n");
  } else {
    if (a.lambda.empty()) throw UsageError("give --lambda or --input");
    Partition lambda = parse_partition(a.lambda);
    check_length(lambda, a.n);
    g = verify::separated_product(schur::q(lambda), lambda.size());
  }
  MultiPoly f = schur::S_inverse_apply(g);
  out.emit(json{{"input", to_json(g)}, {"result", to_json(f)}}, poly_table(f));
  return kOk;
}

int cmd_lift(const SourceArgs& a, const Output& out) {
  Basis b = parse_basis(a.basis);
  MultiPoly f = source_poly(a, 1);
  if (!is_symmetric(f)) throw UsageError("Q_0' needs a symmetric polynomial");
  MultiPoly g = ops_for(b).Q0prime(f);
  out.emit(json{{"basis", basis_tag(b)}, {"result", to_json(g)}}, poly_table(g));
  return kOk;
}

json record_json(const verify::Record& r) {
  json j{{"identity", r.identity}, {"n", r.n},           {"lambda", r.lambda},
         {"params", r.params},     {"oracle", r.oracle}, {"computed", r.computed}};
  j["relErr"] = r.relErr ? json(*r.relErr) : json(nullptr);
  j["convention"] = r.convention;
  j["pass"] = r.pass;
  return j;
}

std::string record_line(const verify::Record& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS " : "FAIL ") << r.identity << " n=" << r.n;
  if (!r.lambda.empty()) s << " lambda=" << to_string(Partition(r.lambda));
  if (!r.params.empty()) s << " " << r.params;
  if (r.relErr) s << " relErr=" << *r.relErr;
  if (!r.convention.empty()) s << " convention=" << r.convention;
  return s.str();
}

int cmd_verify(const std::string& suite, const verify::Options& opt, const Output& out) {
  auto report = verify::run_suite(suite, opt);
  json records = json::array();
  std::string table;
  for (const auto& r : report.records) {
    records.push_back(record_json(r));
    table += record_line(r) + "\n";
  }
  json j{{"suite", suite},
         {"n", opt.n},
         {"maxWeight", opt.maxWeight},
         {"seed", opt.seed},
         {"checked", report.records.size()},
         {"failures", report.failures()},
         {"passed", report.passed()}};
  j["firstFailure"] = report.first_failure() ? record_json(*report.first_failure()) : json(nullptr);
  j["records"] = std::move(records);
  table += "suite " + suite + ": " + std::to_string(report.records.size()) + " checked, " +
           std::to_string(report.failures()) + " failed\n";
  if (const auto* f = report.first_failure())
    table += "first counterexample:\n  oracle:   " + f->oracle + "\n  computed: " + f->computed + "\n";
  out.emit(j, table);
  return report.passed() ? kOk : kFailure;
}

json quad_json(const quad::QuadratureResult& r) {
  return {{"value", r.value}, {"errorEstimate", r.errorEstimate}, {"evaluations", r.evaluations}};
}

struct QuadArgs {
  std::string identity = "q";
  std::string lambda;
  std::string y;
  std::string z = "3/2";
  std::size_t k = 0;
};

int cmd_quadrature(const QuadArgs& a, const Output& out) {
  if (a.lambda.empty()) throw UsageError("--lambda is required");
  Partition lambda = parse_partition(a.lambda);
  const std::size_t n = a.identity == "q0prime" ? lambda.size() + 1 : lambda.size();
  if (n < 2 || n > 3) throw UsageError("quadrature checks run at n = 2 or 3");
  std::vector<Rational> y = a.y.empty() ? std::vector<Rational>{} : parse_rationals(a.y);
  Rational z = parse_one_rational(a.z);
  const double tol = verify::quadrature_tolerance(n);
  json j{{"identity", a.identity}, {"n", n}, {"lambda", to_json(lambda)}};
  std::ostringstream table;
  table.precision(17);
  bool pass = false;

  if (a.identity == "q") {
    if (y.size() != n) throw UsageError("need " + std::to_string(n) + " y values");
    auto r = quad::integral_Q(schur_poly(lambda).normalized, z, y, {}, tol);
    j["integral"] = quad_json(r.integral);
    j["reciprocal"] = r.reciprocal;
    j["printed"] = r.printed;
    j["oracle"] = r.oracle;
    j["relErrReciprocal"] = r.relErrReciprocal;
    j["relErrPrinted"] = r.relErrPrinted;
    j["convention"] = quad::to_string(r.matching);
    pass = r.matching == quad::Convention::Reciprocal || r.matching == quad::Convention::Printed;
    table << "oracle      " << r.oracle << "\n(z-1)^-(n-1) " << r.reciprocal << "\n(z-1)^+(n-1) " << r.printed
          << "\nconvention  " << quad::to_string(r.matching) << "\n";
  } else if (a.identity == "core") {
    if (y.size() != n) throw UsageError("need " + std::to_string(n) + " y values");
    auto c = quad::core_identity(lambda, z, y);
    j["integral"] = quad_json(c.integral);
    j["oracle"] = c.oracle;
    j["relErr"] = c.relErr;
    pass = c.relErr <= tol;
    table << "oracle   " << c.oracle << "\nintegral " << c.integral.value << "\nrelErr   " << c.relErr << "\n";
  } else if (a.identity == "a") {
    std::size_t k = a.k == 0 ? n : a.k;
    if (k > n) throw UsageError("k must not exceed n");
    if (y.size() + 1 != k) throw UsageError("need k-1 values of y~");
    auto r = quad::integral_A(k, n, quad::restricted_normalized_schur(lambda, k), z, y);
    double oracle = to_double(quad::actAP_oracle(lambda, k, z, y));
    double err = quad::rel_err(r.value, oracle);
    j["k"] = k;
    j["integral"] = quad_json(r);
    j["oracle"] = oracle;
    j["relErr"] = err;
    pass = err <= tol;
    table << "oracle   " << oracle << "\nintegral " << r.value << "\nrelErr   " << err << "\n";
  } else if (a.identity == "q0prime") {
    if (y.size() != n) throw UsageError("need " + std::to_string(n) + " y values");
    auto r = quad::integral_Q0prime(schur_poly(lambda).normalized, y);
    double oracle = to_double(evaluate(schur_poly(lambda.append_zero()).normalized, std::span<const Rational>(y)));
    double err = quad::rel_err(r.value, oracle);
    j["integral"] = quad_json(r);
    j["oracle"] = oracle;
    j["relErr"] = err;
    pass = err <= 1e-10;
    table << "oracle   " << oracle << "\nintegral " << r.value << "\nrelErr   " << err << "\n";
  } else {
    throw UsageError("unknown identity: " + a.identity);
  }
  j["pass"] = pass;
  out.emit(j, table.str());
  return pass ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric polynomial bases and factorizing operators"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  std::uint64_t seed = 1;
  app.add_option("--format", out.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", seed, "seed for random instances");

  SourceArgs basis_args, q_args, sep_args, inv_args, lift_args;
  bool normalized = false;
  auto* basis = app.add_subcommand("basis", "print a basis polynomial");
  add_source(basis, basis_args, "");
  basis->add_flag("--normalized", normalized, "divide by the value at (1,...,1)");

  std::string z_name = "z";
  auto* apply_q = app.add_subcommand("apply-q", "apply Q_z");
  add_source(apply_q, q_args, "symmetric polynomial");
  apply_q->add_option("--z-name", z_name, "name of the appended variable");

  auto* sep = app.add_subcommand("separate", "apply the separating operator S_n");
  add_source(sep, sep_args, "symmetric polynomial");

  auto* inv = app.add_subcommand("invert", "apply S_n^-1 (Schur case)");
  add_source(inv, inv_args, "polynomial in z_1..z_n");

  auto* lift = app.add_subcommand("lift", "apply the lifting operator Q_0'");
  add_source(lift, lift_args, "symmetric polynomial in n-1 variables");

  std::string suite = "all";
  verify::Options vopt;
  auto* ver = app.add_subcommand("verify", "run an identity suite");
  ver->add_option("--suite", suite, "eigen, chain, inverse, ode, lifting, quadrature or all")
      ->check(CLI::IsMember(verify::suite_names()));
  ver->add_option("--max-weight", vopt.maxWeight, "largest |lambda|")->check(CLI::Range(0, 12));
  ver->add_option("--n", vopt.n, "number of variables")->check(CLI::Range(1, 6));
  ver->add_option("--samples", vopt.samples, "random instances for property checks");

  QuadArgs qa;
  auto* qd = app.add_subcommand("quadrature", "check an integral representation numerically");
  qd->add_option("--identity", qa.identity, "q, core, a or q0prime")
      ->check(CLI::IsMember({"q", "core", "a", "q0prime"}));
  qd->add_option("--lambda", qa.lambda, "partition")->required();
  qd->add_option("--y", qa.y, "comma-separated rationals");
  qd->add_option("--z", qa.z, "rational z > 1");
  qd->add_option("--k", qa.k, "chain index for --identity a (default n)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  vopt.seed = seed;

  try {
    if (*basis) return cmd_basis(basis_args, normalized, out);
    if (*apply_q) return cmd_apply_q(q_args, z_name, out);
    if (*sep) return cmd_separate(sep_args, out);
    if (*inv) return cmd_invert(inv_args, out);
    if (*lift) return cmd_lift(lift_args, out);
    if (*ver) return cmd_verify(suite, vopt, out);
    if (*qd) return cmd_quadrature(qa, out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const StructuralError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotSymmetric& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const QuadratureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
