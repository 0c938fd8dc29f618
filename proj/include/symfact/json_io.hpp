#ifndef SYMFACT_JSON_IO_HPP
#define SYMFACT_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "symfact/errors.hpp"
#include "symfact/multipoly.hpp"
#include "symfact/partition.hpp"
#include "symfact/rational.hpp"
#include "symfact/sym_bases.hpp"
#include "symfact/unipoly.hpp"

namespace symfact {

using json = nlohmann::ordered_json;

/// {"vars": [...], "terms": [{"e": [...], "c": "p/q"}, ...]}, terms in
/// descending grevlex order.
inline json to_json(const MultiPoly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"e", e}, {"c", to_string(c)}});
  return {{"vars", f.names()}, {"terms", std::move(terms)}};
}

inline MultiPoly multipoly_from_json(const json& j) {
  try {
    auto names = j.at("vars").get<std::vector<std::string>>();
    MultiPoly out(names);
    for (const auto& t : j.at("terms")) {
      auto e = t.at("e").get<Exponents>();
      if (e.size() != names.size()) throw StructuralError("term exponent length differs from vars");
      for (int v : e)
        if (v < 0) throw StructuralError("negative exponent");
      out.add_term(std::move(e), parse_rational(t.at("c").get<std::string>()));
    }
    return out;
  } catch (const json::exception& ex) {
    throw StructuralError(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

/// Univariate polynomial as ascending rational coefficient strings.
inline json to_json(const UniPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

inline json to_json(const Partition& p) { return p.parts(); }

inline Partition partition_from_json(const json& j) {
  try {
    return Partition(j.get<std::vector<int>>());
  } catch (const json::exception& ex) {
    throw StructuralError(std::string("malformed partition JSON: ") + ex.what());
  }
}

/// {"basis": "s", "n": 3, "coeffs": [{"lambda": [1,1,0], "c": "1"}, ...]}
inline json to_json(const SymExpansion& x) {
  json coeffs = json::array();
  for (const auto& [lambda, c] : x.coeffs) coeffs.push_back({{"lambda", lambda.parts()}, {"c", to_string(c)}});
  return {{"basis", basis_tag(x.basis)}, {"n", x.n}, {"coeffs", std::move(coeffs)}};
}

inline SymExpansion expansion_from_json(const json& j) {
  try {
    SymExpansion x;
    x.basis = parse_basis(j.at("basis").get<std::string>());
    x.n = j.at("n").get<std::size_t>();
    for (const auto& t : j.at("coeffs")) {
      Partition lambda = partition_from_json(t.at("lambda"));
      if (lambda.size() != x.n) throw StructuralError("partition length differs from n");
      x.coeffs[lambda] += parse_rational(t.at("c").get<std::string>());
    }
    std::erase_if(x.coeffs, [](const auto& kv) { return kv.second == 0; });
    return x;
  } catch (const json::exception& ex) {
    throw StructuralError(std::string("malformed expansion JSON: ") + ex.what());
  }
}

}  // namespace symfact

#endif  // SYMFACT_JSON_IO_HPP
