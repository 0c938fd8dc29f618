// One PASS/FAIL line per acceptance item; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "symfact/symfact.hpp"

using namespace symfact;

namespace {

constexpr double kRelTolN2 = 1e-10;
constexpr double kRelTolN3 = 1e-6;
constexpr std::size_t kMinTriples = 20;
constexpr std::size_t kInstances = 100;

struct Outcome {
  verify::Report report;
  std::string extra;
  bool ok = true;
};

verify::Options opts(std::size_t n, int w) {
  verify::Options o;
  o.n = n;
  o.maxWeight = w;
  o.seed = 20240601 + n;
  return o;
}

Outcome sweep(const std::function<verify::Report(const verify::Options&)>& fn, std::vector<std::size_t> ns, int w) {
  Outcome out;
  for (std::size_t n : ns) out.report.append(fn(opts(n, w)));
  return out;
}

Outcome quadrature() {
  Outcome out;
  std::size_t triples = 0;
  std::optional<std::string> convention;
  for (std::size_t n : {2u, 3u}) {
    auto o = opts(n, 4);
    o.triples = 24;
    auto r = verify::quadrature_checks(o);
    const double tol = n == 2 ? kRelTolN2 : kRelTolN3;
    for (const auto& rec : r.records) {
      if (rec.relErr && *rec.relErr > tol) out.ok = false;
      if (rec.identity == "Q_z integral") {
        ++triples;
        if (!convention) convention = rec.convention;
        if (rec.convention != *convention) out.ok = false;
      }
    }
    out.report.append(r);
  }
  if (triples < kMinTriples || !convention || *convention == "none" || *convention == "ambiguous") out.ok = false;
  out.extra = std::to_string(triples) + " Q_z triples, convention " + (convention ? *convention : "none");
  return out;
}

Outcome determinants() {
  Outcome out;
  for (std::size_t n : {2u, 3u, 4u}) {
    auto o = opts(n, 0);
    o.samples = kInstances;
    out.report.append(verify::determinant_checks(o));
  }
  return out;
}

}  // namespace

int main() {
  struct Item {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Item> items{
      {1, "eigenrelations (Q_z and H_j, three bases, n=2..4, |lambda|<=6)",
       [] { return sweep(verify::eigen_checks, {2, 3, 4}, 6); }},
      {2, "separation S_n by rho_0 Q...Q and A-chain (n=2..4, |lambda|<=6)",
       [] { return sweep(verify::chain_checks, {2, 3, 4}, 6); }},
      {3, "commutativity [Q_z1,Q_z2] and [H_j,H_k] (n<=4, degree<=6)",
       [] { return sweep(verify::commutativity_checks, {1, 2, 3, 4}, 6); }},
      {4, "Schur inversion S_n^-1 and K_n identity (n<=4, |lambda|<=5)",
       [] { return sweep(verify::inverse_checks, {1, 2, 3, 4}, 5); }},
      {5, "ODE suite (phi, separated Z-equation, E-case, moments; n<=4, |lambda|<=6)",
       [] { return sweep(verify::ode_checks, {1, 2, 3, 4}, 6); }},
      {6, "lifting Q_0' and Q_0 = Q_0' P (n=2..4, |lambda|<=6)",
       [] { return sweep(verify::lifting_checks, {2, 3, 4}, 6); }},
      {7, "restricted Schur ratio (|lambda|<=4) and s_lambda(1) (|lambda|<=6), n<=4",
       [] { return sweep(verify::restricted_schur_checks, {1, 2, 3, 4}, 6); }},
      {8, "quadrature (n=2 relErr<=1e-10, n=3 relErr<=1e-6, one prefactor convention)", quadrature},
      {9, "border determinant and Delta-integration identities (100 instances, n=2..4)", determinants},
      {10, "round trip in m, E, s and Schur-in-m triangularity (n<=4, degree<=6)",
       [] { return sweep(verify::roundtrip_checks, {1, 2, 3, 4}, 6); }},
  };

  bool all = true;
  for (const auto& item : items) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = item.run();
    } catch (const std::exception& ex) {
      out.ok = false;
      out.extra = std::string("exception: ") + ex.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = out.ok && out.report.passed() && !out.report.records.empty();
    all = all && pass;
    std::printf("[%s] %2d %s: %zu checks, %zu failed%s%s (%.1fs)\n", pass ? "PASS" : "FAIL", item.id, item.name,
                out.report.records.size(), out.report.failures(), out.extra.empty() ? "" : "; ", out.extra.c_str(),
                secs);
    if (const auto* f = out.report.first_failure()) {
      std::printf("       first counterexample: %s n=%zu lambda=%s %s\n         oracle   %s\n         computed %s\n",
                  f->identity.c_str(), f->n, to_string(Partition(f->lambda)).c_str(), f->params.c_str(),
                  f->oracle.c_str(), f->computed.c_str());
    }
    std::fflush(stdout);
  }
  std::printf("%s\n", all ? "ALL ACCEPTANCE CHECKS PASSED" : "ACCEPTANCE FAILED");
  return all ? 0 : 1;
}
