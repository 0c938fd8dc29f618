#include <sys/wait.h>

#include <array>
#include <cstdio>

#include "test_util.hpp"

using namespace symfact;
using namespace symfact::testing;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = std::string(SYMFACT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json parse(const Run& r) { return json::parse(r.out); }

}  // namespace

TEST(Cli, BasisMonomialNormalized) {
  auto r = cli("basis --kind m --lambda 2,0 --n 2 --normalized");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(multipoly_from_json(parse(r)), (X(2, 0) * X(2, 0) + X(2, 1) * X(2, 1)) * R("1/2"));
}

TEST(Cli, BasisSchurTrivialAndElementary) {
  auto r = cli("basis --kind s --lambda 0,0 --n 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(multipoly_from_json(parse(r)), C(2, 1));
  auto e = cli("basis --kind E --lambda 1,1 --n 2");
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(multipoly_from_json(parse(e)), X(2, 0) * X(2, 1));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("basis --kind m --lambda 0,2 --n 2").code, 2);
  EXPECT_EQ(cli("basis --kind m --lambda 2,0 --n 3").code, 2);
  EXPECT_EQ(cli("basis --kind m --lambda 2,x").code, 2);
  EXPECT_EQ(cli("basis --kind q --lambda 2,0").code, 2);
  EXPECT_EQ(cli("verify --suite bogus").code, 2);
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("quadrature --identity q --lambda 1,0 --y 2,1 --z 3/2").code, 2);
  EXPECT_EQ(cli("quadrature --identity q --lambda 1,0 --y 1,2 --z 1").code, 2);
}

TEST(Cli, SeparateExamples) {
  auto r = cli("separate --basis m --lambda 2,0 --n 2");
  ASSERT_EQ(r.code, 0);
  json j = parse(r);
  EXPECT_EQ(j["q"], json::parse(R"(["1/2","0","1/2"])"));
  MultiPoly z1 = X(2, 0), z2 = X(2, 1), one = C(2, 1);
  EXPECT_EQ(multipoly_from_json(j["product"]), (z1 * z1 + one) * (z2 * z2 + one) * R("1/4"));
  EXPECT_EQ(multipoly_from_json(j["product"]).names(), default_names("z", 2));

  for (const char* b : {"m", "E", "s"}) {
    auto t = cli(std::string("separate --basis ") + b + " --lambda 0,0,0");
    ASSERT_EQ(t.code, 0);
    EXPECT_EQ(parse(t)["q"], json::parse(R"(["1"])"));
  }
  auto s = cli("separate --basis s --lambda 1,1,0 --n 3");
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(parse(s)["q"], json::parse(R"(["1/3","2/3"])"));
}

TEST(Cli, ApplyQAndInvertAndLift) {
  auto q = cli("apply-q --basis s --lambda 1,0");
  ASSERT_EQ(q.code, 0);
  MultiPoly z = X(3, 2), one = C(3, 1);
  EXPECT_EQ(multipoly_from_json(parse(q)["result"]),
            extend_arity(schur_poly(Partition{1, 0}).normalized, {"z"}) * (z + one) * R("1/2"));

  auto inv = cli("invert --lambda 2,1,0");
  ASSERT_EQ(inv.code, 0);
  EXPECT_EQ(multipoly_from_json(parse(inv)["result"]), schur_poly(Partition{2, 1, 0}).normalized);

  auto lift = cli("lift --basis E --lambda 2 --n 2");
  ASSERT_EQ(lift.code, 0);
  EXPECT_EQ(multipoly_from_json(parse(lift)["result"]), (X(2, 0) + X(2, 1)) * (X(2, 0) + X(2, 1)) * R("1/4"));
}

TEST(Cli, PolynomialInput) {
  std::string poly = to_json(schur_poly(Partition{1, 1}).normalized).dump();
  auto r = cli("separate --basis s --input '" + poly + "'");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(multipoly_from_json(parse(r)["product"]), X(2, 0) * X(2, 1));
  EXPECT_EQ(cli("separate --basis s --input '{\"vars\":[\"x1\",\"x2\"],\"terms\":[{\"e\":[1,0],\"c\":\"1\"}]}'").code, 2);
}

TEST(Cli, VerifySuites) {
  auto eigen = cli("verify --suite eigen --max-weight 6 --n 3");
  ASSERT_EQ(eigen.code, 0);
  json j = parse(eigen);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_GT(j["checked"].get<std::size_t>(), 100u);
  EXPECT_TRUE(j["firstFailure"].is_null());

  auto quad = cli("verify --suite quadrature --n 2");
  ASSERT_EQ(quad.code, 0);
  bool saw_convention = false;
  json report = parse(quad);
  for (const auto& rec : report["records"])
    if (rec["identity"] == "Q_z prefactor convention") {
      saw_convention = true;
      EXPECT_EQ(rec["convention"], "(z-1)^-(n-1)");
      EXPECT_TRUE(rec["pass"].get<bool>());
    }
  EXPECT_TRUE(saw_convention);

  auto trivial = cli("verify --suite all --max-weight 0 --n 1");
  EXPECT_EQ(trivial.code, 0);
}

TEST(Cli, ByteStable) {
  auto a = cli("verify --suite all --max-weight 3 --n 2 --seed 42");
  auto b = cli("verify --suite all --max-weight 3 --n 2 --seed 42");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(cli("--format table basis --kind s --lambda 2,1,0").out,
            cli("--format table basis --kind s --lambda 2,1,0").out);
}

TEST(Cli, QuadratureCommand) {
  auto r = cli("quadrature --identity q --lambda 1,0 --y 1,2 --z 3/2");
  ASSERT_EQ(r.code, 0);
  json j = parse(r);
  EXPECT_NEAR(j["reciprocal"].get<double>(), 1.875, 1e-12);
  EXPECT_NEAR(j["printed"].get<double>(), 0.46875, 1e-12);
  EXPECT_EQ(j["convention"], "(z-1)^-(n-1)");

  auto core = cli("quadrature --identity core --lambda 1,0 --y 1,2 --z 3/2");
  ASSERT_EQ(core.code, 0);
  EXPECT_NEAR(parse(core)["integral"]["value"].get<double>(), -1.875, 1e-12);

  auto lift = cli("quadrature --identity q0prime --lambda 1 --y 1,2");
  ASSERT_EQ(lift.code, 0);
  EXPECT_NEAR(parse(lift)["integral"]["value"].get<double>(), 1.5, 1e-14);

  auto a = cli("quadrature --identity a --lambda 2,1,0 --y 3/2,5/2 --z 7/4");
  ASSERT_EQ(a.code, 0);
  EXPECT_LE(parse(a)["relErr"].get<double>(), 1e-6);
}
