#include <random>

#include "doctest.h"
#include "locbez/bezout.hpp"
#include "locbez/corpus.hpp"
#include "locbez/errors.hpp"
#include "test_support.hpp"

using namespace locbez;
using locbez::testing::P;
using locbez::testing::qxy;

namespace {

const char* const kFolium = "x^3+y^3-3*x*y";

GroebnerIdeal f_plus_power(const CurvePair& pair, long k) {
  std::vector<MultiPoly> gens = maximal_ideal_power(pair.ring(), k <= 0 ? 0 : static_cast<unsigned>(k));
  gens.push_back(pair.f());
  return groebner_basis(GroebnerIdeal(pair.ring(), gens));
}

// lambda_n and ell_n through the elimination-based colon and intersection.
std::pair<std::size_t, std::size_t> lengths_by_elimination(const CurvePair& pair, unsigned n) {
  const long d = ord(pair.g());
  const GroebnerIdeal C = colon_by_elimination(f_plus_power(pair, n), pair.g());
  const std::size_t base = *quotient_dim(C);
  const GroebnerIdeal J = f_plus_power(pair, n - d);
  const GroebnerIdeal JC = groebner_basis(intersect_by_elimination(C, J));
  const GroebnerIdeal D = groebner_basis(intersect_by_elimination(C, f_plus_power(pair, n - d - 1)));
  return {*quotient_dim(JC) - base, *quotient_dim(D) - base};
}

void check_all_hold(const BezoutReport& r) {
  for (const auto& [name, v] : r.verdicts) {
    CAPTURE(name);
    CHECK(v.holds);
  }
  CHECK(r.all_stable());
  CHECK(r.diagnostics.empty());
}

}  // namespace

TEST_CASE("full_report: folium and circle rows") {
  struct Row {
    const char* g;
    long e, c, d, t, ell, e1, e2, e3;
  };
  const Row rows[] = {
      {"x^2+y^2-2*x", 3, 2, 1, 1, 0, 1, 0, 0},
      {"x^2+y^2", 4, 2, 2, 0, 0, 0, 0, 0},
      {"x^2+y^2-3*x", 5, 2, 1, 1, 2, 3, 0, 0},
  };
  for (const Row& row : rows) {
    CAPTURE(row.g);
    const BezoutReport r = full_report(CurvePair::parse(kFolium, row.g));
    CHECK(r.e == row.e);
    CHECK(r.e_oracle == row.e);
    CHECK(r.c == row.c);
    CHECK(r.d == row.d);
    CHECK(r.t == row.t);
    CHECK(r.ell == row.ell);
    CHECK(r.lambda == row.t + row.ell);
    CHECK(r.e1 == row.e1);
    CHECK(r.e2 == row.e2);
    CHECK(r.e3 == row.e3);
    CHECK(r.e_maximal == 1);
    check_all_hold(r);
  }
}

TEST_CASE("full_report: cubic pairs share (e, c, d, t, ell) but not the chart data") {
  const BezoutReport p1 = full_report(CurvePair::parse("x^3-(x^2-y^2)", "y^3-(y^2-x^2)"));
  const BezoutReport p2 = full_report(CurvePair::parse("(x+y)^3-4*x*y", "(x-y)^3+4*x*y"));
  CHECK(p1.e == 7);
  CHECK(p1.ell == 1);
  CHECK(p1.t == 2);
  CHECK(std::tuple(p1.e, p1.c, p1.d, p1.t, p1.ell) == std::tuple(p2.e, p2.c, p2.d, p2.t, p2.ell));
  CHECK(std::tuple(p1.e1, p1.e2, p1.e3) == std::tuple(3L, 3L, 3L));
  CHECK(std::tuple(p2.e1, p2.e2, p2.e3) == std::tuple(2L, 1L, 0L));
  CHECK(p1.verdict("THM72").left == 7);
  CHECK(p1.verdict("THM72").right == 7);
  check_all_hold(p1);
  check_all_hold(p2);
}

TEST_CASE("full_report: axes and verdict layout") {
  const BezoutReport r = full_report(CurvePair::parse("x", "y"));
  CHECK(std::tuple(r.e, r.c, r.d, r.t, r.ell, r.e1, r.e2, r.e3) == std::tuple(1L, 1L, 1L, 0L, 0L, 0L, 0L, 0L));
  CHECK(r.transversal);
  std::vector<std::string> names;
  for (const auto& [name, v] : r.verdicts) names.push_back(name);
  CHECK(names == std::vector<std::string>{"THM61", "THM51", "PROP52", "THM72", "THM74A", "THM74B", "LEM21"});
  CHECK(r.verdict("THM74B").holds);
  CHECK_THROWS_AS(r.verdict("THM99"), InvalidInput);
  std::vector<std::string> keys;
  for (const auto& [name, s] : r.stabilization) keys.push_back(name);
  CHECK(keys == std::vector<std::string>{"e", "lambda", "ell", "e1", "e2", "e3"});
}

TEST_CASE("full_report: the bound e <= cd + e1 + e2") {
  // Only common tangent is the axis y = 0: equality.
  const BezoutReport axis = full_report(CurvePair::parse("y-x^2", "y"));
  CHECK(axis.tangents_on_axes);
  CHECK(axis.e == axis.c * axis.d + axis.e1 + axis.e2);
  // Common tangents x = 0 and x = y: an axis is among them, yet the bound is strict.
  const BezoutReport mixed = full_report(CurvePair::parse("x^2-x*y+y^3", "x^2*y-x*y^2+x^4"));
  CHECK(mixed.axis_tangent);
  CHECK_FALSE(mixed.tangents_on_axes);
  CHECK(mixed.e < mixed.c * mixed.d + mixed.e1 + mixed.e2);
  CHECK(mixed.e3 > 0);
  check_all_hold(mixed);
  // No axis tangent: strict.
  const BezoutReport off = full_report(CurvePair::parse("x^2-y^2+x^3", "x-y+y^2"));
  CHECK_FALSE(off.axis_tangent);
  CHECK(off.e < off.c * off.d + off.e1 + off.e2);
  check_all_hold(off);
}

TEST_CASE("koszul_h1_length and ell_invariant agree with the elimination engine") {
  const std::pair<const char*, const char*> pairs[] = {
      {kFolium, "x^2+y^2-3*x"},
      {kFolium, "x^2+y^2-2*x"},
      {"x^3-(x^2-y^2)", "y^3-(y^2-x^2)"},
      {"y^2-x^3", "y-x^2"},
  };
  for (const auto& [f, g] : pairs) {
    const CurvePair pair = CurvePair::parse(f, g);
    const unsigned cd = ord(pair.f()) + ord(pair.g());
    for (unsigned n = cd + 2; n <= cd + 4; ++n) {
      CAPTURE(f);
      CAPTURE(n);
      const auto [lambda, ell] = lengths_by_elimination(pair, n);
      CHECK(koszul_h1_length(pair, n) == lambda);
      CHECK(ell_invariant(pair, n) == ell);
    }
  }
  const CurvePair a32 = CurvePair::parse(kFolium, "x^2+y^2-3*x");
  CHECK(ell_invariant(a32, 10) == 2);
  CHECK(koszul_h1_length(a32, 10) == 3);
  CHECK_THROWS_AS(koszul_h1_length(a32, 3), InvalidInput);
  CHECK_THROWS_AS(ell_invariant(a32, 4), InvalidInput);
}

TEST_CASE("full_report: error paths") {
  CHECK_THROWS_WITH_AS(full_report(CurvePair::parse("x", "x")), "curves share a component", InvalidInput);
  CHECK_THROWS_WITH_AS(full_report(CurvePair::parse("x*y", "x*(y-x^2)")), "curves share a component", InvalidInput);
  // A common component away from the origin does not matter locally.
  const BezoutReport away = full_report(CurvePair::parse("(x-1)*y", "(x-1)*(x+y^2)"));
  CHECK(away.e == 1);
  check_all_hold(away);
  ReportOptions tight;
  tight.max_n = 5;
  CHECK_THROWS_AS(full_report(CurvePair::parse(kFolium, "x^2+y^2-3*x"), tight), NotStabilized);
}

TEST_CASE("full_report: random pairs over Q and over a prime field") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const CurvePair pair = random_pair(rng, 4);
    CAPTURE(pair.f().to_string());
    CAPTURE(pair.g().to_string());
    const BezoutReport r = full_report(pair);
    check_all_hold(r);
    CHECK((r.e3 == 0) == (r.transversal || r.tangents_on_axes));
  }
  const Field fp = Field::prime(32003);
  for (int trial = 0; trial < 15; ++trial) {
    const CurvePair pair = random_pair(rng, 4, fp);
    CHECK(pair.field() == fp);
    check_all_hold(full_report(pair));
  }
}

TEST_CASE("builtin corpus matches its expectations") {
  const auto entries = builtin_corpus("paper");
  CHECK(entries.size() == 6);
  for (const CorpusEntry& entry : entries) {
    CAPTURE(entry.name);
    const BezoutReport r = full_report(CurvePair::parse(entry.f_text, entry.g_text));
    CHECK(expected_mismatches(entry, r).empty());
    check_all_hold(r);
  }
  CHECK_THROWS_AS(builtin_corpus("nope"), InvalidInput);
}

TEST_CASE("corpus parsing") {
  const auto entries = parse_corpus(
      "# comment\n"
      "\n"
      "axes | x | y | e=1, t=0\n"
      "cusp|y^2-x^3|y\n"
      "tac | y - x^2 | y |\n");
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].name == "axes");
  CHECK(entries[0].expected == std::vector<std::pair<std::string, long>>{{"e", 1}, {"t", 0}});
  CHECK(entries[1].f_text == "y^2-x^3");
  CHECK(entries[1].expected.empty());
  CHECK(entries[2].g_text == "y");
  CHECK_THROWS_AS(parse_corpus("only | two"), ParseError);
  CHECK_THROWS_AS(parse_corpus("a | x | y | e=one"), ParseError);
  CHECK_THROWS_AS(parse_corpus("a | x | y | zeta=1"), ParseError);
  CHECK_THROWS_AS(parse_corpus("a | x | y | e"), ParseError);
  CHECK_THROWS_WITH(parse_corpus("ok | x | y\nbad"), doctest::Contains("line 2"));

  const CorpusEntry wrong{"axes", "x", "y", {{"e", 99}}};
  const auto miss = expected_mismatches(wrong, full_report(CurvePair::parse("x", "y")));
  CHECK(miss == std::vector<std::string>{"e: expected 99, got 1"});
}

TEST_CASE("random_pair is seeded and well formed") {
  std::mt19937_64 a(5), b(5);
  for (int k = 0; k < 20; ++k) {
    const CurvePair p = random_pair(a, 5);
    const CurvePair q = random_pair(b, 5);
    CHECK(p.f() == q.f());
    CHECK(p.g() == q.g());
    CHECK(p.f().total_degree() <= 5);
    CHECK(p.f().constant_term().is_zero());
    CHECK_FALSE(share_common_factor(p.f(), p.g()));
  }
  std::mt19937_64 c(1);
  for (int k = 0; k < 20; ++k) {
    const TangentData td = tangent_data(random_pair(c, 1));
    CHECK(td.c == 1);
    CHECK(td.d == 1);
    CHECK(td.t == 0);
  }
  CHECK_THROWS_AS(random_pair(c, 0), InvalidInput);
}
