#include <random>

#include "doctest.h"
#include "locbez/errors.hpp"
#include "locbez/localmult.hpp"
#include "test_support.hpp"

using namespace locbez;
using locbez::testing::P;
using locbez::testing::qxy;

namespace {

StabilizationPolicy policy(unsigned start = 2, unsigned extra = 0) {
  StabilizationPolicy p;
  p.start = start;
  p.extra_probes = extra;
  return p;
}

std::size_t length_of(std::initializer_list<const char*> gens, unsigned extra = 0) {
  std::vector<MultiPoly> g;
  for (const char* s : gens) g.push_back(P(s));
  return local_length(GroebnerIdeal(qxy(), g), policy(2, extra)).value;
}

// Random curve through the origin with no constant term.
MultiPoly random_curve(std::mt19937_64& rng, unsigned max_degree) {
  return locbez::testing::random_poly(rng, qxy(), 1, max_degree, 5, 3);
}

// Count monomials x^i y^j with i + j < k directly.
long staircase(long k) {
  long count = 0;
  for (long i = 0; i < k; ++i)
    for (long j = 0; i + j < k; ++j) ++count;
  return count;
}

}  // namespace

TEST_CASE("local_length: examples") {
  CHECK(length_of({"y", "y^2-x^3"}) == 3);
  CHECK(fulton_oracle(P("y"), P("y^2-x^3")) == FiniteLength(3));
  CHECK(length_of({"x", "y"}) == 1);
  CHECK(length_of({"x^3+y^3-3*x*y", "x^2+y^2-3*x"}) == 5);
  CHECK(length_of({"x+1", "y"}) == 0);
  CHECK(length_of({"x-1", "y"}) == 0);  // the only point is (1, 0)
  CHECK(length_of({"x*(x-1)", "y"}) == 1);
}

TEST_CASE("local_length: probes are monotone and stop at a plateau") {
  const StabilizedLength s =
      local_length(GroebnerIdeal(qxy(), {P("x^3+y^3-3*x*y"), P("x^2+y^2-3*x")}), policy(4, 3));
  CHECK(s.value == 5);
  CHECK(s.extra_probes == 3);
  CHECK(s.extra_agree);
  for (std::size_t k = 1; k < s.probes.size(); ++k) CHECK(s.probes[k - 1].second <= s.probes[k].second);
  CHECK(s.probes[s.probes.size() - 4].first == s.n_stop);
}

TEST_CASE("local_length: common component never plateaus") {
  StabilizationPolicy p = policy();
  p.cap = 12;
  CHECK_THROWS_AS(local_length(GroebnerIdeal(qxy(), {P("x*y"), P("x*(x+y^2)")}), p), NotStabilized);
}

TEST_CASE("fulton_oracle: examples and edge cases") {
  CHECK(fulton_oracle(P("x"), P("y")) == FiniteLength(1));
  CHECK(fulton_oracle(P("x^3+y^3-3*x*y"), P("x^2+y^2-2*x")) == FiniteLength(3));
  CHECK(fulton_oracle(P("x^3+y^3-3*x*y"), P("x^2+y^2")) == FiniteLength(4));
  CHECK(fulton_oracle(P("x^3+y^3-3*x*y"), P("x^2+y^2-3*x")) == FiniteLength(5));
  CHECK(fulton_oracle(P("y^2-x^3"), P("y")) == FiniteLength(3));
  CHECK(fulton_oracle(P("x+1"), P("y")) == FiniteLength(0));
  CHECK(fulton_oracle(P("x"), P("x")) == std::nullopt);
  CHECK(fulton_oracle(P("x*y"), P("y*(x+1)")) == std::nullopt);
  CHECK(fulton_oracle(P("(x+y^2)*(1+x)"), P("(x+y^2)*y")) == std::nullopt);
  CHECK(fulton_oracle(P("x*(y-1)"), P("y*(y-1)")) == FiniteLength(1));
  CHECK(fulton_oracle(P("0"), P("x+1")) == FiniteLength(0));
  CHECK(fulton_oracle(P("0"), P("x")) == std::nullopt);
}

TEST_CASE("fulton_oracle agrees with the Groebner length on random pairs") {
  std::mt19937_64 rng(101);
  int compared = 0;
  while (compared < 120) {
    const MultiPoly f = random_curve(rng, 5);
    const MultiPoly g = random_curve(rng, 5);
    if (share_common_factor(f, g)) continue;
    ++compared;
    const FiniteLength oracle = fulton_oracle(f, g);
    REQUIRE(oracle.has_value());
    const StabilizedLength s = local_length(GroebnerIdeal(qxy(), {f, g}), policy(ord(f) + ord(g) + 1, 3));
    INFO(f.to_string(), " | ", g.to_string());
    CHECK(s.value == *oracle);
    CHECK(s.extra_agree);
    CHECK(s.value >= static_cast<std::size_t>(ord(f)) * ord(g));
  }
}

TEST_CASE("local_length is invariant under invertible linear changes") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> c(-3, 3);
  int done = 0;
  while (done < 25) {
    const MultiPoly f = random_curve(rng, 4);
    const MultiPoly g = random_curve(rng, 4);
    if (share_common_factor(f, g)) continue;
    const long a = c(rng), b = c(rng), cc = c(rng), d = c(rng);
    if (a * d - b * cc == 0) continue;
    ++done;
    const Field q = Field::rationals();
    const MultiPoly images[] = {P("x").scaled(FieldElem(a, q)) + P("y").scaled(FieldElem(b, q)),
                                P("x").scaled(FieldElem(cc, q)) + P("y").scaled(FieldElem(d, q))};
    const MultiPoly f2 = compose(f, images), g2 = compose(g, images);
    const auto before = local_length(GroebnerIdeal(qxy(), {f, g}), policy(ord(f) + ord(g) + 1)).value;
    const auto after = local_length(GroebnerIdeal(qxy(), {f2, g2}), policy(ord(f2) + ord(g2) + 1)).value;
    CHECK(before == after);
  }
}

TEST_CASE("hilbert_samuel") {
  CHECK(hilbert_samuel(0) == 0);
  CHECK(hilbert_samuel(3) == 6);
  CHECK(hilbert_samuel(5) == 15);
  for (unsigned n = 0; n <= 12; ++n) CHECK(hilbert_samuel_checked(n) == static_cast<std::size_t>(staircase(n)));
}

TEST_CASE("weighted_difference equals c*d once n >= c+d") {
  CHECK(weighted_difference(0, 2, 1) == 0);
  CHECK(weighted_difference(0, 4, 5) == 0);
  for (long n = 3; n < 20; ++n) CHECK(weighted_difference(n, 2, 1) == 2);
  for (long n = 4; n < 20; ++n) CHECK(weighted_difference(n, 2, 2) == 4);
  for (long c = 1; c <= 6; ++c) {
    for (long d = 1; d <= 6; ++d) {
      for (long n = c + d; n <= c + d + 10; ++n) {
        const long oracle = staircase(n) - staircase(n - c) - staircase(n - d) + staircase(n - c - d);
        CHECK(weighted_difference(n, c, d) == oracle);
        CHECK(weighted_difference(n, c, d) == c * d);
      }
    }
  }
  // Below c + d the difference has not settled yet.
  CHECK(weighted_difference(2, 2, 2) == 3);
}
