#include <random>

#include "doctest.h"
#include "locbez/errors.hpp"
#include "locbez/groebner.hpp"
#include "test_support.hpp"

using namespace locbez;
using locbez::testing::P;
using locbez::testing::qxy;

namespace {

GroebnerIdeal ideal(std::initializer_list<const char*> gens, const RingPtr& ring = qxy()) {
  std::vector<MultiPoly> g;
  for (const char* s : gens) g.push_back(parse(s, ring));
  return groebner_basis(GroebnerIdeal(ring, std::move(g)));
}

std::vector<std::string> basis_text(const GroebnerIdeal& I) {
  std::vector<std::string> out;
  for (const auto& b : I.basis()) out.push_back(b.to_string());
  return out;
}

using Strings = std::vector<std::string>;

bool includes(const GroebnerIdeal& big, const GroebnerIdeal& small) {
  for (const auto& g : small.basis())
    if (!contains(big, g)) return false;
  return true;
}

std::vector<MultiPoly> maximal_power(unsigned n) {
  const std::size_t vars[] = {0, 1};
  return power_of_variables(qxy(), vars, n);
}

}  // namespace

TEST_CASE("groebner_basis: small examples") {
  CHECK(basis_text(ideal({"x", "y"})) == Strings{"y", "x"});
  CHECK(basis_text(ideal({"y^2-x^3", "y"})) == Strings{"y", "x^3"});
  CHECK(basis_text(ideal({"x^2-y^2", "x^2+y^2"})) == Strings{"y^2", "x^2"});
  CHECK(basis_text(ideal({"0", "2*x"})) == Strings{"x"});
  CHECK(ideal({"x+1", "x"}).is_unit());
  CHECK(ideal({"0"}).basis().empty());
}

TEST_CASE("groebner_basis: lex order and determinism") {
  const GroebnerIdeal I(qxy(), {P("x^2+y^2-1"), P("x-y")});
  const GroebnerIdeal a = groebner_basis(I, MonomialOrder::lex());
  const GroebnerIdeal b = groebner_basis(I, MonomialOrder::lex());
  CHECK(a.basis() == b.basis());
  CHECK(basis_text(a) == Strings{"y^2-1/2", "x-y"});
  CHECK(satisfies_buchberger_criterion(a));
}

TEST_CASE("normal_form") {
  const GroebnerIdeal I = ideal({"y", "x^3"});
  CHECK(normal_form(P("x^3"), I).is_zero());
  CHECK(normal_form(P("x^2"), I) == P("x^2"));
  CHECK(normal_form(P("x^3+x"), ideal({"y^2-x^3", "y"})) == P("x"));
  CHECK_THROWS_AS(normal_form(P("x"), GroebnerIdeal(qxy(), {P("x")})), InvalidInput);
}

TEST_CASE("quotient_dim: powers of the maximal ideal match the staircase count") {
  for (unsigned n = 0; n <= 10; ++n) {
    std::size_t staircase = 0;
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; i + j < n; ++j) ++staircase;
    const auto dim = quotient_dim(groebner_basis(GroebnerIdeal(qxy(), maximal_power(n))));
    REQUIRE(dim.has_value());
    CHECK(*dim == staircase);
    CHECK(*dim == n * (n + 1) / 2);
  }
  CHECK(quotient_dim(ideal({"y", "x^3"})) == FiniteLength(3));
  CHECK_FALSE(quotient_dim(ideal({"x"})).has_value());
  CHECK(quotient_dim(ideal({"1"})) == FiniteLength(0));
}

TEST_CASE("colon: examples") {
  CHECK(basis_text(colon(ideal({"x*y"}), P("x"))) == Strings{"y"});
  const GroebnerIdeal I = ideal({"x^2", "x*y"});
  const GroebnerIdeal C = colon(I, P("x"));
  CHECK(basis_text(C) == Strings{"y", "x"});
  // Brute force on monomials: m is in I:x iff x*m is divisible by x^2 or x*y.
  for (unsigned a = 0; a < 6; ++a) {
    for (unsigned b = 0; a + b < 6; ++b) {
      const unsigned ex[2] = {a + 1, b};
      const Monomial xm = Monomial::from_exponents(ex);
      const bool in_colon = Monomial::variable(0, 2).divides(xm) || Monomial::from_exponents(std::array{1u, 1u}).divides(xm);
      const unsigned em[2] = {a, b};
      CHECK(contains(C, MultiPoly::monomial(qxy(), Monomial::from_exponents(em), FieldElem::one(Field::rationals()))) ==
            in_colon);
    }
  }
  CHECK(same_ideal(colon(I, P("1")), I));
  CHECK_THROWS_AS(colon(I, P("0")), DomainError);
}

TEST_CASE("intersect: examples") {
  CHECK(basis_text(intersect(ideal({"x"}), ideal({"y"}))) == Strings{"x*y"});
  const GroebnerIdeal M = intersect(ideal({"x^2", "y"}), ideal({"x"}));
  CHECK(basis_text(M) == Strings{"x*y", "x^2"});
  CHECK(includes(ideal({"x^2", "y"}), M));
  CHECK(includes(ideal({"x"}), M));
  const GroebnerIdeal I = ideal({"x^2-y^3", "x*y"});
  CHECK(same_ideal(intersect(I, I), I));
}

TEST_CASE("saturate: examples") {
  CHECK(basis_text(saturate(ideal({"x*y^2"}), P("y"))) == Strings{"x"});
  const RingPtr chart = make_ring({"y", "S"});
  const GroebnerIdeal I = ideal({"S*y", "S^2"}, chart);
  CHECK(basis_text(colon(I, parse("S", chart))) == Strings{"S", "y"});
  CHECK(basis_text(saturate(I, parse("S", chart))) == Strings{"1"});
  const GroebnerIdeal J = ideal({"x^2+y^2-1", "x*y"});
  CHECK(same_ideal(saturate(J, P("1")), J));
}

TEST_CASE("ideal operations: containment laws on random ideals") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<MultiPoly> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(locbez::testing::random_poly(rng, qxy(), 1, 3, 3, 3));
    const GroebnerIdeal I = groebner_basis(GroebnerIdeal(qxy(), gens));
    const GroebnerIdeal J = groebner_basis(GroebnerIdeal(qxy(), {locbez::testing::random_poly(rng, qxy(), 1, 2, 2, 3)}));
    const MultiPoly g = locbez::testing::random_poly(rng, qxy(), 1, 2, 2, 3);

    CHECK(satisfies_buchberger_criterion(I));
    const GroebnerIdeal C = colon(I, g);
    CHECK(includes(C, I));
    for (const auto& h : C.basis()) CHECK(contains(I, h * g));
    const GroebnerIdeal M = intersect(I, J);
    CHECK(includes(I, M));
    CHECK(includes(J, M));
    for (const auto& a : I.basis())
      for (const auto& b : J.basis()) CHECK(contains(M, a * b));
    const GroebnerIdeal S = saturate(I, g);
    CHECK(same_ideal(saturate(S, g), S));
  }
}

TEST_CASE("membership and quotient_dim agree with truncated linear algebra") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const unsigned B = 4 + trial % 4;
    std::vector<MultiPoly> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(locbez::testing::random_poly(rng, qxy(), 1, 4, 4, 3));
    std::vector<MultiPoly> all = gens;
    for (auto& m : maximal_power(B)) all.push_back(m);
    const GroebnerIdeal I = groebner_basis(GroebnerIdeal(qxy(), all));
    const locbez::testing::TruncatedSpan span(gens, B);
    CHECK(quotient_dim(I) == FiniteLength(span.quotient_dim()));
    for (int probe = 0; probe < 10; ++probe) {
      MultiPoly f = locbez::testing::random_poly(rng, qxy(), 0, B + 1, 3, 3);
      if (probe % 2 == 0) f = f * gens[0] + gens[1];
      CHECK(contains(I, f) == span.contains(f));
    }
  }
}

TEST_CASE("groebner over a prime field") {
  const RingPtr r = make_ring({"x", "y"}, Field::prime(7));
  const GroebnerIdeal I = groebner_basis(GroebnerIdeal(r, {parse("x^2-y^2", r), parse("x^2+y^2", r)}));
  CHECK(basis_text(I) == Strings{"y^2", "x^2"});
  CHECK(quotient_dim(I) == FiniteLength(4));
}

TEST_CASE("resource caps raise ResourceExhausted") {
  GroebnerLimits tight;
  tight.max_pairs = 1;
  const GroebnerIdeal I(qxy(), {P("x^3-y^2"), P("x*y-1"), P("x^2+y^3")});
  CHECK_THROWS_AS(groebner_basis(I, MonomialOrder::grevlex(), tight), ResourceExhausted);
}

TEST_CASE("zero-dimensional colon and intersect agree with elimination") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<MultiPoly> a = maximal_power(3 + trial % 3);
    std::vector<MultiPoly> b = {P("x^5"), P("y^4")};
    a.push_back(locbez::testing::random_poly(rng, qxy(), 1, 3, 3, 3));
    b.push_back(locbez::testing::random_poly(rng, qxy(), 1, 3, 3, 3));
    b.push_back(locbez::testing::random_poly(rng, qxy(), 1, 2, 2, 3));
    const GroebnerIdeal I = groebner_basis(GroebnerIdeal(qxy(), a));
    const GroebnerIdeal J = groebner_basis(GroebnerIdeal(qxy(), b));
    const MultiPoly g = locbez::testing::random_poly(rng, qxy(), 0, 2, 3, 3);

    const GroebnerIdeal fast = intersect(I, J);
    CHECK(satisfies_buchberger_criterion(fast));
    CHECK(same_ideal(fast, groebner_basis(intersect_by_elimination(I, J))));
    const GroebnerIdeal quick = colon(I, g);
    CHECK(satisfies_buchberger_criterion(quick));
    CHECK(same_ideal(quick, colon_by_elimination(I, g)));
    CHECK(same_ideal(colon(J, g), colon_by_elimination(J, g)));
  }
}

TEST_CASE("zero-dimensional ideals with points away from the origin") {
  const GroebnerIdeal I = ideal({"x^2-1", "y^2-x"});
  const GroebnerIdeal J = ideal({"x-1", "y^3"});
  CHECK(same_ideal(intersect(I, J), groebner_basis(intersect_by_elimination(I, J))));
  CHECK(same_ideal(colon(I, P("x-1")), colon_by_elimination(I, P("x-1"))));
  CHECK(quotient_dim(colon(I, P("x-1"))) == FiniteLength(2));
  CHECK(colon(I, P("x^2-1")).is_unit());
}
