#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mmtp/error.hpp"
#include "mmtp/poly.hpp"

using mmtp::Monomial;
using mmtp::MultiPoly;
using mmtp::Rational;

namespace {

MultiPoly P(const std::string& text) { return MultiPoly::parse(text); }

// Small random polynomials for property checks.
MultiPoly random_poly(std::mt19937_64& rng) {
  static const char* vars[] = {"u", "v", "w", "t"};
  std::uniform_int_distribution<int> n_terms(0, 5), coeff(-4, 4), exp(0, 3), pick(0, 3);
  MultiPoly p;
  for (int i = n_terms(rng); i > 0; --i) {
    Monomial m;
    for (int j = 0; j < 3; ++j) m = m.times(Monomial::variable(vars[pick(rng)], 2 * exp(rng)));
    p += MultiPoly::term(m, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("additive identity and cancellation") {
  CHECK(P("x") + MultiPoly::zero() == P("x"));
  CHECK(P("t*x") + P("-t*x") == MultiPoly::zero());
  CHECK((P("t*x") + P("-t*x")).to_string() == "0");
}

TEST_CASE("sum groups match the two-block transition polynomial shape") {
  // (u^3+2uv^2) + t(3u^2v+v^3)
  MultiPoly total = P("u^3 + 2*u*v^2") + P("3*u^2*v + v^3") * P("t");
  CHECK(total == P("u^3 + 2*u*v^2 + 3*u^2*v*t + v^3*t"));
  CHECK(total.to_string() == "u^3 + 2*u*v^2 + 3*u^2*v*t + v^3*t");
}

TEST_CASE("multiplication basics") {
  CHECK(P("x") * MultiPoly::one() == P("x"));
  CHECK(P("x + y") * P("x - y") == P("x^2 - y^2"));
  CHECK(P("t^2") * P("t^3") == P("t^5"));
}

TEST_CASE("substitution") {
  CHECK(P("x").substitute({{"x", P("y")}}) == P("y"));
  CHECK(P("x^2").substitute({{"x", P("a + b")}}) == P("a^2 + 2*a*b + b^2"));
  // variables absent from the map are unchanged
  CHECK(P("x*z").substitute({{"x", P("y")}}) == P("y*z"));
}

TEST_CASE("evaluation") {
  CHECK(P("x + 1").evaluate({{"x", 1}}) == 2);
  // coefficient sum of the Example polynomial blocks: 1+2+3+1+1
  MultiPoly q = P("u^3 + 2*u*v^2 + 3*u^2*v*t + v^3*t + u*v^2*t^2");
  CHECK(q.evaluate({{"u", 1}, {"v", 1}, {"t", 1}}) == 8);
  CHECK(P("t^2").evaluate({{"t", Rational(3, 2)}}) == Rational(9, 4));
  CHECK_THROWS_AS(P("x + y").evaluate({{"x", 1}}), mmtp::Error);
}

TEST_CASE("laurent evaluation guards division by zero") {
  MultiPoly p = P("x^-2");
  CHECK(p.laurent());
  CHECK(p.evaluate({{"x", 2}}) == Rational(1, 4));
  CHECK_THROWS_AS(p.evaluate({{"x", 0}}), mmtp::Error);
}

TEST_CASE("half-grid exponents print as k/2") {
  MultiPoly p = MultiPoly::term(Monomial::variable("x", 3), 1);
  CHECK(p.to_string() == "x^3/2");
  CHECK(MultiPoly::parse("x^3/2") == p);
  CHECK_FALSE(p.integral_exponents());
  CHECK(p.nonnegative_exponents());
}

TEST_CASE("canonical text orders t last and groups by t degree") {
  MultiPoly q = P("u*v^2*t^2 + v^3*t + u^3 + 3*u^2*v*t + 2*u*v^2");
  CHECK(q.to_string() == "u^3 + 2*u*v^2 + 3*u^2*v*t + v^3*t + u*v^2*t^2");
}

TEST_CASE("parse round-trips canonical serialisation") {
  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 200; ++i) {
    MultiPoly p = random_poly(rng);
    CHECK(MultiPoly::parse(p.to_string()) == p);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(987654321);
  for (int i = 0; i < 100; ++i) {
    MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(13371337);
  for (int i = 0; i < 60; ++i) {
    MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    std::map<std::string, MultiPoly> phi = {{"u", random_poly(rng)}, {"v", P("w + 1")}};
    CHECK((a * b + c).substitute(phi) == a.substitute(phi) * b.substitute(phi) + c.substitute(phi));
  }
}

TEST_CASE("rejects malformed text") {
  CHECK_THROWS_AS(MultiPoly::parse(""), mmtp::Error);
  CHECK_THROWS_AS(MultiPoly::parse("x +"), mmtp::Error);
  CHECK_THROWS_AS(MultiPoly::parse("x^1/3"), mmtp::Error);
  CHECK_THROWS_AS(MultiPoly::parse("3x ??"), mmtp::Error);
}
