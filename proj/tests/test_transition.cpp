#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mmtp/io.hpp"
#include "mmtp/transition.hpp"

using namespace mmtp;

namespace {

const std::string kFixtures = MMTP_FIXTURE_DIR;

Multimatroid fixture(const std::string& name) { return read_multimatroid(kFixtures + "/" + name); }

MultiPoly P(const std::string& text) { return MultiPoly::parse(text); }

}  // namespace

TEST_CASE("transition polynomial of the empty multimatroid is 1") {
  Multimatroid empty(Carrier({}), {{}});
  CHECK(transition_polynomial(empty) == MultiPoly::one());
}

TEST_CASE("specialised transition polynomial of the sixteen-basis fixture") {
  Multimatroid za = fixture("example_a.mm");
  WeightMap weights = read_weight_map(kFixtures + "/uv0.map");
  MultiPoly q = transition_polynomial(za, weights);
  CHECK(q == P("u^3 + 2*u*v^2 + 3*u^2*v*t + v^3*t + u*v^2*t^2"));
  CHECK(q.to_string() == "u^3 + 2*u*v^2 + 3*u^2*v*t + v^3*t + u*v^2*t^2");
  // 27 transversals in total, of which the zero hat-weight keeps 8
  CHECK(transition_polynomial(za).term_count() == 27);
}

TEST_CASE("formal transition polynomial of the left tensor factor") {
  MultiPoly q = transition_polynomial(fixture("small_z1.mm"));
  CHECK(q == P("x.alpha_11*x.alpha_21*t + x.alpha_11*x.alpha_22 + x.alpha_12*x.alpha_21 + "
               "x.alpha_12*x.alpha_22*t"));
}

TEST_CASE("transition polynomials of the elementary minors of the right factor") {
  Multimatroid z2 = fixture("small_z2.mm");
  CHECK(transition_polynomial(z2.minor("e_1")) ==
        P("x.beta_11*x.beta_21*t^2 + x.beta_11*x.beta_22*t + x.beta_12*x.beta_21*t + "
          "x.beta_12*x.beta_22"));
  CHECK(transition_polynomial(z2.minor("e_2")) ==
        P("x.beta_11*x.beta_21*t + x.beta_11*x.beta_22 + x.beta_12*x.beta_21 + "
          "x.beta_12*x.beta_22*t"));
}

TEST_CASE("slack sums of the right factor") {
  Multimatroid z2 = fixture("small_z2.mm");
  std::vector<MultiPoly> ys = slack_sums(z2, "e");
  REQUIRE(ys.size() == 2);
  CHECK(ys[0] == P("x.beta_11*x.beta_21*t + x.beta_11*x.beta_22 + x.beta_12*x.beta_21"));
  CHECK(ys[1] == P("x.beta_12*x.beta_22"));
}

TEST_CASE("slack sums on a minimal two-class fixture are single monomials") {
  Multimatroid z1 = fixture("small_z1.mm");
  std::vector<MultiPoly> ys = slack_sums(z1, "alpha_1");
  REQUIRE(ys.size() == 2);
  for (const MultiPoly& y : ys) CHECK(y.term_count() == 1);
  CHECK(ys[0] == P("x.alpha_21"));  // slack of {alpha_21} is alpha_11
  CHECK(ys[1] == P("x.alpha_22"));
}

TEST_CASE("linear system relating minors to slack sums") {
  CHECK(linear_system_holds(fixture("small_z2.mm"), "e"));
  CHECK(linear_system_holds(fixture("small_z1.mm"), "alpha_1"));
  CHECK(linear_system_holds(fixture("example_a.mm"), "a"));
  CHECK(linear_system_holds(fixture("example_b.mm"), "e"));
}

TEST_CASE("slack sums validate their inputs") {
  Multimatroid zb = fixture("example_b.mm");
  CHECK_THROWS_AS(slack_sums(zb, "f"), Error);  // unordered class

  Carrier carrier({SkewClass{"a", {"a_1", "a_2"}, true}, SkewClass{"s", {"s_1", "s_2"}, true}});
  Multimatroid not_tight(carrier, {{"a_1", "s_1"}, {"a_2", "s_2"}, {"a_1", "s_2"}, {"a_2", "s_1"}});
  CHECK_THROWS_AS(slack_sums(not_tight, "a"), Error);
}

TEST_CASE("tensor-product formula end to end on the two-class fixtures") {
  Multimatroid z1 = fixture("small_z1.mm");
  Multimatroid z2 = fixture("small_z2.mm");
  TensorResult tensor = tensor_product(z1, z2, "e");

  const std::string expected_text =
      "x.beta_11@alpha_1*x.beta_21@alpha_1*x.beta_11@alpha_2*x.beta_21@alpha_2*t^3"
      " + x.beta_11@alpha_1*x.beta_21@alpha_1*x.beta_11@alpha_2*x.beta_22@alpha_2*t^2"
      " + x.beta_11@alpha_1*x.beta_21@alpha_1*x.beta_12@alpha_2*x.beta_21@alpha_2*t^2"
      " + x.beta_11@alpha_1*x.beta_22@alpha_1*x.beta_11@alpha_2*x.beta_21@alpha_2*t^2"
      " + x.beta_12@alpha_1*x.beta_21@alpha_1*x.beta_11@alpha_2*x.beta_21@alpha_2*t^2"
      " + x.beta_11@alpha_1*x.beta_21@alpha_1*x.beta_12@alpha_2*x.beta_22@alpha_2*t"
      " + x.beta_11@alpha_1*x.beta_22@alpha_1*x.beta_11@alpha_2*x.beta_22@alpha_2*t"
      " + x.beta_12@alpha_1*x.beta_21@alpha_1*x.beta_11@alpha_2*x.beta_22@alpha_2*t"
      " + x.beta_11@alpha_1*x.beta_22@alpha_1*x.beta_12@alpha_2*x.beta_21@alpha_2*t"
      " + x.beta_12@alpha_1*x.beta_21@alpha_1*x.beta_12@alpha_2*x.beta_21@alpha_2*t"
      " + x.beta_12@alpha_1*x.beta_22@alpha_1*x.beta_11@alpha_2*x.beta_21@alpha_2*t"
      " + x.beta_11@alpha_1*x.beta_22@alpha_1*x.beta_12@alpha_2*x.beta_22@alpha_2"
      " + x.beta_12@alpha_1*x.beta_21@alpha_1*x.beta_12@alpha_2*x.beta_22@alpha_2"
      " + x.beta_12@alpha_1*x.beta_22@alpha_1*x.beta_11@alpha_2*x.beta_22@alpha_2"
      " + x.beta_12@alpha_1*x.beta_22@alpha_1*x.beta_12@alpha_2*x.beta_21@alpha_2"
      " + x.beta_12@alpha_1*x.beta_22@alpha_1*x.beta_12@alpha_2*x.beta_22@alpha_2*t";
  MultiPoly expected = P(expected_text);
  CHECK(expected.term_count() == 16);

  MultiPoly by_enumeration = transition_polynomial(tensor.product);
  MultiPoly by_substitution = brylawski_rhs(z1, z2, "e", tensor.naming);
  CHECK(by_enumeration == expected);
  CHECK(by_substitution == expected);
}

TEST_CASE("substitution side reduces to a renaming when slack sums are monomials") {
  // both factors are the same two-class fixture; each y_j is one variable
  Multimatroid z1 = fixture("small_z1.mm");
  TensorResult tensor = tensor_product(z1, z1, "alpha_1");
  CHECK(transition_polynomial(tensor.product) == brylawski_rhs(z1, z1, "alpha_1", tensor.naming));
}

TEST_CASE("t-degree of every term is at most the class count") {
  for (const char* name : {"example_a.mm", "example_b.mm", "small_z2.mm"}) {
    Multimatroid z = fixture(name);
    MultiPoly q = transition_polynomial(z);
    CHECK(q.max_half_exponent("t") <= 2 * static_cast<int>(z.carrier().class_count()));
    CHECK(q.integral_exponents());
    CHECK(q.nonnegative_exponents());
  }
}
