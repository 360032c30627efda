#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "mmtp/compose.hpp"
#include "mmtp/io.hpp"

using namespace mmtp;

namespace {

const std::string kFixtures = MMTP_FIXTURE_DIR;

Multimatroid fixture(const std::string& name) { return read_multimatroid(kFixtures + "/" + name); }

std::vector<std::set<std::string>> sorted(std::vector<std::set<std::string>> sets) {
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace

TEST_CASE("slack partitions of the two three-class fixtures") {
  Multimatroid za = fixture("example_a.mm");
  auto xs = slack_partition(za, "a");
  CHECK(sorted(xs["a_dot"]) == sorted({{"b_dot", "c_bar"}, {"b_hat", "c_hat"}}));
  CHECK(sorted(xs["a_bar"]) ==
        sorted({{"b_dot", "c_dot"}, {"b_bar", "c_bar"}, {"b_bar", "c_hat"}, {"b_hat", "c_dot"}}));
  CHECK(sorted(xs["a_hat"]) == sorted({{"b_dot", "c_hat"}, {"b_hat", "c_bar"}}));

  Multimatroid zb = fixture("example_b.mm");
  auto ys = slack_partition(zb, "e");
  CHECK(sorted(ys["e_dot"]) == sorted({{"f_dot", "g_bar"}, {"f_bar", "g_dot"}}));
  CHECK(sorted(ys["e_bar"]) == sorted({{"f_dot", "g_dot"}, {"f_bar", "g_bar"}}));
  CHECK(sorted(ys["e_hat"]) ==
        sorted({{"f_dot", "g_hat"}, {"f_bar", "g_hat"}, {"f_hat", "g_dot"}, {"f_hat", "g_bar"}}));
}

TEST_CASE("two-sum of the three-class fixtures has the forty-four product bases") {
  Multimatroid za = fixture("example_a.mm");
  Multimatroid zb = fixture("example_b.mm");
  Multimatroid sum = two_sum(za, "a", zb, "e");

  CHECK(sum.carrier().class_count() == 4);
  CHECK(sum.carrier().has_class("b"));
  CHECK(sum.carrier().has_class("c"));
  CHECK(sum.carrier().has_class("f"));
  CHECK(sum.carrier().has_class("g"));

  auto xs = slack_partition(za, "a");
  auto ys = slack_partition(zb, "e");
  std::vector<std::set<std::string>> expected;
  auto cross = [&](const std::vector<std::set<std::string>>& lhs,
                   const std::vector<std::set<std::string>>& rhs) {
    for (const auto& x : lhs)
      for (const auto& y : rhs) {
        std::set<std::string> basis = x;
        basis.insert(y.begin(), y.end());
        expected.push_back(basis);
      }
  };
  auto join = [](std::vector<std::set<std::string>> a, const std::vector<std::set<std::string>>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  cross(xs["a_dot"], join(ys["e_bar"], ys["e_hat"]));
  cross(xs["a_bar"], join(ys["e_dot"], ys["e_hat"]));
  cross(xs["a_hat"], join(ys["e_dot"], ys["e_bar"]));
  CHECK(expected.size() == 44);
  CHECK(sorted(sum.basis_sets()) == sorted(expected));
  CHECK(sum.is_tight());
}

TEST_CASE("two-sum rank formula agrees with the composite rank everywhere") {
  Multimatroid za = fixture("example_a.mm");
  Multimatroid zb = fixture("example_b.mm");
  Multimatroid sum = two_sum(za, "a", zb, "e");

  std::size_t la = za.carrier().class_index("a");
  std::size_t re = zb.carrier().class_index("e");
  for (const Selection& n1 : za.near_transversals()) {
    if (n1[la] != kAbsent) continue;
    for (const Selection& n2 : zb.near_transversals()) {
      if (n2[re] != kAbsent) continue;
      std::set<std::string> t1 = za.to_elements(n1), t2 = zb.to_elements(n2);
      std::set<std::string> both = t1;
      both.insert(t2.begin(), t2.end());
      int predicted = two_sum_rank_formula(za, "a", t1, zb, "e", t2);
      CHECK(predicted == sum.rank_of(both));
      // independent parts with distinct slack positions assemble to a basis
      if (za.nullity(n1) == 0 && zb.nullity(n2) == 0) {
        bool distinct = za.slack_member(n1, la) != zb.slack_member(n2, re);
        CHECK((predicted == static_cast<int>(both.size())) == distinct);
      }
    }
  }
}

TEST_CASE("two-sum validates its inputs") {
  Multimatroid za = fixture("example_a.mm");
  Multimatroid zb = fixture("example_b.mm");
  Multimatroid z1 = fixture("small_z1.mm");

  CHECK_THROWS_AS(two_sum(za, "a", z1, "alpha_1"), Error);  // size mismatch

  // unordered class
  CHECK_THROWS_AS(two_sum(za, "a", zb, "f"), Error);

  // a singular class: e_2 appears in no basis
  Carrier carrier({SkewClass{"a", {"a_1", "a_2"}, true}, SkewClass{"s", {"s_1", "s_2"}, true}});
  Multimatroid singular(carrier, {{"a_1", "s_1"}, {"a_2", "s_1"}});
  CHECK_THROWS_AS(two_sum(singular, "s", z1, "alpha_1"), Error);
}

TEST_CASE("tensor product of the two-class fixtures") {
  Multimatroid z1 = fixture("small_z1.mm");
  Multimatroid z2 = fixture("small_z2.mm");
  TensorResult result = tensor_product(z1, z2, "e");
  const Multimatroid& product = result.product;

  CHECK(product.carrier().class_count() == 4);
  for (const char* cls : {"beta_1@alpha_1", "beta_2@alpha_1", "beta_1@alpha_2", "beta_2@alpha_2"})
    CHECK(product.carrier().has_class(cls));

  std::vector<std::set<std::string>> expected = {
      {"beta_11@alpha_1", "beta_22@alpha_1", "beta_12@alpha_2", "beta_22@alpha_2"},
      {"beta_12@alpha_1", "beta_21@alpha_1", "beta_12@alpha_2", "beta_22@alpha_2"},
      {"beta_12@alpha_1", "beta_22@alpha_1", "beta_11@alpha_2", "beta_22@alpha_2"},
      {"beta_12@alpha_1", "beta_22@alpha_1", "beta_12@alpha_2", "beta_21@alpha_2"},
  };
  CHECK(sorted(product.basis_sets()) == sorted(expected));
  CHECK(product.is_tight());

  CHECK(result.naming.element_name("alpha_1", "beta_11") == "beta_11@alpha_1");
  CHECK(result.naming.element_name("alpha_2", "beta_22") == "beta_22@alpha_2");
}

TEST_CASE("two-sum composition order does not matter") {
  Multimatroid z1 = fixture("small_z1.mm");
  Multimatroid z2 = fixture("small_z2.mm");

  Multimatroid copy_a = renamed_copy(z2, "alpha_1", "e");
  Multimatroid copy_b = renamed_copy(z2, "alpha_2", "e");

  Multimatroid ab = two_sum(two_sum(z1, "alpha_1", copy_a, "e"), "alpha_2", copy_b, "e");
  Multimatroid ba = two_sum(two_sum(z1, "alpha_2", copy_b, "e"), "alpha_1", copy_a, "e");
  CHECK(ab.equals(ba));

  TensorResult tensor = tensor_product(z1, z2, "e");
  CHECK(ab.equals(tensor.product));
}

TEST_CASE("two-sum of two copies of the two-class fixture is tight") {
  Multimatroid z1 = fixture("small_z1.mm");
  Multimatroid copy = renamed_copy(z1, "other", "");
  Multimatroid sum = two_sum(z1, "alpha_1", copy, "alpha_2@other");
  CHECK(sum.is_tight());
}

TEST_CASE("nullity decomposition on composite fixtures") {
  Multimatroid za = fixture("example_a.mm");
  Multimatroid zb = fixture("example_b.mm");
  CHECK(nullity_decomposition_holds(za, {SumPart{"a", zb, "e"}}));

  Multimatroid z1 = fixture("small_z1.mm");
  Multimatroid z2 = fixture("small_z2.mm");
  CHECK(nullity_decomposition_holds(
      z1, {SumPart{"alpha_1", renamed_copy(z2, "alpha_1", "e"), "e"},
           SumPart{"alpha_2", renamed_copy(z2, "alpha_2", "e"), "e"}}));

  // no parts: the identity degenerates to n(T) = n(T)
  CHECK(nullity_decomposition_holds(za, {}));
}
