#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mmtp/io.hpp"
#include "mmtp/multimatroid.hpp"

using namespace mmtp;

namespace {

const std::string kFixtures = MMTP_FIXTURE_DIR;

Multimatroid fixture(const std::string& name) { return read_multimatroid(kFixtures + "/" + name); }

Multimatroid one_class(std::vector<std::set<std::string>> bases) {
  Carrier carrier({SkewClass{"e", {"e_1", "e_2"}, true}});
  return Multimatroid(carrier, bases);
}

}  // namespace

TEST_CASE("rank from the sixteen-basis fixture") {
  Multimatroid za = fixture("example_a.mm");
  CHECK(za.rank_of({"a_bar", "b_bar", "c_dot"}) == 1);
  CHECK(za.rank_of({}) == 0);
  CHECK(za.rank_of({"a_dot", "b_bar"}) == 2);

  // every non-basis transversal other than {a_bar,b_bar,c_dot} has rank two
  int rank_two = 0, rank_zero_nullity = 0;
  for (const Selection& t : za.transversals()) {
    int r = za.rank(t);
    if (za.nullity(t) == 0) ++rank_zero_nullity;
    if (r == 2) ++rank_two;
  }
  CHECK(rank_zero_nullity == 16);
  CHECK(rank_two == 10);
}

TEST_CASE("nullity") {
  Multimatroid za = fixture("example_a.mm");
  CHECK(za.nullity_of({"a_bar", "b_bar", "c_dot"}) == 2);
  CHECK(za.nullity_of({}) == 0);
  for (const auto& basis : za.basis_sets()) CHECK(za.nullity_of(basis) == 0);
}

TEST_CASE("axiom checking") {
  CHECK(fixture("example_a.mm").check_axioms().ok());
  CHECK(fixture("example_b.mm").check_axioms().ok());
  CHECK(one_class({{"e_1"}, {"e_2"}}).check_axioms().ok());

  // no bases forces rank zero everywhere, which breaks skew-pair growth at the empty set
  AxiomReport report = one_class({}).check_axioms();
  CHECK_FALSE(report.ok());
  bool r2_at_empty = false;
  for (const std::string& v : report.violations)
    if (v.find("R2") != std::string::npos && v.find("{}") != std::string::npos) r2_at_empty = true;
  CHECK(r2_at_empty);
}

TEST_CASE("tightness and slack elements") {
  Multimatroid za = fixture("example_a.mm");
  CHECK(za.is_tight());
  CHECK(za.slack_element({"a_dot", "b_bar"}) == "c_dot");
  CHECK(za.slack_element({"b_dot", "c_bar"}) == "a_dot");

  Multimatroid z1 = fixture("small_z1.mm");
  CHECK(z1.is_tight());
  CHECK(z1.slack_element({"alpha_21"}) == "alpha_11");

  CHECK(fixture("example_b.mm").is_tight());
  CHECK(fixture("small_z2.mm").is_tight());

  CHECK_THROWS_AS(za.slack_element({"a_dot"}), Error);  // not a near-transversal
}

TEST_CASE("slack uniqueness over every near-transversal of tight fixtures") {
  for (const char* name : {"example_a.mm", "example_b.mm", "small_z1.mm", "small_z2.mm"}) {
    Multimatroid z = fixture(name);
    for (const Selection& near : z.near_transversals()) {
      std::size_t missing = 0;
      for (std::size_t c = 0; c < near.size(); ++c)
        if (near[c] == kAbsent) missing = c;
      int count = 0;
      int base = z.rank(near);
      for (std::size_t m = 0; m < z.carrier().skew_class(missing).elems.size(); ++m) {
        Selection ext = near;
        ext[missing] = static_cast<int>(m);
        if (z.rank(ext) == base) ++count;
      }
      CHECK(count == 1);
    }
  }
}

TEST_CASE("elementary minors") {
  Multimatroid za = fixture("example_a.mm");
  Multimatroid minor = za.minor("a_dot");
  CHECK(minor.carrier().class_count() == 2);
  CHECK(minor.is_tight());

  // r_minor(S) + r({e}) = r(S + e) on every subtransversal
  for (const char* pin : {"a_dot", "a_bar", "b_hat", "c_bar"}) {
    Multimatroid m = za.minor(pin);
    int pin_rank = za.rank_of({pin});
    for (const Selection& s : m.subtransversals()) {
      std::set<std::string> elems = m.to_elements(s);
      std::set<std::string> with = elems;
      with.insert(pin);
      CHECK(m.rank_of(elems) + pin_rank == za.rank_of(with));
    }
  }

  Multimatroid empty = one_class({{"e_1"}, {"e_2"}}).minor("e_1");
  CHECK(empty.carrier().class_count() == 0);
  CHECK(empty.transversals().size() == 1);  // just the empty set

  CHECK_THROWS_AS(za.minor("nope"), Error);
}

TEST_CASE("enumeration") {
  Multimatroid za = fixture("example_a.mm");
  CHECK(za.transversals().size() == 27);
  CHECK(za.near_transversals().size() == 27);  // 3 classes * 9
  CHECK(za.subtransversals().size() == 64);

  Multimatroid z2 = fixture("small_z2.mm");
  int missing_e = 0;
  std::size_t e_idx = z2.carrier().class_index("e");
  for (const Selection& near : z2.near_transversals())
    if (near[e_idx] == kAbsent) ++missing_e;
  CHECK(missing_e == 4);
}

TEST_CASE("singular elements and classes") {
  Multimatroid za = fixture("example_a.mm");
  for (const SkewClass& sc : za.carrier().classes()) {
    CHECK_FALSE(za.is_singular_class(sc.name));
    for (const std::string& e : sc.elems) CHECK_FALSE(za.is_singular_element(e));
  }

  // e_2 appears in no basis
  Multimatroid z = one_class({{"e_1"}});
  CHECK(z.is_singular_element("e_2"));
  CHECK(z.is_singular_class("e"));
}

TEST_CASE("rank is monotone and submodular on subtransversals") {
  for (const char* name : {"example_a.mm", "small_z2.mm"}) {
    Multimatroid z = fixture(name);
    auto subs = z.subtransversals();
    for (const Selection& a : subs) {
      for (const Selection& b : subs) {
        Selection join = a, meet = a;
        bool compatible = true;
        for (std::size_t c = 0; c < a.size(); ++c) {
          if (a[c] != kAbsent && b[c] != kAbsent && a[c] != b[c]) compatible = false;
          if (a[c] == kAbsent) join[c] = b[c];
          if (b[c] == kAbsent || a[c] != b[c]) meet[c] = kAbsent;
        }
        if (!compatible) continue;
        CHECK(z.rank(join) + z.rank(meet) <= z.rank(a) + z.rank(b));
        CHECK(z.rank(a) <= z.rank(join));
      }
    }
  }
}

TEST_CASE("bases of nondegenerate fixtures are transversals") {
  for (const char* name : {"example_a.mm", "example_b.mm", "small_z1.mm", "small_z2.mm"}) {
    Multimatroid z = fixture(name);
    for (const auto& independent : z.maximal_independent_sets())
      CHECK(independent.size() == z.carrier().class_count());
  }
}

TEST_CASE("restriction keeps ranks") {
  Multimatroid za = fixture("example_a.mm");
  Multimatroid r = za.restrict_to({"a_dot", "a_bar", "b_dot", "b_bar", "c_dot", "c_bar"});
  CHECK(r.carrier().class_count() == 3);
  for (const Selection& s : r.subtransversals()) CHECK(r.rank(s) == za.rank_of(r.to_elements(s)));
}

TEST_CASE("equality is label and rank equality") {
  Multimatroid za = fixture("example_a.mm");
  CHECK(za.equals(za));
  CHECK(za.equals(parse_multimatroid(multimatroid_to_json(za))));
  CHECK_FALSE(za.equals(fixture("example_b.mm")));
}

TEST_CASE("selection validation") {
  Multimatroid za = fixture("example_a.mm");
  CHECK_THROWS_AS(za.rank_of({"a_dot", "a_bar"}), Error);   // meets a class twice
  CHECK_THROWS_AS(za.rank_of({"zebra"}), Error);            // unknown element
}
