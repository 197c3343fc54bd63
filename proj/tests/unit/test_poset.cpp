#include <doctest.h>

#include "qposet/catalog.hpp"
#include "qposet/enumerate.hpp"
#include "qposet/error.hpp"
#include "support.hpp"

using namespace qposet;
using namespace qposet::test;

namespace {

std::vector<FinitePoset> small_posets(std::size_t max_n) {
  EnumerationSpec spec;
  spec.max_n = max_n;
  spec.cls = StructureClass::BoundedPoset;
  std::vector<FinitePoset> out;
  for (auto& i : enumerate_all(spec)) out.push_back(i.poset);
  return out;
}

}  // namespace

TEST_SUITE("poset") {
  TEST_CASE("construction validates the order") {
    const std::vector<ElementPair> cycle{{0, 1}, {1, 2}, {2, 1}, {2, 3}};
    try {
      (void)FinitePoset::from_covers(4, cycle);
      FAIL("cycle accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotAntisymmetric);
    }

    const std::vector<ElementPair> two_tops{{0, 1}, {0, 2}};
    try {
      (void)FinitePoset::from_covers(3, two_tops);
      FAIL("unbounded accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotBounded);
    }

    std::vector<Subset> not_transitive{{0, 1}, {1, 2}, {2}};
    CHECK_THROWS_AS((void)FinitePoset::from_relation(not_transitive), Error);

    const std::vector<ElementPair> out_of_range{{0, 5}};
    CHECK_THROWS_AS((void)FinitePoset::from_covers(2, out_of_range), Error);
    CHECK_THROWS_AS((void)FinitePoset::from_covers(kMaxElements + 1, {}), Error);
  }

  TEST_CASE("chain basics") {
    const auto c = chain(2).poset();
    CHECK(c.size() == 2);
    CHECK(c.bottom() == 0);
    CHECK(c.top() == 1);
    CHECK(c.leq(0, 1));
    CHECK_FALSE(c.leq(1, 0));
    CHECK(covers(c) == std::vector<ElementPair>{{0, 1}});
    CHECK(c.label(0) == "0");
    CHECK(c.label(1) == "1");
    CHECK_THROWS_AS(c.check(2), Error);
  }

  TEST_CASE("cones on the figures") {
    const auto f2a = poset("fig2a");
    const auto f1a = poset("fig1a");
    const auto f2b = poset("fig2b");

    CHECK(lower_cone(f2a, set(f2a, {"a'", "b'"})) == set(f2a, {"0"}));
    CHECK(lower_cone(f1a, set(f1a, {"a'", "b'"})) == set(f1a, {"0", "a", "b"}));
    CHECK(upper_cone(f2b, set(f2b, {"b", "d"})) == set(f2b, {"b'", "1"}));
    CHECK(upper_cone(f1a, set(f1a, {"a", "b"})) == set(f1a, {"a'", "b'", "1"}));
    CHECK(max_of(f1a, lower_cone(f1a, set(f1a, {"a'", "b'"}))) == set(f1a, {"a", "b"}));
    CHECK(min_of(f2b, upper_cone(f2b, set(f2b, {"b", "d"}))) == set(f2b, {"b'"}));
    CHECK(lower_cone(f2a, Subset{}) == f2a.all());
    CHECK(upper_cone(f2a, Subset{}) == f2a.all());
  }

  TEST_CASE("subset relations") {
    const auto f1a = poset("fig1a");
    const auto f2a = poset("fig2a");
    CHECK(subset_rel(f1a, set(f1a, {"a"}), set(f1a, {"a'", "b'"}), SubsetRelation::Leq));
    CHECK(subset_rel(f2a, set(f2a, {"a", "b"}), set(f2a, {"a"}), SubsetRelation::Leq2));
    CHECK_FALSE(subset_rel(f2a, set(f2a, {"a", "b"}), set(f2a, {"a"}), SubsetRelation::Leq1));
    CHECK(subset_rel(f2a, set(f2a, {"a"}), set(f2a, {"a", "b"}), SubsetRelation::Leq1));
    CHECK(subset_rel(f2a, set(f2a, {"a", "b"}), set(f2a, {"a", "b"}), SubsetRelation::Approx2));
  }

  TEST_CASE("meets and joins") {
    const auto f1a = poset("fig1a");
    const auto f2b = poset("fig2b");
    CHECK_FALSE(join(f1a, el(f1a, "a"), el(f1a, "b")).has_value());
    CHECK(meet(f2b, el(f2b, "d'"), el(f2b, "b'")) == el(f2b, "b"));
    CHECK(join(f1a, el(f1a, "a"), el(f1a, "a'")) == el(f1a, "a'"));
    try {
      (void)join_each(f1a, el(f1a, "a"), set(f1a, {"b"}));
      FAIL("missing join not reported");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::JoinMissing);
    }
  }

  TEST_CASE("lattice and distributivity verdicts") {
    struct Row {
      const char* name;
      bool lattice, distributive;
    };
    for (auto r : {Row{"fig2a", true, false}, Row{"fig2b", false, false}, Row{"fig1a", false, true},
                   Row{"fig7", true, false}, Row{"fig8", true, false}, Row{"fig4", true, false},
                   Row{"fig3", true, true}, Row{"cube", true, true}, Row{"chain2", true, true}}) {
      CAPTURE(r.name);
      const auto p = poset(r.name);
      CHECK(is_lattice(p) == r.lattice);
      CHECK(is_distributive_poset(p) == r.distributive);
    }
  }

  TEST_CASE("cover relations") {
    const auto f3 = poset("fig3");
    CHECK(covers(f3) == std::vector<ElementPair>{{el(f3, "0"), el(f3, "x")},
                                                 {el(f3, "x"), el(f3, "x'")},
                                                 {el(f3, "x'"), el(f3, "1")}});
    CHECK(covers(poset("fig4")).size() == 6);

    const auto f5 = poset("fig5");
    std::vector<ElementPair> expected;
    for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
             {"0", "a"}, {"0", "b'"}, {"a", "b"}, {"a", "c"}, {"a", "c'"},
             {"b", "1"}, {"b'", "a'"}, {"c", "a'"}, {"c'", "a'"}, {"a'", "1"}})
      expected.emplace_back(el(f5, x), el(f5, y));
    std::sort(expected.begin(), expected.end());
    CHECK(covers(f5) == expected);
  }

  TEST_CASE("induced subposets keep labels") {
    const auto f1a = poset("fig1a");
    const auto sub = induced(f1a, f1a.up(el(f1a, "a")));
    CHECK(sub.size() == 4);
    CHECK(sub.label(sub.bottom()) == "a");
    CHECK(sub.label(sub.top()) == "1");
  }

  TEST_CASE("property: cones are intersections of principal cones") {
    for (const auto& p : small_posets(6)) {
      const std::size_t n = p.size();
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        Subset a;
        Subset l = p.all(), u = p.all();
        for (Element x = 0; x < n; ++x)
          if (mask >> x & 1U) {
            a.insert(x);
            l &= p.down(x);
            u &= p.up(x);
          }
        REQUIRE(lower_cone(p, a) == l);
        REQUIRE(upper_cone(p, a) == u);
        // LU and UL are closure operators.
        const auto lu = lower_cone(p, upper_cone(p, a));
        const auto ul = upper_cone(p, lower_cone(p, a));
        REQUIRE(a.is_subset_of(lu));
        REQUIRE(a.is_subset_of(ul));
        REQUIRE(lower_cone(p, upper_cone(p, lu)) == lu);
        REQUIRE(upper_cone(p, lower_cone(p, ul)) == ul);
      }
    }
  }

  TEST_CASE("property: singleton forms of the subset relations") {
    for (const auto& p : small_posets(6)) {
      const std::size_t n = p.size();
      for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        Subset a;
        for (Element x = 0; x < n; ++x)
          if (mask >> x & 1U) a.insert(x);
        for (Element y = 0; y < n; ++y) {
          const auto sy = Subset::singleton(y);
          REQUIRE(subset_rel(p, a, sy, SubsetRelation::Leq) ==
                  subset_rel(p, a, sy, SubsetRelation::Leq1));
          REQUIRE(subset_rel(p, sy, a, SubsetRelation::Leq) ==
                  subset_rel(p, sy, a, SubsetRelation::Leq2));
        }
      }
    }
  }

  TEST_CASE("property: meet and join agree with cone extremes") {
    for (const auto& p : small_posets(7)) {
      for (Element x = 0; x < p.size(); ++x)
        for (Element y = 0; y < p.size(); ++y) {
          const auto mu = min_upper(p, x, y);
          const auto ml = max_lower(p, x, y);
          const auto j = join(p, x, y);
          const auto m = meet(p, x, y);
          REQUIRE(j.has_value() == (mu.size() == 1 && upper_cone(p, x, y).is_subset_of(p.up(*mu.front()))));
          if (j) REQUIRE(mu == Subset::singleton(*j));
          REQUIRE(m.has_value() == (ml.size() == 1 && lower_cone(p, x, y).is_subset_of(p.down(*ml.front()))));
          if (m) REQUIRE(ml == Subset::singleton(*m));
        }
    }
  }

  TEST_CASE("property: finite posets are mub/mlb complete and have maximality") {
    for (const auto& p : small_posets(7)) {
      REQUIRE(is_mub_complete(p));
      REQUIRE(is_mlb_complete(p));
      REQUIRE(has_maximality(p));
    }
    for (const auto& name : figure_names()) {
      const auto p = poset(name);
      CHECK(is_mub_complete(p));
      CHECK(is_mlb_complete(p));
      CHECK(has_maximality(p));
    }
  }

  TEST_CASE("property: distributive identities agree") {
    for (const auto& p : small_posets(7)) {
      const bool d = is_distributive_poset(p);
      for (bool v : distributive_identities(p)) REQUIRE(v == d);
      const auto [first, second] = distributive_identities_nary(p, 3);
      REQUIRE(first == d);
      REQUIRE(second == d);
    }
  }
}
