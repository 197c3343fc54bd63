#include <doctest.h>

#include "qposet/adjoint.hpp"
#include "qposet/catalog.hpp"
#include "qposet/enumerate.hpp"
#include "qposet/error.hpp"
#include "support.hpp"

using namespace qposet;
using namespace qposet::test;

namespace {

using Triple = std::vector<std::string>;

void check_report(const OrthoPoset& o, const AdjointnessReport& r, const std::vector<Triple>& firsts) {
  const Verdict* v[] = {&r.a, &r.b, &r.a21, &r.b12};
  for (std::size_t k = 0; k < 4; ++k) {
    CAPTURE(k);
    if (firsts.empty()) {
      CHECK(v[k]->holds);
    } else {
      CHECK_FALSE(v[k]->holds);
      CHECK(v[k]->witness == elems(o.poset(), firsts[k]));
    }
  }
}

std::vector<OrthoPoset> universe(std::size_t max_n, StructureClass cls = StructureClass::Ortho) {
  EnumerationSpec spec;
  spec.max_n = max_n;
  spec.cls = cls;
  std::vector<OrthoPoset> out;
  for (auto& i : enumerate_all(spec)) out.push_back(*i.ortho);
  return out;
}

}  // namespace

TEST_SUITE("adjoint") {
  TEST_CASE("Boolean algebras are adjoint everywhere") {
    for (const char* name : {"cube", "chain2", "b4"}) {
      CAPTURE(name);
      const auto o = ortho(name);
      check_report(o, check_conditions(o, sasaki_proj(o), sasaki_impl(o)), {});
      check_report(o, check_conditions(o, sasaki_proj(o), impl_I(o)), {});
      const auto r = residuate(o, impl_I(o));
      CHECK(r.adjoint());
      CHECK(adjebp_equiv(o).left);
      CHECK(adji_consequences(o).passed());
    }
  }

  TEST_CASE("first failing triples") {
    struct Row {
      const char* name;
      std::vector<Triple> ss, si;
      std::optional<std::pair<const char*, const char*>> no_least;
    };
    const std::vector<Row> rows = {
        {"fig2a",
         {{"a", "b", "b"}, {"0", "a", "0"}, {"a", "b", "b"}, {"0", "a", "0"}},
         {{"a", "0", "b"}, {"0", "a", "0"}, {"a", "0", "b"}, {"0", "a", "0"}},
         std::nullopt},
        {"fig2b",
         {{"b", "c", "c"}, {"0", "b", "0"}, {"b", "c", "c"}, {"0", "b", "0"}},
         {{"a", "d'", "a'"}, {"0", "b", "0"}, {"a", "d'", "a'"}, {"0", "b", "0"}},
         std::pair{"a", "a"}},
        {"fig4",
         {{"y", "x'", "0"}, {"x", "y", "x"}, {"y", "x'", "0"}, {"x", "y", "x"}},
         {{"y", "y'", "x"}, {"x", "y", "x"}, {"y", "y'", "x"}, {"x", "y", "x"}},
         std::pair{"y", "x'"}},
        {"fig7",
         {{"a'", "b'", "0"}, {"a", "b'", "a"}, {"a'", "b'", "0"}, {"a", "b'", "a"}},
         {{"a'", "a", "b"}, {"a", "b'", "a"}, {"a'", "a", "b"}, {"a", "b'", "a"}},
         std::pair{"a'", "b'"}},
        {"fig3",
         {{"1", "x", "x"}, {"0", "x", "0"}, {"1", "x", "x"}, {"0", "x", "0"}},
         {{"1", "0", "x"}, {"0", "x", "0"}, {"1", "0", "x"}, {"0", "x", "0"}},
         std::nullopt},
    };
    for (const auto& r : rows) {
      CAPTURE(r.name);
      const auto o = ortho(r.name);
      check_report(o, check_conditions(o, sasaki_proj(o), sasaki_impl(o)), r.ss);
      check_report(o, check_conditions(o, sasaki_proj(o), impl_I(o)), r.si);
      const auto res = try_residuate(o, impl_I(o));
      CHECK_FALSE(res.adjoint());
      if (r.no_least) {
        REQUIRE(res.no_least.has_value());
        CHECK(*res.no_least == ElementPair{el(o, r.no_least->first), el(o, r.no_least->second)});
        try {
          (void)residuate(o, impl_I(o));
          FAIL("missing least element not reported");
        } catch (const Error& e) {
          CHECK(e.kind() == ErrorKind::NoLeastElement);
        }
      } else {
        CHECK(res.product.has_value());
        CHECK_FALSE(res.no_least.has_value());
      }
    }
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS((void)sasom_equiv(ortho("fig1a")), Error);
    CHECK_THROWS_AS((void)adjebp_equiv(ortho("fig1a")), Error);
    CHECK_THROWS_AS((void)omidentity_equiv(ortho("fig2b")), Error);
    CHECK_THROWS_AS((void)adji_consequences(ortho("fig2a")), Error);
    CHECK_FALSE(th3_check(ortho("fig1a")).applicable);
  }

  TEST_CASE("property: adjointness statements over the ortho universe") {
    for (const auto& o : universe(7)) {
      if (is_lattice(o.poset())) REQUIRE(omidentity_equiv(o).agree());
      if (!is_orthogonal_poset(o).holds) continue;
      REQUIRE(lemma_AB_equiv(o));
      REQUIRE(adjibp_check(o));
      REQUIRE(sasom_equiv(o).agree());
      const auto t = th3_check(o);
      if (!t.passed()) FAIL_CHECK(t.violations.front().clause);
      const auto e = adjebp_equiv(o);
      REQUIRE(e.agree());
      if (e.left) {
        const auto c = adji_consequences(o);
        if (!c.passed()) FAIL_CHECK(c.violations.front().clause);
      }
    }
  }

  TEST_CASE("property: the OM identity on involutive lattices") {
    std::size_t om = 0;
    for (const auto& o : universe(6, StructureClass::InvolutiveLattice)) {
      const auto e = omidentity_equiv(o);
      REQUIRE(e.agree());
      om += e.left;
    }
    CHECK(om > 0);
  }
}
