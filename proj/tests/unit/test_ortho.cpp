#include <doctest.h>

#include "qposet/catalog.hpp"
#include "qposet/enumerate.hpp"
#include "qposet/error.hpp"
#include "support.hpp"

using namespace qposet;
using namespace qposet::test;

namespace {

std::vector<OrthoPoset> ortho_universe(std::size_t max_n) {
  EnumerationSpec spec;
  spec.max_n = max_n;
  spec.cls = StructureClass::Ortho;
  std::vector<OrthoPoset> out;
  for (auto& i : enumerate_all(spec)) out.push_back(*i.ortho);
  return out;
}

std::vector<Element> w(const OrthoPoset& o, std::vector<std::string> labels) {
  return elems(o.poset(), labels);
}

}  // namespace

TEST_SUITE("ortho") {
  TEST_CASE("involution validation") {
    const auto p = chain(3).poset();
    CHECK_NOTHROW((void)OrthoPoset::make(p, {2, 1, 0}));
    try {
      (void)OrthoPoset::make(p, {1, 0, 2});
      FAIL("not antitone accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::AntitoneViolation);
    }
    try {
      (void)OrthoPoset::make(p, {2, 0, 1});
      FAIL("not an involution accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvolutionViolation);
    }
    const auto loose = OrthoPoset::make_involutive(p, {1, 0, 2});
    CHECK_FALSE(loose.antitone());
  }

  TEST_CASE("figure profiles") {
    struct Row {
      const char* name;
      bool orthogonal, para, regular, complementation, wb, kleene;
    };
    for (auto r : {Row{"fig1a", false, true, true, false, true, false},
                   Row{"fig1b", false, true, true, true, false, false},
                   Row{"fig1c", false, true, true, false, true, false},
                   Row{"fig2a", true, true, false, false, false, false},
                   Row{"fig2b", true, true, false, false, false, false},
                   Row{"fig3", true, true, true, false, true, true},
                   Row{"fig4", true, false, true, true, true, false},
                   Row{"fig5", true, true, true, false, false, false},
                   Row{"fig7", true, false, true, true, true, false},
                   Row{"fig8", true, true, true, false, false, false},
                   Row{"cube", true, true, true, true, true, true},
                   Row{"chain2", true, true, true, true, true, true},
                   Row{"b4", true, true, true, true, true, true}}) {
      CAPTURE(r.name);
      const auto o = ortho(r.name);
      CHECK(is_orthogonal_poset(o).holds == r.orthogonal);
      CHECK(is_paraorthomodular(o).holds == r.para);
      CHECK(is_sharply_paraorthomodular(o).holds == (r.para && r.orthogonal));
      CHECK(is_regular(o).holds == r.regular);
      CHECK(is_complementation(o).holds == r.complementation);
      CHECK(is_weakly_boolean(o).holds == r.wb);
      CHECK(is_kleene_lattice(o) == r.kleene);
    }
  }

  TEST_CASE("witnesses") {
    const auto f2b = ortho("fig2b");
    CHECK(is_orthomodular(f2b).witness == w(f2b, {"b", "d'"}));
    CHECK(is_weakly_boolean(f2b).witness == w(f2b, {"a", "d"}));

    const auto f7 = ortho("fig7");
    CHECK(is_paraorthomodular(f7).witness == w(f7, {"a", "b'"}));
    CHECK(is_orthomodular(f7).witness == w(f7, {"a", "b'"}));

    const auto f4 = ortho("fig4");
    CHECK(is_paraorthomodular(f4).witness == w(f4, {"x", "y"}));

    const auto f2a = ortho("fig2a");
    CHECK(is_orthomodular(f2a).witness == w(f2a, {"a", "1"}));
    CHECK(is_weakly_boolean(f2a).witness == w(f2a, {"a", "b"}));

    CHECK(is_orthomodular(ortho("fig3")).witness == w(ortho("fig3"), {"x", "1"}));
    CHECK(is_orthomodular(ortho("fig5")).witness == w(ortho("fig5"), {"a", "b"}));
    CHECK(is_orthomodular(ortho("fig8")).witness == w(ortho("fig8"), {"d", "c'"}));
    CHECK(is_weakly_boolean(ortho("fig1b")).witness == w(ortho("fig1b"), {"b", "c"}));
    CHECK(is_weakly_boolean(ortho("fig5")).witness == w(ortho("fig5"), {"b'", "c"}));
    CHECK(is_weakly_boolean(ortho("fig8")).witness == w(ortho("fig8"), {"a", "b"}));

    // Non-orthogonal structures fail orthomodularity on orthogonality first.
    const auto f1a = ortho("fig1a");
    const auto v = is_orthomodular(f1a);
    CHECK_FALSE(v.holds);
    CHECK(v.witness == w(f1a, {"a", "b"}));
  }

  TEST_CASE("orthomodular structures") {
    for (const char* name : {"cube", "chain2", "b4"}) {
      CAPTURE(name);
      const auto o = ortho(name);
      CHECK(is_orthomodular(o).holds);
      CHECK(is_boolean_algebra(o));
      const auto v = orthomodular_variants(o);
      CHECK(v.om);
      CHECK(v.om_u);
      CHECK(v.om_ue);
    }
    CHECK(is_orthomodular(boolean_algebra(3)).holds);
  }

  TEST_CASE("regularity") {
    CHECK(is_regular(chain(3)).holds);
    const auto f2a = ortho("fig2a");
    CHECK(is_regular(f2a).witness == w(f2a, {"a", "b"}));
  }

  TEST_CASE("benzene") {
    const auto b = benzene();
    const auto hit = find_benzene(b);
    REQUIRE(hit.has_value());
    CHECK(hit->first == el(b, "x"));
    CHECK(hit->second == el(b, "y"));
    CHECK_FALSE(find_benzene(ortho("fig4")) == std::nullopt);
    CHECK(find_benzene(ortho("fig7")).has_value());
    CHECK_FALSE(find_benzene(ortho("fig2a")).has_value());
  }

  TEST_CASE("property: orthogonality is symmetric") {
    for (const auto& o : ortho_universe(7))
      for (Element x = 0; x < o.size(); ++x)
        for (Element y = 0; y < o.size(); ++y) REQUIRE(orthogonal(o, x, y) == orthogonal(o, y, x));
  }

  TEST_CASE("property: orthomodular implies paraorthomodular") {
    for (const auto& o : ortho_universe(7))
      if (is_orthomodular(o).holds) REQUIRE(is_paraorthomodular(o).holds);
  }

  TEST_CASE("property: orthomodularity variants agree on orthogonal posets") {
    for (const auto& o : ortho_universe(7)) {
      if (!is_orthogonal_poset(o).holds) continue;
      const auto v = orthomodular_variants(o);
      REQUIRE(v.om == v.om_u);
      REQUIRE(v.om == v.om_ue);
      REQUIRE(v.om == is_orthomodular(o).holds);
    }
  }

  TEST_CASE("property: weakly Boolean orthomodular posets with maximality are Boolean algebras") {
    for (const auto& o : ortho_universe(7))
      if (is_weakly_boolean(o).holds && is_orthomodular(o).holds && has_maximality(o.poset()))
        REQUIRE(is_boolean_algebra(o));
  }

  TEST_CASE("property: Kleene lattices satisfy x ∧ y = 0 implies x <= y'") {
    std::size_t seen = 0;
    for (const auto& o : ortho_universe(7)) {
      if (!is_kleene_lattice(o)) continue;
      ++seen;
      for (Element x = 0; x < o.size(); ++x)
        for (Element y = 0; y < o.size(); ++y)
          if (meet_is_bottom(o.poset(), x, y)) REQUIRE(orthogonal(o, x, y));
    }
    CHECK(seen > 0);
  }

  TEST_CASE("property: hexagon present exactly when not paraorthomodular") {
    for (const auto& o : ortho_universe(7))
      REQUIRE(find_benzene(o).has_value() == !is_paraorthomodular(o).holds);
  }
}
