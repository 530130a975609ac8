#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relbim/cayley.hpp"

using namespace relbim;

namespace {

MonoidPresentation mon(const std::string& src) {
  return std::get<MonoidPresentation>(parse_presentation(src));
}

const char* kX3 = "kind: monoid\ngenerators: x\nrelation: x x x = x x\n";
const char* kIdem = "kind: monoid\ngenerators: x\nrelation: x x = x\n";

}  // namespace

TEST_CASE("enumerate x^3 = x^2") {
  auto m = enumerate_finite_monoid(mon(kX3), 5);
  REQUIRE(m);
  CHECK(m->size == 3);
  REQUIRE(m->elements.size() == 3);
  CHECK(m->elements[0].str() == "1");
  CHECK(m->elements[1].str() == "x");
  CHECK(m->elements[2].str() == "x x");
  CHECK(m->mul(2, 1) == 2);  // x^2 * x = x^2
  CHECK(m->mul(1, 1) == 2);
  CHECK(m->generator_image == std::vector<int>{1});
  auto a = mon(kX3).alphabet;
  CHECK(m->eval(word_from_string(a, "x x x x")) == 2);
}

TEST_CASE("enumerate x^2 = x") {
  auto m = enumerate_finite_monoid(mon(kIdem), 4);
  REQUIRE(m);
  CHECK(m->size == 2);
  CHECK(m->mul(1, 1) == 1);
}

TEST_CASE("infinite monoid does not stabilize") {
  auto comm = mon("kind: monoid\ngenerators: x y\nrelation: x y = y x\n");
  CHECK(!enumerate_finite_monoid(comm, 4));
  CHECK(!enumerate_finite_monoid(comm, 8));
  // the free monoid on one generator does not stabilize either
  CHECK(!enumerate_finite_monoid(mon("kind: monoid\ngenerators: x\n"), 6));
  CHECK_THROWS_AS(enumerate_finite_monoid(comm, 0), std::invalid_argument);
}

TEST_CASE("enumeration output satisfies relations and associativity exhaustively") {
  auto p = mon("kind: monoid\ngenerators: x y\nrelation: x x = 1\nrelation: y y = 1\n"
               "relation: x y = y x\n");
  auto m = enumerate_finite_monoid(p, 6);
  REQUIRE(m);
  CHECK(m->size == 4);  // the Klein four-group
  for (int a = 0; a < m->size; ++a)
    for (int b = 0; b < m->size; ++b)
      for (int c = 0; c < m->size; ++c)
        CHECK(m->mul(m->mul(a, b), c) == m->mul(a, m->mul(b, c)));
  for (const auto& [l, r] : p.relations) CHECK(m->eval(l) == m->eval(r));
}

TEST_CASE("left cayley complex of x^3 = x^2") {
  auto p = mon(kX3);
  auto m = enumerate_finite_monoid(p, 5);
  REQUIRE(m);
  auto c = build_cayley(*m, p, CayleySide::left);
  CHECK(c.nv == 3);
  CHECK(c.ne == 3);
  CHECK(c.nf == 3);
  // cell at the identity reduces to minus the loop at x^2
  int loop = c.edge_index(2, 0, 0);
  int cell = c.cell_index(0, 0, 0);
  CHECK(c.d2.at(loop, cell) == -1);
  int entries = 0;
  for (int e = 0; e < c.ne; ++e)
    if (c.d2.at(e, cell) != 0) ++entries;
  CHECK(entries == 1);

  auto rep = cayley_homology_check(c);
  CHECK(rep.passed());
  CHECK(rep.h0_rank == 1);
  CHECK(rep.h1_total.betti == 0);
  CHECK(rep.h1_total.torsion.empty());
  CHECK(rep.pi2_rank == 2);
  CHECK(rep.relation_term_rank == 1);
}

TEST_CASE("two-sided cayley complex of x^3 = x^2") {
  auto p = mon(kX3);
  auto m = enumerate_finite_monoid(p, 5);
  REQUIRE(m);
  auto c = build_cayley(*m, p, CayleySide::two_sided);
  CHECK(c.nv == 9);
  CHECK(c.ne == 9);
  CHECK(c.nf == 9);
  CHECK(c.component_count == 3);

  // component sizes 1, 2, 6 keyed by the product m * m'
  std::vector<int> size(3, 0);
  for (int v = 0; v < c.nv; ++v) ++size[c.vertex_component[v]];
  std::sort(size.begin(), size.end());
  CHECK(size == std::vector<int>{1, 2, 6});

  auto rep = cayley_homology_check(c);
  CHECK(rep.passed());
  CHECK(rep.h0_rank == 3);
  CHECK(rep.h1_total.betti == 0);
  REQUIRE(rep.h1_per_component.size() == 3);
  for (const auto& h : rep.h1_per_component) {
    CHECK(h.betti == 0);
    CHECK(h.torsion.empty());
  }
  CHECK(rep.pi2_rank == 6);
  CHECK(rep.euler_ok);
}

TEST_CASE("cayley complexes of x^2 = x") {
  auto p = mon(kIdem);
  auto m = enumerate_finite_monoid(p, 4);
  REQUIRE(m);

  auto left = build_cayley(*m, p, CayleySide::left);
  CHECK(left.nv == 2);
  CHECK(left.ne == 2);
  CHECK(left.nf == 2);
  auto lrep = cayley_homology_check(left);
  CHECK(lrep.passed());
  CHECK(lrep.h0_rank == 1);

  auto both = build_cayley(*m, p, CayleySide::two_sided);
  CHECK(both.nv == 4);
  CHECK(both.ne == 4);
  CHECK(both.nf == 4);
  auto brep = cayley_homology_check(both);
  CHECK(brep.passed());
  CHECK(brep.h0_rank == 2);
  CHECK(brep.h1_total.betti == 0);
  CHECK(brep.pi2_rank == 2);
}

TEST_CASE("euler characteristic identity") {
  for (const char* src : {kX3, kIdem}) {
    auto p = mon(src);
    auto m = enumerate_finite_monoid(p, 5);
    REQUIRE(m);
    for (auto side : {CayleySide::left, CayleySide::two_sided}) {
      auto c = build_cayley(*m, p, side);
      auto rep = cayley_homology_check(c);
      REQUIRE(rep.h1_vanishes);
      CHECK(c.nf - c.ne + c.nv == rep.pi2_rank + rep.h0_rank);
    }
  }
}

TEST_CASE("table export and import round-trip") {
  auto p = mon(kX3);
  auto m = enumerate_finite_monoid(p, 5);
  REQUIRE(m);
  std::string text = export_table(*m);
  CHECK(text.substr(0, 7) == "size 3\n");
  FiniteMonoid imported = import_table(text, p);
  CHECK(imported.size == m->size);
  CHECK(imported.table == m->table);
  CHECK(imported.generator_image == m->generator_image);
  CHECK(imported.elements[2].str() == "x x");

  // an imported table behaves identically through the complexes
  auto c1 = build_cayley(*m, p, CayleySide::two_sided);
  auto c2 = build_cayley(imported, p, CayleySide::two_sided);
  CHECK(cayley_homology_check(c1).pi2_rank == cayley_homology_check(c2).pi2_rank);
}

TEST_CASE("table import rejects bad input") {
  auto p = mon(kX3);
  CHECK_THROWS_AS(import_table("size 0\n", p), std::invalid_argument);
  CHECK_THROWS_AS(import_table("size 1\n0\n", p), std::invalid_argument);  // too few
  CHECK_THROWS_AS(import_table("size 2\n0 1\n1 9\n", p), std::invalid_argument);
  // violates x^3 = x^2 (cyclic group of order 2: x*x = 1)
  CHECK_THROWS_AS(import_table("size 2\n0 1\n1 0\n", p), std::invalid_argument);
  // non-associative table
  CHECK_THROWS_AS(import_table("size 3\n0 1 2\n1 0 0\n2 0 1\n", p),
                  std::invalid_argument);
}

TEST_CASE("relations are re-verified before building") {
  auto p = mon(kX3);
  auto q = mon(kIdem);
  auto m = enumerate_finite_monoid(q, 4);  // satisfies x^2 = x
  REQUIRE(m);
  // x^2 = x implies x^3 = x^2, so building against kX3 is legal
  CHECK_NOTHROW(build_cayley(*m, p, CayleySide::left));
  // but the free-of-relations monoid of size 2 need not satisfy x^2 = x
  auto bad = mon("kind: monoid\ngenerators: x\nrelation: x x x = x\n");
  auto c2 = enumerate_finite_monoid(bad, 5);  // cyclic group of order 2
  REQUIRE(c2);
  CHECK_THROWS_AS(build_cayley(*c2, q, CayleySide::left), std::invalid_argument);
}
