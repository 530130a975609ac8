#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "relbim/presentation.hpp"

using namespace relbim;

TEST_CASE("parse monoid presentation") {
  auto p = parse_presentation(
      "kind: monoid\n"
      "generators: x y\n"
      "relation: x y = y x\n");
  auto& mon = std::get<MonoidPresentation>(p);
  CHECK(mon.alphabet->size() == 2);
  REQUIRE(mon.relations.size() == 1);
  CHECK(mon.relations[0].first.str() == "x y");
  CHECK(mon.relations[0].second.str() == "y x");
}

TEST_CASE("parse algebra presentation") {
  auto p = parse_presentation(
      "kind: algebra\n"
      "generators: x\n"
      "relation: x x\n");
  auto& alg = std::get<AlgebraPresentation>(p);
  CHECK(alg.alphabet->size() == 1);
  REQUIRE(alg.relations.size() == 1);
  CHECK(alg.relations[0].str() == "x x");
}

TEST_CASE("comments, blank lines, empty word token") {
  auto p = parse_presentation(
      "# a comment line\n"
      "kind: monoid\n"
      "\n"
      "generators: x\n"
      "relation: x x = 1   # trailing comment\n");
  auto& mon = std::get<MonoidPresentation>(p);
  CHECK(mon.relations[0].second.empty());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_presentation("kind: monoid\ngenerators: x\nrelation: x y = y x\n"),
                  ParseError);  // unknown generator
  CHECK_THROWS_AS(parse_presentation("kind: monoid\ngenerators: x x\nrelation: x = 1\n"),
                  ParseError);  // duplicate generator
  CHECK_THROWS_AS(parse_presentation("kind: algebra\ngenerators: x\nrelation: x - x\n"),
                  ParseError);  // zero relation
  CHECK_THROWS_AS(parse_presentation("kind: monoid\ngenerators: x y\nrelation: x y = x y\n"),
                  ParseError);  // trivial relation
  CHECK_THROWS_AS(parse_presentation("generators: x\n"), ParseError);  // missing kind
  CHECK_THROWS_AS(parse_presentation("kind: group\ngenerators: x\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("kind: algebra\ngenerators: x\nrelation: x q\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_presentation("kind: algebra\ngenerators: x 2\n"), ParseError);
}

TEST_CASE("print then parse is the identity") {
  const char* sources[] = {
      "kind: monoid\ngenerators: x y\nrelation: x y = y x\nrelation: x x x = 1\n",
      "kind: algebra\ngenerators: x y\nrelation: x y - 2 y x\nrelation: x x + y y\n",
      "kind: algebra\ngenerators: a b c\nrelation: a b c - c b a\n",
      "kind: monoid\ngenerators: x\n",
  };
  for (const char* src : sources) {
    Presentation p = parse_presentation(src);
    std::string printed = print_presentation(p);
    Presentation q = parse_presentation(printed);
    CHECK(print_presentation(q) == printed);
    CHECK(p.index() == q.index());
  }
}

TEST_CASE("monoid_to_algebra produces r - l in order") {
  auto mon = std::get<MonoidPresentation>(parse_presentation(
      "kind: monoid\ngenerators: x y\nrelation: x y = y x\nrelation: x x = x\n"));
  auto alg = monoid_to_algebra(mon);
  REQUIRE(alg.relations.size() == 2);
  CHECK(alg.relations[0].str() == "- x y + y x");
  CHECK(alg.relations[1].str() == "x - x x");
  CHECK(same_alphabet(alg.alphabet, mon.alphabet));

  // empty relation list maps to empty relation list
  auto empty = std::get<MonoidPresentation>(
      parse_presentation("kind: monoid\ngenerators: x\n"));
  CHECK(monoid_to_algebra(empty).relations.empty());

  // a pair is length-homogeneous iff its polynomial is homogeneous
  for (size_t i = 0; i < mon.relations.size(); ++i) {
    bool pair_homog =
        mon.relations[i].first.length() == mon.relations[i].second.length();
    bool poly_homog =
        homogeneous_degree(alg.relations[i]).kind == HomogeneityKind::homogeneous;
    CHECK(pair_homog == poly_homog);
  }
}

TEST_CASE("homogeneity classification") {
  auto graded = std::get<AlgebraPresentation>(parse_presentation(
      "kind: algebra\ngenerators: x y\nrelation: x y - y x\n"));
  auto h = homogeneity(graded);
  CHECK(h.kind == PresentationGrading::graded);
  CHECK(h.degrees == std::vector<int>{2});

  auto inhom = std::get<AlgebraPresentation>(parse_presentation(
      "kind: algebra\ngenerators: x\nrelation: x x x - x x\n"));
  CHECK(homogeneity(inhom).kind == PresentationGrading::inhomogeneous);

  auto lh = std::get<MonoidPresentation>(parse_presentation(
      "kind: monoid\ngenerators: x y\nrelation: x y = y x\n"));
  CHECK(homogeneity(lh).kind == PresentationGrading::length_homogeneous);

  auto notlh = std::get<MonoidPresentation>(parse_presentation(
      "kind: monoid\ngenerators: x\nrelation: x x = x\n"));
  CHECK(homogeneity(notlh).kind == PresentationGrading::inhomogeneous);
}
