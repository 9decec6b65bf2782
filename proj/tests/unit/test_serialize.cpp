#include <doctest.h>

#include "cosegal/random.hpp"
#include "cosegal/serialize.hpp"

using namespace cosegal;

namespace {

const Field F2 = Field::prime(2);
const Field F5 = Field::prime(5);
const Field Q = Field::rationals();

bool same(const TruncatedPremonoid& a, const TruncatedPremonoid& b) {
  return a.field == b.field && a.level == b.level && a.objects == b.objects && a.structure == b.structure &&
         a.laxity == b.laxity && a.unit == b.unit;
}

Json round(const Json& j) { return Json::parse(canonical(j)); }

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("rational entries are written as integers or fractions") {
    const Matrix m = Matrix::from_rows(Q, 2, {{Rational(1, 2), Rational(-3)}, {Rational(0), Rational(7, 4)}});
    const Json j = to_json(m);
    CHECK(j.dump() == R"([["1/2",-3],[0,"7/4"]])");
    CHECK(matrix_from_json(j, Q, 2, 2) == m);
  }

  TEST_CASE("complexes and maps round trip") {
    Rng rng(71);
    for (const Field k : {F2, F5, Q})
      for (int t = 0; t < 10; ++t) {
        const ChainComplex a = random_complex(k, {-1, 2}, 3, rng);
        const ChainComplex b = random_complex(k, {-1, 2}, 3, rng);
        CHECK(complex_from_json(round(to_json(a))) == a);
        const ChainMap f = random_chain_map(a, b, rng);
        CHECK(map_from_json(round(to_json(f))) == f);
      }
  }

  TEST_CASE("monoids and premonoids round trip") {
    Rng rng(72);
    for (int t = 0; t < 10; ++t) {
      const StrictMonoid m = random_strict_monoid(t % 2 ? F2 : Q, rng);
      CHECK(monoid_from_json(round(to_json(m))) == m);
      const TruncatedPremonoid f = from_strict(m, 3);
      const Json j = to_json(f);
      CHECK(kind_of(j) == "premonoid");
      CHECK(same(premonoid_from_json(round(j)), f));
      // canonical text is stable across a round trip
      CHECK(canonical(to_json(premonoid_from_json(round(j)))) == canonical(j));
    }
  }

  TEST_CASE("diagrams round trip") {
    Rng rng(73);
    const PlainDiagram f = random_plain_diagram(F5, 3, {0, 1}, 2, rng);
    const PlainDiagram g = diagram_from_json(round(to_json(f)));
    CHECK(g.objects == f.objects);
    CHECK(g.structure == f.structure);
  }

  TEST_CASE("identity structure maps may be omitted") {
    const TruncatedPremonoid f = from_strict(unit_monoid(F2), 2);
    Json j = to_json(f);
    j["structure"].erase("0");
    j["structure"].erase("0,1");
    CHECK(same(premonoid_from_json(j), f));
  }

  TEST_CASE("2-constant premonoids, instructions and morphisms round trip") {
    Rng rng(74);
    for (int t = 0; t < 10; ++t) {
      const TwoConstantPremonoid f = random_two_constant(t % 2 ? F2 : Q, rng);
      const TwoConstantPremonoid g = two_constant_from_json(round(to_json(f)));
      CHECK(g.base == f.base);
      CHECK(g.apex == f.apex);
      CHECK(g.h == f.h);
      CHECK(g.unit == f.unit);
      const K2Instruction ins = sample_instruction(f, rng);
      const K2Instruction back = instruction_from_json(round(to_json(ins)), f);
      CHECK(back.alpha == ins.alpha);
      CHECK(back.q == ins.q);
      CHECK(back.p == ins.p);
      const auto ff = fundamental_factorization(f, 2);
      const PremonoidMorphism m = morphism_from_json(round(to_json(ff.epsilon)));
      CHECK(m.components == ff.epsilon.components);
    }
  }

  TEST_CASE("reports") {
    const Report r{{"associativity", "p=1,q=1,r=1"}};
    CHECK(to_json(r).dump() == R"([{"axiom":"associativity","where":"p=1,q=1,r=1"}])");
    CHECK(to_json(Surjection({0, 1, 0})).dump() == "[0,1,0]");
    const Json shape = to_json(latching_shape(2, false));
    CHECK(shape["objects"].size() == 3);
    const Json cp = to_json(demo_char_p(Q));
    CHECK(cp["acyclic"] == true);
  }

  TEST_CASE("canonical form sorts keys and ends with a newline") {
    const Json j = {{"b", 1}, {"a", Json::array({1, 2})}};
    CHECK(canonical(j) == "{\n  \"a\": [\n    1,\n    2\n  ],\n  \"b\": 1\n}\n");
  }

  TEST_CASE("malformed documents raise ParseError") {
    CHECK_THROWS_AS(kind_of(Json::object()), ParseError);
    CHECK_THROWS_AS(field_from_json(Json(4)), ParseError);
    CHECK_THROWS_AS(field_from_json(Json("two")), ParseError);
    CHECK_THROWS_AS(complex_from_json(Json{{"field", 2}, {"window", {0}}, {"dims", Json::object()}}), ParseError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1,2]]"), F2, 2, 2), ParseError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1.5]]"), Q, 1, 1), ParseError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1/0"]])"), Q, 1, 1), ParseError);
    Json j = to_json(from_strict(unit_monoid(F2), 2));
    j["laxity"]["x"] = Json::object();
    CHECK_THROWS_AS(premonoid_from_json(j), ParseError);
    j = to_json(from_strict(unit_monoid(F2), 2));
    j["structure"]["0,0,0"] = Json::object();
    CHECK_THROWS_AS(premonoid_from_json(j), ParseError);
    CHECK_THROWS_AS(Json::parse("{\"kind\": ").dump(), Json::parse_error);
  }
}
