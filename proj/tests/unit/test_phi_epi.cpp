#include <doctest.h>

#include <algorithm>
#include <set>

#include "cosegal/field.hpp"
#include "cosegal/phi_epi.hpp"
#include "oracles.hpp"

using namespace cosegal;

namespace {

// All functions m -> n that are onto, straight from the definition.
std::vector<std::vector<std::size_t>> onto_functions(std::size_t m, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> f(m);
    std::size_t x = code;
    for (std::size_t i = m; i-- > 0; x /= n) f[i] = x % n;
    std::set<std::size_t> image(f.begin(), f.end());
    if (image.size() == n) out.push_back(f);
  }
  return out;
}

// Objects of the lax latching category at level n, enumerated from the
// comma-category definition: decompositions p + q = k ≤ n with p, q ≥ 1 and
// an onto function n -> k, plus onto functions n -> k with 1 ≤ k < n.
std::size_t lax_object_count(std::size_t n) {
  std::size_t count = 0;
  for (std::size_t k = 2; k <= n; ++k) count += (k - 1) * onto_functions(n, k).size();
  for (std::size_t k = 1; k < n; ++k) count += onto_functions(n, k).size();
  return count;
}

}  // namespace

TEST_SUITE("phi_epi") {
  TEST_CASE("surjection counts") {
    CHECK(enumerate_surjections(2, 1).size() == 1);
    CHECK(enumerate_surjections(3, 2).size() == 6);
    std::size_t fact = 1;
    for (std::size_t n = 1; n <= 5; ++n) {
      fact *= n;
      const auto bij = enumerate_surjections(n, n);
      CHECK(bij.size() == fact);
      for (const auto& b : bij) CHECK(b.is_bijection());
    }
    CHECK(enumerate_surjections(2, 3).empty());
  }

  TEST_CASE("counts match enumeration and Stirling numbers") {
    for (std::size_t m = 1; m <= 6; ++m)
      for (std::size_t n = 1; n <= m; ++n) {
        const std::size_t brute = oracle::surjections_by_enumeration(m, n);
        CHECK(enumerate_surjections(m, n).size() == brute);
        CHECK(surjection_count(m, n) == brute);
      }
  }

  TEST_CASE("enumeration is lexicographic and matches the definition") {
    const auto s = enumerate_surjections(4, 3);
    const auto ref = onto_functions(4, 3);
    REQUIRE(s.size() == ref.size());
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i].map() == ref[i]);
  }

  TEST_CASE("composition, sums and the collapse") {
    const Surjection f({0, 1, 1, 0});
    CHECK(compose(Surjection::identity(2), f) == f);
    CHECK(compose(f, Surjection::identity(4)) == f);
    CHECK(disjoint_sum(Surjection::unique_to_one(1), Surjection::unique_to_one(1)) == Surjection::identity(2));
    CHECK(Surjection::unique_to_one(3).map() == std::vector<std::size_t>{0, 0, 0});
    CHECK_THROWS_AS(compose(f, f), ShapeError);
    CHECK_THROWS_AS(Surjection(3, {0, 1}), ShapeError);
    CHECK_THROWS_AS(Surjection(2, {0, 2}), ShapeError);
  }

  TEST_CASE("sum is associative and the collapse absorbs") {
    for (std::size_t m = 1; m <= 4; ++m)
      for (std::size_t n = 1; n <= m; ++n)
        for (const auto& s : enumerate_surjections(m, n)) {
          CHECK(compose(Surjection::unique_to_one(n), s) == Surjection::unique_to_one(m));
          const auto t = Surjection::identity(2);
          const auto u = Surjection::unique_to_one(2);
          CHECK(disjoint_sum(disjoint_sum(s, t), u) == disjoint_sum(s, disjoint_sum(t, u)));
        }
  }

  TEST_CASE("block swap") {
    CHECK(Surjection::swap_blocks(1, 2).map() == std::vector<std::size_t>{2, 0, 1});
    CHECK(compose(Surjection::swap_blocks(2, 1), Surjection::swap_blocks(1, 2)) == Surjection::identity(3));
  }

  TEST_CASE("keys round trip") {
    const Surjection s({0, 0, 1});
    CHECK(s.key() == "0,0,1");
    CHECK(Surjection::from_key("0,0,1") == s);
    CHECK_THROWS_AS(Surjection::from_key("0,x"), ShapeError);
  }

  TEST_CASE("latching shape at level 2") {
    const LatchingShape lax = latching_shape(2, false);
    REQUIRE(lax.objects.size() == 3);
    CHECK(lax.arrows.empty());
    CHECK(lax.objects[0].is_pair);
    CHECK(lax.objects[0].s == Surjection::identity(2));
    CHECK(lax.objects[1].s == Surjection({1, 0}));
    CHECK_FALSE(lax.objects[2].is_pair);
    CHECK(lax.objects[2].s == Surjection::unique_to_one(2));

    const LatchingShape classical = latching_shape(2, true);
    REQUIRE(classical.objects.size() == 1);
    CHECK(classical.objects[0].s == Surjection::unique_to_one(2));
    CHECK_THROWS_AS(latching_shape(1, false), ShapeError);
  }

  TEST_CASE("object counts agree with the comma-category enumeration") {
    for (std::size_t n = 2; n <= 4; ++n) CHECK(latching_shape(n, false).objects.size() == lax_object_count(n));
    CHECK(latching_shape(3, false).objects.size() == 6 * 2 + 6 * 1 + 1 + 6);
  }

  TEST_CASE("arrows satisfy the comma condition") {
    const LatchingShape s = latching_shape(3, false);
    for (const auto& a : s.arrows) {
      const auto& x = s.objects[a.from];
      const auto& y = s.objects[a.to];
      if (x.is_pair && y.is_pair)
        CHECK(compose(disjoint_sum(a.left, a.right), y.s) == x.s);
      else
        CHECK(compose(a.left, y.s) == x.s);
      CHECK_FALSE((x.is_pair == false && y.is_pair));
    }
    CHECK_FALSE(s.arrows.empty());
  }

  TEST_CASE("classical shape embeds into the lax shape") {
    for (std::size_t n = 2; n <= 4; ++n) {
      const auto c = latching_shape(n, true);
      const auto l = latching_shape(n, false);
      const auto idx = classical_embedding(c, l);
      REQUIRE(idx.size() == c.objects.size());
      std::set<std::size_t> distinct(idx.begin(), idx.end());
      CHECK(distinct.size() == idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i) CHECK(l.objects[idx[i]] == c.objects[i]);
      // every classical arrow reappears between the embedded objects
      for (const auto& a : c.arrows) {
        const bool found = std::any_of(l.arrows.begin(), l.arrows.end(), [&](const LatchingArrow& b) {
          return b.from == idx[a.from] && b.to == idx[a.to] && b.left == a.left;
        });
        CHECK(found);
      }
    }
  }
}
