#include <doctest.h>

#include "cosegal/cosegal.hpp"
#include "cosegal/random.hpp"

using namespace cosegal;

namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);
const Field Q = Field::rationals();

// Rank of [a | b] in every degree equals the target dimension.
bool jointly_surjective(const ChainMap& a, const ChainMap& b) {
  const ChainComplex& t = a.target();
  for (int n = t.window().lo; n <= t.window().hi; ++n)
    if (rank(Matrix::hstack(a.at(n), b.at(n))) != t.dim(n)) return false;
  return true;
}

// apex I, base I ⊕ S^0, h the unit: h misses the square-zero part.
TwoConstantPremonoid non_surjective(Field k) {
  const StrictMonoid base = square_zero_extension(sphere(k, 0));
  const ChainComplex i = unit_complex(k);
  return {base, i, base.unit, ChainMap::identity(i)};
}

std::map<int, std::size_t> nonzero(const std::map<int, std::size_t>& m) {
  std::map<int, std::size_t> out;
  for (const auto& [d, v] : m)
    if (v) out.emplace(d, v);
  return out;
}

}  // namespace

TEST_SUITE("cosegal") {
  TEST_CASE("localizing set sizes") {
    const auto t = localizing_set(F2, {0, 1}, 2);
    REQUIRE(t.size() == 3);
    CHECK(t[0].alpha.degree == 0);
    CHECK(t[1].alpha.degree == 1);
    CHECK(t[2].alpha.degree == 2);
    for (const auto& x : t) CHECK(x.level == 2);
    CHECK(localizing_set(F2, {0, 1}, 3).size() == 6);
    CHECK(localizing_set(F2, {0, -1}, 2).empty());
    CHECK_THROWS_AS(localizing_set(F2, {0, 1}, 1), ShapeError);
  }

  TEST_CASE("expanding the trivial 2-constant premonoid gives the constant one") {
    const StrictMonoid m = square_zero_extension(sphere(Q, 1));
    const TwoConstantPremonoid f = two_constant_of(m);
    CHECK(validate(f, 3).empty());
    const auto back = to_strict(expand_to_premonoid(f, 3));
    REQUIRE(back.has_value());
    CHECK(*back == m);
  }

  TEST_CASE("random 2-constant premonoids validate") {
    Rng rng(41);
    for (int t = 0; t < 20; ++t) {
      const TwoConstantPremonoid f = random_two_constant(t % 2 ? F2 : F3, rng);
      CHECK(validate(f, 3).empty());
      const TruncatedPremonoid e = expand_to_premonoid(f, 3);
      CHECK(to_strict(e).has_value() == (f.apex == f.base.object && f.h.is_identity()));
    }
  }

  TEST_CASE("a broken unit factorization is reported") {
    TwoConstantPremonoid f = non_surjective(F3);
    f.unit = ChainMap::zero(f.unit.source(), f.apex);
    const Report r = validate(f);
    REQUIRE(r.size() == 1);
    CHECK(r[0].axiom == "unit-triangle");
  }

  TEST_CASE("reflection on supported shapes") {
    Rng rng(42);
    const StrictMonoid m = random_strict_monoid(F2, rng);
    CHECK(reflect(from_strict(m, 3)) == m);
    const TwoConstantPremonoid f = random_two_constant(F2, rng);
    CHECK(reflect(f) == f.base);
    const CylinderFactorization cyl = cylinder_factorization(f.h);
    const HStar hs = h_star(from_strict(f.base, 2), cyl.p, compose(cyl.i, f.unit));
    CHECK_THROWS_WITH_AS(reflect(hs.premonoid), "reflect: unsupported shape", std::invalid_argument);
  }

  TEST_CASE("fundamental factorization") {
    Rng rng(43);
    const StrictMonoid m = random_strict_monoid(Q, rng);
    const auto c = fundamental_factorization(two_constant_of(m), 3);
    for (std::size_t n = 1; n <= 3; ++n) {
      CHECK(c.rho.at(n).is_identity());
      CHECK(c.epsilon.at(n).is_identity());
    }
    for (int t = 0; t < 10; ++t) {
      const TwoConstantPremonoid f = random_two_constant(t % 2 ? F2 : Q, rng);
      const auto ff = fundamental_factorization(f, 3);
      CHECK(validate(ff.rho).empty());
      CHECK(validate(ff.epsilon).empty());
      CHECK(ff.epsilon.at(1) == f.h);
      CHECK(ff.epsilon.at(2).is_identity());
      CHECK(ff.epsilon.at(3).is_identity());
      CHECK(is_easy_weq(ff.rho));
      const PremonoidMorphism eta = compose(ff.epsilon, ff.rho);
      CHECK(eta.at(1) == f.h);
    }
  }

  TEST_CASE("pushout along an identity-shaped cell changes nothing up to iso") {
    Rng rng(44);
    const TwoConstantPremonoid f = random_two_constant(F3, rng);
    const ChainComplex u = sphere(F3, 0);
    const ChainMap q = random_chain_map(u, f.apex, rng);
    const K2Instruction ins{ChainMap::identity(u), q, compose(f.h, q)};
    const K2Pushout po = pushout_k2(f, ins);
    CHECK(po.result.apex.dims() == f.apex.dims());
    CHECK(is_isomorphism(po.upsilon.at(1)));
    CHECK(validate(po.result).empty());
  }

  TEST_CASE("pushout dimensions along a generating cofibration") {
    Rng rng(45);
    for (int t = 0; t < 20; ++t) {
      const TwoConstantPremonoid f = random_two_constant(t % 2 ? F2 : Q, rng);
      const K2Instruction ins = sample_instruction(f, rng);
      const K2Pushout po = pushout_k2(f, ins);
      // alpha is injective, so the pushout adds dim V - dim U in each degree
      const Window w = window_union(f.apex.window(), ins.alpha.window());
      for (int n = w.lo; n <= w.hi; ++n)
        CHECK(po.result.apex.dim(n) == f.apex.dim(n) + ins.alpha.target().dim(n) - ins.alpha.source().dim(n));
    }
    const TwoConstantPremonoid f = non_surjective(F2);
    const ChainMap alpha = generating_cofibration(F2, 0).inclusion;  // S^{-1} -> D^0
    const K2Instruction ins = make_instruction(0, ChainMap::zero(alpha.source(), f.apex),
                                               ChainMap::zero(alpha.target(), f.base.object));
    const K2Pushout po = pushout_k2(f, ins);
    CHECK(po.result.apex.dim(0) == 2);
    CHECK(po.result.apex.dim(-1) == 0);
  }

  TEST_CASE("K2 pushouts on 30 random instructions over F2") {
    Rng rng(46);
    for (int t = 0; t < 30; ++t) {
      const TwoConstantPremonoid f = random_two_constant(F2, rng);
      const K2Instruction ins = sample_instruction(f, rng);
      REQUIRE(ins.square(f).commutes());
      const K2Pushout po = pushout_k2(f, ins, 3);
      CHECK(validate(po.result, 3).empty());
      CHECK(validate(po.upsilon).empty());
      CHECK(po.upsilon.at(2).is_identity());
      CHECK(po.upsilon.at(3).is_identity());
      CHECK(reflect(po.result) == reflect(f));
      CHECK(compose(po.result.h, po.apex.leg_left) == f.h);
      CHECK(compose(po.result.h, po.apex.leg_right) == ins.p);

      // the canonical cocone into the constant premonoid of the base
      const auto ff = fundamental_factorization(f, 3);
      const auto zeta = pushout_k2_universal(po, ff.epsilon, ins.p);
      REQUIRE(zeta.has_value());
      CHECK(zeta->at(1) == po.result.h);
      const PremonoidMorphism back = compose(*zeta, po.upsilon);
      for (std::size_t n = 1; n <= 3; ++n) CHECK(back.at(n) == ff.epsilon.at(n));
      // the pushout legs span, so ζ is pinned down by its values on them
      CHECK(jointly_surjective(po.apex.leg_left, po.apex.leg_right));

      // an incompatible cell map has no induced morphism
      if (!compose(ins.p, ins.alpha).is_zero())
        CHECK_FALSE(pushout_k2_universal(po, ff.epsilon, ChainMap::zero(ins.p.source(), ins.p.target())).has_value());
    }
  }

  TEST_CASE("non-commuting squares are rejected") {
    const TwoConstantPremonoid f = non_surjective(Q);
    const ChainMap alpha = generating_cofibration(Q, 1).inclusion;  // S^0 -> D^1
    const ChainMap q(alpha.source(), f.apex, {{0, Matrix::identity(Q, 1)}});
    const ChainMap p = ChainMap::zero(alpha.target(), f.base.object);
    CHECK_THROWS_AS(pushout_k2(f, {alpha, q, p}), std::invalid_argument);
    CHECK_THROWS_AS(wide_pushout_two_constant(f, {{alpha, q, p}}), std::invalid_argument);
  }

  TEST_CASE("wide pushouts") {
    Rng rng(47);
    const TwoConstantPremonoid f = random_two_constant(F2, rng);
    const K2WidePushout none = wide_pushout_two_constant(f, {});
    CHECK(none.result.apex == f.apex);
    CHECK(none.result.h == f.h);

    const K2Instruction one = sample_instruction(f, rng);
    const K2WidePushout w1 = wide_pushout_two_constant(f, {one});
    const K2Pushout p1 = pushout_k2(f, one);
    CHECK(w1.result.apex.dims() == p1.result.apex.dims());
  }

  TEST_CASE("wide and iterated pushouts agree") {
    Rng rng(48);
    for (int t = 0; t < 15; ++t) {
      const Field k = t % 3 == 0 ? Q : F2;
      const TwoConstantPremonoid f = random_two_constant(k, rng);
      std::vector<K2Instruction> ins;
      const std::size_t count = 1 + static_cast<std::size_t>(t % 3);
      for (std::size_t i = 0; i < count; ++i) ins.push_back(sample_instruction(f, rng));

      const K2WidePushout wide = wide_pushout_two_constant(f, ins);
      const K2Iterated iter = iterated_pushout_k2(f, ins);
      CHECK(validate(wide.result).empty());
      CHECK(wide.result.apex.dims() == iter.result.apex.dims());
      CHECK(homology_dims(wide.result.apex) == homology_dims(iter.result.apex));

      // comparison map from the universal property
      std::vector<ChainMap> cocone{iter.apex_leg};
      for (std::size_t i = 0; i < count; ++i) {
        cocone.push_back(compose(iter.apex_leg, ins[i].q));
        cocone.push_back(iter.cell_legs[i]);
      }
      const auto cmp = colimit_universal(wide.apex, cocone, iter.result.apex);
      REQUIRE(cmp.has_value());
      CHECK(is_isomorphism(*cmp));
      CHECK(compose(iter.result.h, *cmp) == wide.result.h);

      // single pushout of the coproduct of the cells
      std::vector<ChainComplex> us, vs;
      for (const auto& i : ins) {
        us.push_back(i.alpha.source());
        vs.push_back(i.alpha.target());
      }
      const DirectSum su = direct_sum(us);
      const DirectSum sv = direct_sum(vs);
      ChainMap sum_alpha = ChainMap::zero(su.object, sv.object);
      ChainMap sum_q = ChainMap::zero(su.object, f.apex);
      for (std::size_t i = 0; i < count; ++i) {
        sum_alpha = sum_alpha + compose(sv.inclusions[i], compose(ins[i].alpha, su.projections[i]));
        sum_q = sum_q + compose(ins[i].q, su.projections[i]);
      }
      const Pushout single = pushout(sum_q, sum_alpha);
      CHECK(single.object.dims() == wide.result.apex.dims());

      // order does not matter
      std::vector<K2Instruction> reversed(ins.rbegin(), ins.rend());
      CHECK(wide_pushout_two_constant(f, reversed).result.apex.dims() == wide.result.apex.dims());
    }
  }

  TEST_CASE("co-Segalification at levels up to 4") {
    Rng rng(49);
    for (int t = 0; t < 12; ++t) {
      const Field k = t % 3 == 0 ? Q : (t % 3 == 1 ? F2 : F3);
      const std::size_t level = 2 + static_cast<std::size_t>(t % 3);
      const TwoConstantPremonoid f = random_two_constant(k, rng);
      const Cosegalification c = cosegalify_two_constant(f, level);
      const TruncatedPremonoid e = expand_to_premonoid(c.result, level);
      CHECK(validate(e).empty());
      CHECK(is_cosegal(e));
      CHECK(is_k_injective(c.result, level));
      CHECK(reflect(c.result) == reflect(f));
      CHECK(is_cofibration(c.tau.at(1)));
      CHECK(validate(c.tau).empty());
      CHECK(compose(c.result.h, c.tau.at(1)) == f.h);
      for (std::size_t n = 2; n <= level; ++n) CHECK(c.tau.at(n).is_identity());
      CHECK(nonzero(homology_dims(c.result.apex)) == nonzero(homology_dims(f.base.object)));
    }
  }

  TEST_CASE("co-Segalification of a map that is already a trivial fibration") {
    const StrictMonoid m = square_zero_extension(disc(F3, 1));
    const Cosegalification c = cosegalify_two_constant(two_constant_of(m), 3);
    CHECK(is_trivial_fibration(c.result.h));
    CHECK(c.result.apex.total_dim() == 2 * m.object.total_dim() + m.object.total_dim());
  }

  TEST_CASE("co-Segalification of a map that is not a quasi-isomorphism") {
    const TwoConstantPremonoid f = non_surjective(Q);
    REQUIRE_FALSE(is_quasi_iso(f.h));
    const Cosegalification c = cosegalify_two_constant(f, 2);
    // Cyl = I ⊕ I[1] ⊕ (I ⊕ S^0)
    CHECK(c.result.apex.total_dim() == 4);
    CHECK(is_trivial_fibration(c.result.h));
    CHECK(is_cosegal(expand_to_premonoid(c.result, 2)));
    // the zero map S^0 -> S^0 on its own: cylinder of total dimension 3
    const ChainComplex s0 = sphere(Q, 0);
    const CylinderFactorization cyl = cylinder_factorization(ChainMap::zero(s0, s0));
    CHECK(cyl.cylinder.total_dim() == 3);
    CHECK(is_quasi_iso(cyl.p));
  }

  TEST_CASE("K-injectivity") {
    Rng rng(50);
    for (int t = 0; t < 10; ++t) {
      const StrictMonoid m = random_strict_monoid(t % 2 ? F2 : Q, rng);
      CHECK(is_k_injective(from_strict(m, 3)));
    }
    for (const Field k : {F2, F3, Q}) {
      CHECK_FALSE(is_k_injective(non_surjective(k), 2));
      CHECK_FALSE(is_k_injective_by_lifting(expand_to_premonoid(non_surjective(k), 3)));
    }
    for (int t = 0; t < 20; ++t) {
      const TwoConstantPremonoid f = random_two_constant(t % 2 ? F2 : F3, rng);
      CHECK(is_k_injective(f, 3) == is_trivial_fibration(f.h));
    }
  }
}
