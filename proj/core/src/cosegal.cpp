#include "cosegal/cosegal.hpp"

#include <stdexcept>

namespace cosegal {

namespace {

PremonoidMorphism level_one_morphism(const TruncatedPremonoid& src, const TruncatedPremonoid& tgt,
                                     const ChainMap& at_one) {
  PremonoidMorphism m{src, tgt, {at_one}};
  for (std::size_t n = 2; n <= src.level; ++n) m.components.push_back(ChainMap::identity(src.at(n)));
  return m;
}

void require_two_constant(const TwoConstantPremonoid& f, std::size_t level, const char* what) {
  const Report r = validate(f, level);
  if (!r.empty())
    throw std::invalid_argument(std::string(what) + ": invalid 2-constant premonoid (" + r.front().axiom + " at " +
                                r.front().where + ")");
}

}  // namespace

Report validate(const TwoConstantPremonoid& f, std::size_t level) {
  Report r = validate(f.base);
  if (!(f.h.source() == f.apex) || !(f.h.target() == f.base.object)) throw ShapeError("two-constant: h has the wrong shape");
  if (!(f.unit.source() == unit_complex(f.apex.field())) || !(f.unit.target() == f.apex))
    throw ShapeError("two-constant: unit has the wrong shape");
  if (!(compose(f.h, f.unit) == f.base.unit)) {
    r.push_back({"unit-triangle", "h∘unit"});
    return r;
  }
  for (auto& v : validate(expand_to_premonoid(f, level))) r.push_back(std::move(v));
  return r;
}

TwoConstantPremonoid two_constant_of(const StrictMonoid& m) {
  return {m, m.object, ChainMap::identity(m.object), m.unit};
}

TruncatedPremonoid expand_to_premonoid(const TwoConstantPremonoid& f, std::size_t level) {
  return h_star(from_strict(f.base, level), f.h, f.unit).premonoid;
}

StrictMonoid reflect(const TwoConstantPremonoid& f) { return f.base; }

StrictMonoid reflect(const TruncatedPremonoid& f) {
  auto m = to_strict(f);
  if (!m) throw std::invalid_argument("reflect: unsupported shape");
  return *m;
}

FundamentalFactorization fundamental_factorization(const TwoConstantPremonoid& f, std::size_t level) {
  require_two_constant(f, level, "fundamental_factorization");
  auto hs = h_star(from_strict(f.base, level), f.h, f.unit);
  return {identity_morphism(hs.premonoid), std::move(hs.canonical)};
}

std::vector<InstructionTemplate> localizing_set(Field field, Window window, std::size_t level) {
  if (level < 2) throw ShapeError("localizing_set: level must be at least 2");
  std::vector<InstructionTemplate> out;
  for (std::size_t n = 2; n <= level; ++n)
    for (auto& g : generating_cofibrations(field, window)) out.push_back({g, n});
  return out;
}

K2Instruction make_instruction(int degree, const ChainMap& q, const ChainMap& p) {
  return {generating_cofibration(q.field(), degree).inclusion, q, p};
}

K2Pushout pushout_k2(const TwoConstantPremonoid& f, const K2Instruction& ins, std::size_t level) {
  if (!(ins.q.target() == f.apex) || !(ins.p.target() == f.base.object) || !(ins.alpha.source() == ins.q.source()) ||
      !(ins.alpha.target() == ins.p.source()))
    throw ShapeError("pushout_k2: instruction does not attach to this premonoid");
  if (!ins.square(f).commutes()) throw std::invalid_argument("pushout_k2: attaching square does not commute");

  Pushout po = pushout(ins.q, ins.alpha);
  auto gamma = pushout_universal(po, f.h, ins.p);
  if (!gamma) throw std::logic_error("pushout_k2: no induced map out of the pushout");
  TwoConstantPremonoid e{f.base, po.object, *gamma, compose(po.leg_left, f.unit)};
  const TruncatedPremonoid src = expand_to_premonoid(f, level);
  const TruncatedPremonoid tgt = expand_to_premonoid(e, level);
  PremonoidMorphism ups = level_one_morphism(src, tgt, po.leg_left);
  return {std::move(e), std::move(ups), std::move(po)};
}

std::optional<PremonoidMorphism> pushout_k2_universal(const K2Pushout& po, const PremonoidMorphism& theta,
                                                      const ChainMap& k) {
  auto z1 = pushout_universal(po.apex, theta.at(1), k);
  if (!z1) return std::nullopt;
  PremonoidMorphism z{po.upsilon.target, theta.target, {*z1}};
  for (std::size_t n = 2; n <= theta.source.level; ++n) z.components.push_back(theta.at(n));
  if (!validate(z).empty()) return std::nullopt;
  return z;
}

K2WidePushout wide_pushout_two_constant(const TwoConstantPremonoid& f, const std::vector<K2Instruction>& ins,
                                        std::size_t level) {
  std::vector<ChainComplex> objects{f.apex};
  std::vector<DiagramArrow> arrows;
  for (const auto& i : ins) {
    if (!i.square(f).commutes()) throw std::invalid_argument("wide_pushout_two_constant: attaching square does not commute");
    const std::size_t u = objects.size();
    objects.push_back(i.alpha.source());
    objects.push_back(i.alpha.target());
    arrows.push_back({u, 0, i.q});
    arrows.push_back({u, u + 1, i.alpha});
  }
  Colimit c = colimit(f.apex.field(), objects, arrows);
  std::vector<ChainMap> cocone{f.h};
  for (const auto& i : ins) {
    cocone.push_back(compose(f.h, i.q));
    cocone.push_back(i.p);
  }
  auto gamma = colimit_universal(c, cocone, f.base.object);
  if (!gamma) throw std::logic_error("wide_pushout_two_constant: no induced map out of the colimit");
  TwoConstantPremonoid e{f.base, c.object, *gamma, compose(c.legs[0], f.unit)};
  PremonoidMorphism ups =
      level_one_morphism(expand_to_premonoid(f, level), expand_to_premonoid(e, level), c.legs[0]);
  std::vector<ChainMap> cells;
  for (std::size_t k = 0; k < ins.size(); ++k) cells.push_back(c.legs[2 + 2 * k]);
  return {std::move(e), std::move(ups), std::move(c), std::move(cells)};
}

K2Iterated iterated_pushout_k2(const TwoConstantPremonoid& f, const std::vector<K2Instruction>& ins) {
  K2Iterated out{f, ChainMap::identity(f.apex), {}};
  for (const auto& i : ins) {
    const K2Instruction moved{i.alpha, compose(out.apex_leg, i.q), i.p};
    K2Pushout step = pushout_k2(out.result, moved);
    const ChainMap& leg = step.apex.leg_left;
    for (auto& c : out.cell_legs) c = compose(leg, c);
    out.cell_legs.push_back(step.apex.leg_right);
    out.apex_leg = compose(leg, out.apex_leg);
    out.result = std::move(step.result);
  }
  return out;
}

Cosegalification cosegalify_two_constant(const TwoConstantPremonoid& f, std::size_t level) {
  require_two_constant(f, level, "cosegalify_two_constant");
  CylinderFactorization cyl = cylinder_factorization(f.h);
  TwoConstantPremonoid s{f.base, cyl.cylinder, cyl.p, compose(cyl.i, f.unit)};
  PremonoidMorphism tau =
      level_one_morphism(expand_to_premonoid(f, level), expand_to_premonoid(s, level), cyl.i);
  return {std::move(s), std::move(tau), std::move(cyl)};
}

bool is_k_injective_by_lifting(const TruncatedPremonoid& f) {
  for (std::size_t n = 2; n <= f.level; ++n) {
    const ChainMap& g = f.map(Surjection::unique_to_one(n));
    for (const auto& gen : generating_cofibrations(f.field, g.window()))
      if (!has_right_lifting(gen.inclusion, g)) return false;
  }
  return true;
}

bool is_k_injective(const TruncatedPremonoid& f) {
  require_valid(f, "is_k_injective");
  bool by_rank = true;
  for (std::size_t n = 2; n <= f.level && by_rank; ++n)
    by_rank = is_trivial_fibration(f.map(Surjection::unique_to_one(n)));
  if (by_rank != is_k_injective_by_lifting(f))
    throw std::logic_error("is_k_injective: rank and lifting criteria disagree");
  return by_rank;
}

bool is_k_injective(const TwoConstantPremonoid& f, std::size_t level) {
  return is_k_injective(expand_to_premonoid(f, level));
}

}  // namespace cosegal
