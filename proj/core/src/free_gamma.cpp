#include "cosegal/free_gamma.hpp"

#include <stdexcept>

namespace cosegal {

const ChainMap& Latching::leg(const LatchingObject& o) const {
  const std::size_t i = shape.find(o);
  if (i == shape.objects.size()) throw ShapeError("latching: no such shape object");
  return colimit.legs[i];
}

namespace {

ChainComplex value(const LaxDiagram* h, const PlainDiagram& f, const LatchingObject& o) {
  if (o.is_pair && h) return tensor(h->at(o.p), h->at(o.q));
  return f.at(o.p);
}

ChainMap arrow_map(const LaxDiagram* h, const PlainDiagram& f, const LatchingShape& shape, const LatchingArrow& a) {
  const auto& src = shape.objects[a.from];
  const auto& dst = shape.objects[a.to];
  if (!src.is_pair || !h) return f.map(a.left);
  if (dst.is_pair) return tensor(h->map(a.left), h->map(a.right));
  return compose(h->map(a.left), h->lax(src.p, src.q));
}

Latching build_latching(const PlainDiagram& f, const LaxDiagram* h, std::size_t n, bool classical) {
  if (n > f.level + 1) throw ShapeError("latching: diagram too short for this level");
  Latching out;
  out.shape = latching_shape(n, classical);
  std::vector<ChainComplex> objects;
  for (const auto& o : out.shape.objects) objects.push_back(value(h, f, o));
  std::vector<DiagramArrow> arrows;
  for (const auto& a : out.shape.arrows) arrows.push_back({a.from, a.to, arrow_map(h, f, out.shape, a)});
  out.colimit = colimit(f.field, objects, arrows);
  return out;
}

ChainMap must(std::optional<ChainMap> m, const char* what) {
  if (!m) throw std::invalid_argument(what);
  return std::move(*m);
}

}  // namespace

Latching lax_latching(const LaxDiagram& h, std::size_t n) { return build_latching(h, &h, n, false); }

Latching classical_latching(const PlainDiagram& f, std::size_t n) { return build_latching(f, nullptr, n, true); }

ChainMap latching_map(const PlainDiagram& f, const Latching& classical) {
  const std::size_t n = classical.shape.level;
  std::vector<ChainMap> cocone;
  for (const auto& o : classical.shape.objects) cocone.push_back(f.map(o.s));
  return must(colimit_universal(classical.colimit, cocone, f.at(n)), "latching_map: structure maps are not compatible");
}

ChainMap delta_map(const Latching& classical, const Latching& lax, const std::vector<ChainMap>& eta) {
  std::vector<ChainMap> cocone;
  for (const auto& o : classical.shape.objects) cocone.push_back(compose(lax.leg(o), eta.at(o.p - 1)));
  return must(colimit_universal(classical.colimit, cocone, lax.object()), "delta_map: cocone is not compatible");
}

ChainMap delta_map(const LaxDiagram& h, std::size_t n) {
  std::vector<ChainMap> eta;
  for (std::size_t k = 1; k < n; ++k) eta.push_back(ChainMap::identity(h.at(k)));
  return delta_map(classical_latching(h, n), lax_latching(h, n), eta);
}

PlainDiagram underlying(const LaxDiagram& g) { return static_cast<const PlainDiagram&>(g); }

Gamma gamma_na(const PlainDiagram& f) {
  const Report r = validate(f);
  if (!r.empty()) throw std::invalid_argument("gamma_na: invalid diagram (" + r.front().axiom + " at " + r.front().where + ")");

  Gamma out;
  out.source = f;
  LaxDiagram& g = out.diagram;
  g.field = f.field;
  g.level = 1;
  g.objects.push_back(f.at(1));
  g.structure.emplace(Surjection::identity(1), ChainMap::identity(f.at(1)));
  std::vector<ChainMap> eta{ChainMap::identity(f.at(1))};

  for (std::size_t n = 2; n <= f.level; ++n) {
    Latching lax = lax_latching(g, n);
    Latching classical = classical_latching(f, n);
    ChainMap lam = latching_map(f, classical);
    ChainMap xi = delta_map(classical, lax, eta);
    Pushout po = pushout(lam, xi);
    const ChainMap& to_gamma = po.leg_right;

    g.objects.push_back(po.object);
    for (std::size_t k = 1; k < n; ++k)
      for (const auto& t : enumerate_surjections(n, k))
        g.structure.emplace(t, compose(to_gamma, lax.leg({false, k, 0, t})));
    for (std::size_t p = 1; p < n; ++p)
      g.laxity.emplace(std::pair{p, n - p}, compose(to_gamma, lax.leg({true, p, n - p, Surjection::identity(n)})));

    // a bijection σ sends the leg at [X, s] to the leg at [X, s∘σ]
    for (const auto& sigma : enumerate_surjections(n, n)) {
      if (sigma.is_identity()) {
        g.structure.emplace(sigma, ChainMap::identity(po.object));
        continue;
      }
      std::vector<ChainMap> cocone;
      for (const auto& o : lax.shape.objects) {
        LatchingObject moved = o;
        moved.s = compose(o.s, sigma);
        cocone.push_back(compose(to_gamma, lax.leg(moved)));
      }
      ChainMap on_lax = must(colimit_universal(lax.colimit, cocone, po.object), "gamma_na: permutation does not descend");
      ChainMap on_f = compose(po.leg_left, f.map(sigma));
      g.structure.emplace(sigma, must(pushout_universal(po, on_f, on_lax), "gamma_na: permutation does not descend"));
    }

    eta.push_back(po.leg_left);
    g.level = n;
    out.levels.push_back({std::move(lax), std::move(classical), std::move(lam), std::move(xi), std::move(po)});
  }
  out.unit = DiagramMorphism{f, underlying(g), eta};
  return out;
}

LaxMorphism universal_extension(const Gamma& free, const LaxDiagram& g, const std::vector<ChainMap>& phi) {
  const PlainDiagram& f = free.source;
  DiagramMorphism check{f, underlying(g), phi};
  const Report r = validate(check);
  if (!r.empty()) throw std::invalid_argument("universal_extension: not a diagram morphism (" + r.front().axiom + ")");

  std::vector<ChainMap> psi{phi.at(0)};
  for (std::size_t n = 2; n <= f.level; ++n) {
    const GammaLevel& lv = free.levels[n - 2];
    std::vector<ChainMap> cocone;
    for (const auto& o : lv.lax.shape.objects) {
      if (o.is_pair)
        cocone.push_back(
            compose(g.map(o.s), compose(g.lax(o.p, o.q), tensor(psi[o.p - 1], psi[o.q - 1]))));
      else
        cocone.push_back(compose(g.map(o.s), psi[o.p - 1]));
    }
    ChainMap on_lax = must(colimit_universal(lv.lax.colimit, cocone, g.at(n)), "universal_extension: cocone does not descend");
    psi.push_back(must(pushout_universal(lv.pushout, phi.at(n - 1), on_lax), "universal_extension: maps do not agree on the latching object"));
  }
  return LaxMorphism{free.diagram, g, std::move(psi)};
}

LaxMorphism universal_extension(const PlainDiagram& f, const LaxDiagram& g, const std::vector<ChainMap>& phi) {
  return universal_extension(gamma_na(f), g, phi);
}

ChainComplex lan_entry(const ChainMap& m, std::size_t n, std::size_t p) {
  if (n < 2) throw ShapeError("lan_entry: n must be at least 2");
  const auto surj = enumerate_surjections(p, n);
  if (p == 1 || surj.empty()) return m.source();
  return wide_pushout(m.source(), std::vector<ChainMap>(surj.size(), m)).object;
}

}  // namespace cosegal
