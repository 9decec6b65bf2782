#include "cosegal/premonoid.hpp"

#include <sstream>
#include <stdexcept>

namespace cosegal {

namespace {

std::string idx(std::size_t p, std::size_t q) { return "p=" + std::to_string(p) + ",q=" + std::to_string(q); }

void expect(bool ok, const char* what) {
  if (!ok) throw ShapeError(what);
}

void require_map_shape(const ChainMap& m, const ChainComplex& src, const ChainComplex& tgt, const std::string& what) {
  if (!m.source_ptr() || !(m.source() == src) || !(m.target() == tgt)) throw ShapeError(what + ": wrong source or target");
}

}  // namespace

std::vector<Surjection> all_surjections(std::size_t level) {
  std::vector<Surjection> out;
  for (std::size_t n = 1; n <= level; ++n)
    for (std::size_t m = 1; m <= n; ++m)
      for (auto& s : enumerate_surjections(n, m)) out.push_back(std::move(s));
  return out;
}

const ChainComplex& PlainDiagram::at(std::size_t n) const {
  if (n < 1 || n > objects.size()) throw ShapeError("diagram: no object at level " + std::to_string(n));
  return objects[n - 1];
}

const ChainMap& PlainDiagram::map(const Surjection& s) const {
  auto it = structure.find(s);
  if (it == structure.end()) throw ShapeError("diagram: missing structure map " + s.key());
  return it->second;
}

const ChainMap& LaxDiagram::lax(std::size_t p, std::size_t q) const {
  auto it = laxity.find({p, q});
  if (it == laxity.end()) throw ShapeError("diagram: missing laxity map " + idx(p, q));
  return it->second;
}

// ---- validation --------------------------------------------------------------

Report validate(const PlainDiagram& f) {
  expect(f.level >= 1, "diagram: level must be positive");
  expect(f.objects.size() == f.level, "diagram: object count differs from the level");
  for (const auto& o : f.objects) expect(o.field() == f.field, "diagram: object over the wrong field");
  const auto surj = all_surjections(f.level);
  expect(f.structure.size() == surj.size(), "diagram: structure table has the wrong size");
  for (const auto& s : surj)
    require_map_shape(f.map(s), f.at(s.target_size()), f.at(s.source_size()), "structure map " + s.key());

  Report r;
  for (std::size_t n = 1; n <= f.level; ++n)
    if (!f.at(n).d_squared_zero()) r.push_back({"d-squared", "n=" + std::to_string(n)});
  for (const auto& s : surj) {
    if (!f.map(s).is_chain_map()) r.push_back({"chain-map", "structure " + s.key()});
    if (s.is_identity() && !f.map(s).is_identity()) r.push_back({"functoriality", "identity " + s.key()});
  }
  // F(t∘s) = F(s)∘F(t)
  for (const auto& s : surj)
    for (std::size_t k = 1; k <= s.target_size(); ++k)
      for (const auto& t : enumerate_surjections(s.target_size(), k))
        if (!t.is_identity() && !(compose(f.map(s), f.map(t)) == f.map(compose(t, s))))
          r.push_back({"functoriality", "s=" + s.key() + ",t=" + t.key()});
  return r;
}

Report validate(const LaxDiagram& f) {
  Report r = validate(static_cast<const PlainDiagram&>(f));
  expect(f.laxity.size() == f.level * (f.level - 1) / 2, "diagram: laxity table has the wrong size");
  for (std::size_t p = 1; p < f.level; ++p)
    for (std::size_t q = 1; p + q <= f.level; ++q)
      require_map_shape(f.lax(p, q), tensor(f.at(p), f.at(q)), f.at(p + q), "laxity " + idx(p, q));

  for (const auto& [pq, phi] : f.laxity)
    if (!phi.is_chain_map()) r.push_back({"chain-map", "laxity " + idx(pq.first, pq.second)});
  // φ_{p',q'}∘(F(a)⊗F(b)) = F(a+b)∘φ_{p,q}
  for (std::size_t p2 = 1; p2 < f.level; ++p2)
    for (std::size_t q2 = 1; p2 + q2 <= f.level; ++q2)
      for (std::size_t p = 1; p <= p2; ++p)
        for (std::size_t q = 1; q <= q2; ++q)
          for (const auto& a : enumerate_surjections(p2, p))
            for (const auto& b : enumerate_surjections(q2, q)) {
              if (a.is_identity() && b.is_identity()) continue;
              const ChainMap lhs = compose(f.lax(p2, q2), tensor(f.map(a), f.map(b)));
              const ChainMap rhs = compose(f.map(disjoint_sum(a, b)), f.lax(p, q));
              if (!(lhs == rhs)) r.push_back({"diag-laxity-naturality", "a=" + a.key() + ",b=" + b.key()});
            }
  return r;
}

Report validate(const TruncatedPremonoid& f) {
  Report r = validate(static_cast<const LaxDiagram&>(f));
  require_map_shape(f.unit, unit_complex(f.field), f.at(1), "unit");
  if (!f.unit.is_chain_map()) r.push_back({"chain-map", "unit"});

  for (std::size_t p = 1; p < f.level; ++p)
    for (std::size_t q = 1; p + q < f.level; ++q)
      for (std::size_t s = 1; p + q + s <= f.level; ++s) {
        const auto& a = f.at(p);
        const auto& b = f.at(q);
        const auto& c = f.at(s);
        const ChainMap lhs = compose(f.lax(p + q, s), tensor(f.lax(p, q), ChainMap::identity(c)));
        const ChainMap rhs = compose(compose(f.lax(p, q + s), tensor(ChainMap::identity(a), f.lax(q, s))),
                                     associator(a, b, c));
        if (!(lhs == rhs)) r.push_back({"associativity", idx(p, q) + ",r=" + std::to_string(s)});
      }
  for (std::size_t p = 1; p < f.level; ++p)
    for (std::size_t q = 1; p + q <= f.level; ++q) {
      const ChainMap lhs = compose(f.map(Surjection::swap_blocks(q, p)), f.lax(p, q));
      const ChainMap rhs = compose(f.lax(q, p), braiding(f.at(p), f.at(q)));
      if (!(lhs == rhs)) r.push_back({"symmetry", idx(p, q)});
    }
  // φ_{1,1}∘(e⊗1) = F(u_2)∘λ
  if (f.level >= 2) {
    const auto& a = f.at(1);
    const ChainMap lhs = compose(f.lax(1, 1), tensor(f.unit, ChainMap::identity(a)));
    const ChainMap rhs = compose(f.map(Surjection::unique_to_one(2)), left_unitor(a));
    if (!(lhs == rhs)) r.push_back({"diag-unitality", "n=2"});
  }
  return r;
}

void require_valid(const TruncatedPremonoid& f, const char* what) {
  const Report r = validate(f);
  if (!r.empty())
    throw std::invalid_argument(std::string(what) + ": invalid premonoid (" + r.front().axiom + " at " +
                                r.front().where + ")");
}

namespace {

Report validate_components(const PlainDiagram& s, const PlainDiagram& t, const std::vector<ChainMap>& c) {
  validate(s);
  validate(t);
  expect(s.level == t.level, "morphism: levels differ");
  expect(c.size() == s.level, "morphism: component count differs from the level");
  for (std::size_t n = 1; n <= s.level; ++n)
    require_map_shape(c[n - 1], s.at(n), t.at(n), "component " + std::to_string(n));
  Report r;
  for (std::size_t n = 1; n <= s.level; ++n)
    if (!c[n - 1].is_chain_map()) r.push_back({"chain-map", "component " + std::to_string(n)});
  for (const auto& sj : all_surjections(s.level)) {
    if (sj.is_identity()) continue;
    const ChainMap lhs = compose(c[sj.source_size() - 1], s.map(sj));
    const ChainMap rhs = compose(t.map(sj), c[sj.target_size() - 1]);
    if (!(lhs == rhs)) r.push_back({"naturality", "s=" + sj.key()});
  }
  return r;
}

Report multiplicativity(const LaxDiagram& s, const LaxDiagram& t, const std::vector<ChainMap>& c) {
  Report r;
  for (std::size_t p = 1; p < s.level; ++p)
    for (std::size_t q = 1; p + q <= s.level; ++q) {
      const ChainMap lhs = compose(t.lax(p, q), tensor(c[p - 1], c[q - 1]));
      const ChainMap rhs = compose(c[p + q - 1], s.lax(p, q));
      if (!(lhs == rhs)) r.push_back({"multiplicativity", idx(p, q)});
    }
  return r;
}

}  // namespace

Report validate(const DiagramMorphism& m) { return validate_components(m.source, m.target, m.components); }

Report validate(const LaxMorphism& m) {
  Report r = validate_components(m.source, m.target, m.components);
  for (auto& v : multiplicativity(m.source, m.target, m.components)) r.push_back(std::move(v));
  return r;
}

Report validate(const PremonoidMorphism& m) {
  Report r = validate_components(m.source, m.target, m.components);
  for (auto& v : multiplicativity(m.source, m.target, m.components)) r.push_back(std::move(v));
  if (!(compose(m.at(1), m.source.unit) == m.target.unit)) r.push_back({"unit-triangle", "n=1"});
  return r;
}

PremonoidMorphism identity_morphism(const TruncatedPremonoid& f) {
  PremonoidMorphism m{f, f, {}};
  for (const auto& o : f.objects) m.components.push_back(ChainMap::identity(o));
  return m;
}

PremonoidMorphism compose(const PremonoidMorphism& g, const PremonoidMorphism& f) {
  expect(f.target.level == g.source.level, "compose: levels differ");
  PremonoidMorphism m{f.source, g.target, {}};
  for (std::size_t n = 1; n <= f.source.level; ++n) m.components.push_back(compose(g.at(n), f.at(n)));
  return m;
}

// ---- strict monoids ------------------------------------------------------------

Report validate(const StrictMonoid& m) {
  const auto& a = m.object;
  const Field k = a.field();
  require_map_shape(m.mult, tensor(a, a), a, "product");
  require_map_shape(m.unit, unit_complex(k), a, "unit");
  Report r;
  if (!a.d_squared_zero()) r.push_back({"d-squared", "object"});
  if (!m.mult.is_chain_map()) r.push_back({"chain-map", "product"});
  if (!m.unit.is_chain_map()) r.push_back({"chain-map", "unit"});
  const ChainMap id = ChainMap::identity(a);
  if (!(compose(m.mult, tensor(m.mult, id)) == compose(compose(m.mult, tensor(id, m.mult)), associator(a, a, a))))
    r.push_back({"associativity", "product"});
  if (!(compose(m.mult, braiding(a, a)) == m.mult)) r.push_back({"symmetry", "product"});
  if (!(compose(m.mult, tensor(m.unit, id)) == left_unitor(a))) r.push_back({"diag-unitality", "left"});
  if (!(compose(m.mult, tensor(id, m.unit)) == right_unitor(a))) r.push_back({"diag-unitality", "right"});
  return r;
}

StrictMonoid unit_monoid(Field field) {
  const ChainComplex i = unit_complex(field);
  return {i, left_unitor(i), ChainMap::identity(i)};
}

StrictMonoid square_zero_extension(const ChainComplex& m) {
  const Field k = m.field();
  const auto sum = direct_sum({unit_complex(k), m});
  const ChainComplex& a = sum.object;
  const ChainMap inc_i = sum.inclusions[0];
  const ChainMap inc_m = sum.inclusions[1];
  const ChainMap pr_i = sum.projections[0];
  const ChainMap pr_m = sum.projections[1];
  // μ = λ∘(π_I⊗π_I) + ι_M∘λ∘(π_I⊗π_M) + ι_M∘ρ∘(π_M⊗π_I)
  const ChainComplex i = unit_complex(k);
  ChainMap mult = compose(inc_i, compose(left_unitor(i), tensor(pr_i, pr_i)));
  mult = mult + compose(inc_m, compose(left_unitor(m), tensor(pr_i, pr_m)));
  mult = mult + compose(inc_m, compose(right_unitor(m), tensor(pr_m, pr_i)));
  return {a, mult, inc_i};
}

StrictMonoid truncated_polynomial(Field field, int degree, std::size_t length) {
  if (degree % 2 != 0) throw ShapeError("truncated_polynomial: generator degree must be even");
  if (degree < 0) throw ShapeError("truncated_polynomial: generator degree must be non-negative");
  if (length == 0) throw ShapeError("truncated_polynomial: length must be positive");
  const int hi = degree * static_cast<int>(length - 1);
  std::vector<std::size_t> dims(static_cast<std::size_t>(hi + 1), 0);
  if (degree == 0)
    dims[0] = length;
  else
    for (std::size_t e = 0; e < length; ++e) dims[static_cast<std::size_t>(degree) * e] = 1;
  const ChainComplex a(field, {0, hi}, dims);
  const ChainComplex aa = tensor(a, a);
  // basis index of x^e inside its degree
  auto local = [&](std::size_t e) { return degree == 0 ? e : 0; };
  auto deg = [&](std::size_t e) { return degree * static_cast<int>(e); };
  std::map<int, Matrix> comps;
  for (int n = aa.window().lo; n <= aa.window().hi; ++n) comps.emplace(n, Matrix(field, a.dim(n), aa.dim(n)));
  for (std::size_t x = 0; x < length; ++x)
    for (std::size_t y = 0; x + y < length; ++y) {
      const int n = deg(x + y);
      // column of x^x ⊗ x^y in (A⊗A)_n: blocks by left degree
      std::size_t col = 0;
      for (int i = 0; i < deg(x); ++i) col += a.dim(i) * a.dim(n - i);
      col += local(x) * a.dim(deg(y)) + local(y);
      comps.at(n).set(local(x + y), col, 1LL);
    }
  ChainMap mult(aa, a, std::move(comps));
  std::map<int, Matrix> e;
  e.emplace(0, Matrix(field, a.dim(0), 1));
  e.at(0).set(0, 0, 1LL);
  return {a, mult, ChainMap(unit_complex(field), a, std::move(e))};
}

StrictMonoid tensor_monoid(const StrictMonoid& ma, const StrictMonoid& mb) {
  const auto& a = ma.object;
  const auto& b = mb.object;
  const ChainComplex bb = tensor(b, b);
  const ChainMap ia = ChainMap::identity(a);
  const ChainMap ib = ChainMap::identity(b);
  // (A⊗B)⊗(A⊗B) -> A⊗(B⊗(A⊗B)) -> A⊗((B⊗A)⊗B) -> A⊗((A⊗B)⊗B) -> A⊗(A⊗(B⊗B)) -> (A⊗A)⊗(B⊗B)
  ChainMap m = associator(a, b, tensor(a, b));
  m = compose(tensor(ia, inverse(associator(b, a, b))), m);
  m = compose(tensor(ia, tensor(braiding(b, a), ib)), m);
  m = compose(tensor(ia, associator(a, b, b)), m);
  m = compose(inverse(associator(a, a, bb)), m);
  m = compose(tensor(ma.mult, mb.mult), m);
  const ChainComplex i = unit_complex(a.field());
  const ChainMap unit = compose(tensor(ma.unit, mb.unit), inverse(left_unitor(i)));
  return {tensor(a, b), m, unit};
}

// ---- strict <-> constant ---------------------------------------------------------

TruncatedPremonoid from_strict(const StrictMonoid& m, std::size_t level) {
  if (level < 2) throw ShapeError("from_strict: level must be at least 2");
  TruncatedPremonoid f;
  f.field = m.object.field();
  f.level = level;
  f.objects.assign(level, m.object);
  const ChainMap id = ChainMap::identity(m.object);
  for (auto& s : all_surjections(level)) f.structure.emplace(s, id);
  for (std::size_t p = 1; p < level; ++p)
    for (std::size_t q = 1; p + q <= level; ++q) f.laxity.emplace(std::pair{p, q}, m.mult);
  f.unit = m.unit;
  return f;
}

std::optional<StrictMonoid> to_strict(const TruncatedPremonoid& f) {
  for (const auto& o : f.objects)
    if (!(o == f.at(1))) return std::nullopt;
  for (const auto& [s, m] : f.structure)
    if (!m.is_identity()) return std::nullopt;
  for (const auto& [pq, phi] : f.laxity)
    if (!(phi == f.lax(1, 1))) return std::nullopt;
  return StrictMonoid{f.at(1), f.lax(1, 1), f.unit};
}

// ---- predicates ------------------------------------------------------------------

bool is_cosegal(const TruncatedPremonoid& f) {
  require_valid(f, "is_cosegal");
  for (std::size_t n = 2; n <= f.level; ++n)
    if (!is_quasi_iso(f.map(Surjection::unique_to_one(n)))) return false;
  return true;
}

bool is_easy_weq(const PremonoidMorphism& s) {
  const Report r = validate(s);
  if (!r.empty()) throw std::invalid_argument("is_easy_weq: invalid morphism (" + r.front().axiom + ")");
  return is_quasi_iso(s.at(1));
}

bool is_easy_fib(const PremonoidMorphism& s) {
  const Report r = validate(s);
  if (!r.empty()) throw std::invalid_argument("is_easy_fib: invalid morphism (" + r.front().axiom + ")");
  return is_fibration(s.at(1));
}

// ---- h★ ----------------------------------------------------------------------------

HStar h_star(const TruncatedPremonoid& f, const ChainMap& h, const ChainMap& unit) {
  require_map_shape(h, h.source(), f.at(1), "h_star: h");
  require_map_shape(unit, unit_complex(f.field), h.source(), "h_star: unit");
  if (!(compose(h, unit) == f.unit)) throw std::invalid_argument("h_star: h does not carry the unit to the old unit");
  const ChainComplex& apex = h.source();

  TruncatedPremonoid g;
  g.field = f.field;
  g.level = f.level;
  g.objects = f.objects;
  g.objects[0] = apex;
  for (const auto& [s, m] : f.structure) {
    if (s.target_size() != 1)
      g.structure.emplace(s, m);
    else if (s.source_size() == 1)
      g.structure.emplace(s, ChainMap::identity(apex));
    else
      g.structure.emplace(s, compose(m, h));
  }
  for (const auto& [pq, phi] : f.laxity) {
    const auto [p, q] = pq;
    const ChainMap left = p == 1 ? h : ChainMap::identity(f.at(p));
    const ChainMap right = q == 1 ? h : ChainMap::identity(f.at(q));
    g.laxity.emplace(pq, (p == 1 || q == 1) ? compose(phi, tensor(left, right)) : phi);
  }
  g.unit = unit;

  PremonoidMorphism can{g, f, {}};
  can.components.push_back(h);
  for (std::size_t n = 2; n <= f.level; ++n) can.components.push_back(ChainMap::identity(f.at(n)));
  return {std::move(g), std::move(can)};
}

}  // namespace cosegal
