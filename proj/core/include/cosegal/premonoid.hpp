#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cosegal/chain.hpp"
#include "cosegal/phi_epi.hpp"

namespace cosegal {

/// One failed axiom. `axiom` uses the diagram labels ("functoriality",
/// "diag-laxity-naturality", "associativity", "symmetry", "diag-unitality",
/// "chain-map", "d-squared", "naturality", "multiplicativity", "unit-triangle").
struct Violation {
  std::string axiom;
  std::string where;
  friend bool operator==(const Violation&, const Violation&) = default;
};

using Report = std::vector<Violation>;

/// Functor on surjections up to the truncation level. objects[n-1] is F(n);
/// a surjection s: n ->> m gives structure(s): F(m) -> F(n). F(0) is never
/// stored.
struct PlainDiagram {
  Field field;
  std::size_t level = 0;
  std::vector<ChainComplex> objects;
  std::map<Surjection, ChainMap> structure;

  const ChainComplex& at(std::size_t n) const;
  const ChainMap& map(const Surjection& s) const;
};

/// Adds laxity maps φ_{p,q}: F(p)⊗F(q) -> F(p+q) for p, q ≥ 1, p+q ≤ level.
struct LaxDiagram : PlainDiagram {
  std::map<std::pair<std::size_t, std::size_t>, ChainMap> laxity;

  const ChainMap& lax(std::size_t p, std::size_t q) const;
};

/// Commutative premonoid truncated at `level`: a lax diagram with a unit e: I -> F(1).
struct TruncatedPremonoid : LaxDiagram {
  ChainMap unit;
};

/// Functoriality and chain-map checks. Throws ShapeError on missing or
/// mis-shaped data.
Report validate(const PlainDiagram& f);
/// Adds laxity naturality.
Report validate(const LaxDiagram& f);
/// Adds associativity, symmetry and weak unitality.
Report validate(const TruncatedPremonoid& f);

/// Throws std::invalid_argument listing the first violation, if any.
void require_valid(const TruncatedPremonoid& f, const char* what);

/// Level-wise maps σ_n: F(n) -> G(n).
struct DiagramMorphism {
  PlainDiagram source;
  PlainDiagram target;
  std::vector<ChainMap> components;
  const ChainMap& at(std::size_t n) const { return components.at(n - 1); }
};

struct LaxMorphism {
  LaxDiagram source;
  LaxDiagram target;
  std::vector<ChainMap> components;
  const ChainMap& at(std::size_t n) const { return components.at(n - 1); }
};

struct PremonoidMorphism {
  TruncatedPremonoid source;
  TruncatedPremonoid target;
  std::vector<ChainMap> components;
  const ChainMap& at(std::size_t n) const { return components.at(n - 1); }
};

Report validate(const DiagramMorphism& m);
Report validate(const LaxMorphism& m);
Report validate(const PremonoidMorphism& m);

PremonoidMorphism identity_morphism(const TruncatedPremonoid& f);
/// g after f.
PremonoidMorphism compose(const PremonoidMorphism& g, const PremonoidMorphism& f);

/// Strict commutative monoid (A, μ, e) in chain complexes.
struct StrictMonoid {
  ChainComplex object;
  ChainMap mult;  // A⊗A -> A
  ChainMap unit;  // I -> A

  friend bool operator==(const StrictMonoid&, const StrictMonoid&) = default;
};

/// Checks chain maps, associativity, commutativity and two-sided unitality.
Report validate(const StrictMonoid& m);

/// The unit complex with μ the unitor.
StrictMonoid unit_monoid(Field field);
/// I ⊕ M with M·M = 0.
StrictMonoid square_zero_extension(const ChainComplex& m);
/// k[x]/(x^length) with |x| = degree (even), zero differential.
StrictMonoid truncated_polynomial(Field field, int degree, std::size_t length);
/// A⊗B with the Koszul-signed product.
StrictMonoid tensor_monoid(const StrictMonoid& a, const StrictMonoid& b);

/// Constant diagram of m: identity structure maps, every φ_{p,q} = μ.
TruncatedPremonoid from_strict(const StrictMonoid& m, std::size_t level);
/// The underlying monoid when every structure map is an identity.
std::optional<StrictMonoid> to_strict(const TruncatedPremonoid& f);

/// F(u_n): F(1) -> F(n) is a quasi-isomorphism for 2 ≤ n ≤ level.
bool is_cosegal(const TruncatedPremonoid& f);

/// Quasi-isomorphism, resp. degreewise surjection, at level 1.
bool is_easy_weq(const PremonoidMorphism& s);
bool is_easy_fib(const PremonoidMorphism& s);

struct HStar {
  TruncatedPremonoid premonoid;
  PremonoidMorphism canonical;  // premonoid -> f
};

/// Replaces F(1) by `apex` along h: apex -> F(1). Requires h∘unit = f.unit.
HStar h_star(const TruncatedPremonoid& f, const ChainMap& h, const ChainMap& unit);

/// All surjections n ->> m with 1 ≤ m ≤ n ≤ level.
std::vector<Surjection> all_surjections(std::size_t level);

}  // namespace cosegal
