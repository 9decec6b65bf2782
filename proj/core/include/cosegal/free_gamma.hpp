#pragma once

#include <cstddef>
#include <vector>

#include "cosegal/chain.hpp"
#include "cosegal/phi_epi.hpp"
#include "cosegal/premonoid.hpp"

namespace cosegal {

/// Colimit over a latching shape, with one leg per shape object.
struct Latching {
  LatchingShape shape;
  Colimit colimit;
  const ChainComplex& object() const { return colimit.object; }
  const ChainMap& leg(const LatchingObject& o) const;
};

/// Lax latching object of h at level n; uses only the data of h below n.
Latching lax_latching(const LaxDiagram& h, std::size_t n);
/// Ordinary latching object of f at level n.
Latching classical_latching(const PlainDiagram& f, std::size_t n);
/// L_n f -> f(n), induced by the structure maps.
ChainMap latching_map(const PlainDiagram& f, const Latching& classical);

/// L_n f -> L_n^⊗ h sending the leg at [k, t] to the lax leg at [k, t]
/// precomposed with eta_k: f(k) -> h(k). eta is indexed by level - 1.
ChainMap delta_map(const Latching& classical, const Latching& lax, const std::vector<ChainMap>& eta);
/// The comparison L_n(Uh) -> L_n^⊗ h.
ChainMap delta_map(const LaxDiagram& h, std::size_t n);

/// Per-level data of the free construction.
struct GammaLevel {
  Latching lax;
  Latching classical;
  ChainMap latching;  // L_n f -> f(n)
  ChainMap xi;        // L_n f -> L_n^⊗ Γ
  Pushout pushout;    // f(n) ⊔ L_n^⊗ Γ
};

struct Gamma {
  PlainDiagram source;
  LaxDiagram diagram;
  DiagramMorphism unit;       // f -> underlying diagram of Γ(f)
  std::vector<GammaLevel> levels;  // levels[n-2] for n ≥ 2
};

/// Free nonassociative lax diagram on f, built level by level as pushouts.
/// Throws std::invalid_argument if f does not validate.
Gamma gamma_na(const PlainDiagram& f);

/// The lax morphism Γ(f) -> g extending phi: f -> Ug. Throws
/// std::invalid_argument if phi is not a diagram morphism.
LaxMorphism universal_extension(const Gamma& free, const LaxDiagram& g, const std::vector<ChainMap>& phi);
LaxMorphism universal_extension(const PlainDiagram& f, const LaxDiagram& g, const std::vector<ChainMap>& phi);

/// The underlying plain diagram of a lax diagram.
PlainDiagram underlying(const LaxDiagram& g);

/// Entry at p of the left Kan extension along u_n of the arrow m: m0 -> m1:
/// m0 when no surjection p ->> n exists, otherwise the wide pushout of one
/// copy of m per surjection.
ChainComplex lan_entry(const ChainMap& m, std::size_t n, std::size_t p);

}  // namespace cosegal
