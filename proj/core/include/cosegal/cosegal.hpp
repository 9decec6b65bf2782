#pragma once

#include <cstddef>
#include <vector>

#include "cosegal/chain.hpp"
#include "cosegal/premonoid.hpp"

namespace cosegal {

/// Commutative square g∘top = bottom∘alpha from alpha: U -> V to g: X -> Y.
struct ArrowSquare {
  ChainMap alpha;
  ChainMap top;
  ChainMap bottom;
  ChainMap g;

  bool commutes() const { return compose(g, top) == compose(bottom, alpha); }
};

/// Premonoid that is a strict monoid from level 2 on, with a possibly
/// different object at level 1 mapping in along h.
struct TwoConstantPremonoid {
  StrictMonoid base;
  ChainComplex apex;
  ChainMap h;     // apex -> base.object
  ChainMap unit;  // I -> apex, with h∘unit = base.unit
};

/// Shape checks, the unit factorization, and the expanded premonoid at `level`.
Report validate(const TwoConstantPremonoid& f, std::size_t level = 2);

/// The constant premonoid of m seen as 2-constant with h the identity.
TwoConstantPremonoid two_constant_of(const StrictMonoid& m);

/// h★ of the constant diagram on the base.
TruncatedPremonoid expand_to_premonoid(const TwoConstantPremonoid& f, std::size_t level);

/// The base; this is the reflection into strict monoids on this shape.
StrictMonoid reflect(const TwoConstantPremonoid& f);
/// The underlying monoid of a constant premonoid; throws
/// std::invalid_argument("reflect: unsupported shape") otherwise.
StrictMonoid reflect(const TruncatedPremonoid& f);

struct FundamentalFactorization {
  PremonoidMorphism rho;      // onto the 2-constant premonoid
  PremonoidMorphism epsilon;  // into the constant premonoid of the base
};

FundamentalFactorization fundamental_factorization(const TwoConstantPremonoid& f, std::size_t level);

/// One member of the localizing set: the generator alpha at level n.
struct InstructionTemplate {
  GeneratingCofibration alpha;
  std::size_t level = 2;
};

/// One template per generator S^{d-1} -> D^d with d in [lo, hi + 1] and per
/// level 2 ≤ n ≤ N.
std::vector<InstructionTemplate> localizing_set(Field field, Window window, std::size_t level);

/// Cell attachment data at level 2: alpha: U -> V, q: U -> apex and
/// p: V -> base.object with h∘q = p∘alpha.
struct K2Instruction {
  ChainMap alpha;
  ChainMap q;
  ChainMap p;

  ArrowSquare square(const TwoConstantPremonoid& f) const { return {alpha, q, p, f.h}; }
};

/// Instruction for the generator of the given degree.
K2Instruction make_instruction(int degree, const ChainMap& q, const ChainMap& p);

struct K2Pushout {
  TwoConstantPremonoid result;
  PremonoidMorphism upsilon;  // expand(f) -> expand(result)
  Pushout apex;               // apex ⊔_U V
};

/// Attaches one cell. Throws std::invalid_argument if the square does not commute.
K2Pushout pushout_k2(const TwoConstantPremonoid& f, const K2Instruction& ins, std::size_t level = 2);

/// ζ: expand(result) -> theta.target with ζ∘Υ = theta and ζ_1∘i_V = k, where
/// k: V -> G(1). nullopt if the cocone is incompatible.
std::optional<PremonoidMorphism> pushout_k2_universal(const K2Pushout& po, const PremonoidMorphism& theta,
                                                      const ChainMap& k);

struct K2WidePushout {
  TwoConstantPremonoid result;
  PremonoidMorphism upsilon;
  Colimit apex;  // objects: apex, then U_i, V_i per instruction
  std::vector<ChainMap> cell_legs;  // V_i -> new apex
};

/// All cells attached at once; the empty list returns f.
K2WidePushout wide_pushout_two_constant(const TwoConstantPremonoid& f, const std::vector<K2Instruction>& ins,
                                        std::size_t level = 2);

struct K2Iterated {
  TwoConstantPremonoid result;
  ChainMap apex_leg;                // old apex -> new apex
  std::vector<ChainMap> cell_legs;  // V_i -> new apex
};

/// Cells attached one at a time, each q transported along the previous legs.
K2Iterated iterated_pushout_k2(const TwoConstantPremonoid& f, const std::vector<K2Instruction>& ins);

struct Cosegalification {
  TwoConstantPremonoid result;
  PremonoidMorphism tau;  // expand(f) -> expand(result)
  CylinderFactorization factorization;
};

/// Factors h through its mapping cylinder, making the new h a trivial fibration.
Cosegalification cosegalify_two_constant(const TwoConstantPremonoid& f, std::size_t level);

/// Every F(u_n), 2 ≤ n ≤ level, is a trivial fibration. Also decides the
/// lifting formulation against the generating cofibrations and throws
/// std::logic_error if the two disagree.
bool is_k_injective(const TruncatedPremonoid& f);
bool is_k_injective(const TwoConstantPremonoid& f, std::size_t level);
/// The lifting formulation alone.
bool is_k_injective_by_lifting(const TruncatedPremonoid& f);

}  // namespace cosegal
