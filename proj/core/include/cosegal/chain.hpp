#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "cosegal/matrix.hpp"

namespace cosegal {

/// Closed integer interval of degrees; empty when lo > hi.
struct Window {
  int lo = 0;
  int hi = -1;

  bool empty() const { return lo > hi; }
  bool contains(int n) const { return lo <= n && n <= hi; }
  Window inflated() const { return empty() ? *this : Window{lo - 1, hi + 1}; }
  friend bool operator==(const Window&, const Window&) = default;
};

Window window_union(Window a, Window b);

/// Bounded chain complex over a field. Degrees outside the window are zero;
/// d(n) maps degree n to degree n - 1.
class ChainComplex {
 public:
  explicit ChainComplex(Field field = Field()) : field_(field) {}
  /// Throws ShapeError if a differential has the wrong shape or lies outside the window.
  ChainComplex(Field field, Window window, std::vector<std::size_t> dims, std::map<int, Matrix> diff = {});

  Field field() const { return field_; }
  Window window() const { return window_; }
  std::size_t dim(int n) const;
  Matrix d(int n) const;
  std::size_t total_dim() const;
  std::map<int, std::size_t> dims() const;
  bool is_zero() const { return total_dim() == 0; }

  bool d_squared_zero() const;

  friend bool operator==(const ChainComplex& a, const ChainComplex& b);

 private:
  Field field_;
  Window window_;
  std::vector<std::size_t> dims_;
  std::map<int, Matrix> diff_;  // only degrees lo+1..hi with nonzero shape
};

ChainComplex unit_complex(Field field);
/// S^d: one dimension in degree d.
ChainComplex sphere(Field field, int d);
/// D^d: one dimension in degrees d and d - 1 with identity differential.
ChainComplex disc(Field field, int d);

/// Degreewise linear map between complexes. Source and target are shared
/// immutable values.
class ChainMap {
 public:
  ChainMap() = default;
  /// Missing components are zero. Throws ShapeError on a shape or field mismatch.
  ChainMap(ChainComplex source, ChainComplex target, std::map<int, Matrix> components = {});
  ChainMap(std::shared_ptr<const ChainComplex> source, std::shared_ptr<const ChainComplex> target,
           std::map<int, Matrix> components = {});

  static ChainMap identity(const ChainComplex& c);
  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

  const ChainComplex& source() const { return *source_; }
  const ChainComplex& target() const { return *target_; }
  std::shared_ptr<const ChainComplex> source_ptr() const { return source_; }
  std::shared_ptr<const ChainComplex> target_ptr() const { return target_; }
  Field field() const { return source_->field(); }
  /// Union of the source and target windows.
  Window window() const;
  Matrix at(int n) const;
  const std::map<int, Matrix>& components() const { return components_; }

  bool is_chain_map() const;
  bool is_zero() const;
  bool is_identity() const;

  ChainMap operator+(const ChainMap& other) const;
  ChainMap operator-(const ChainMap& other) const;
  ChainMap operator-() const;

  friend bool operator==(const ChainMap& a, const ChainMap& b);

 private:
  std::shared_ptr<const ChainComplex> source_;
  std::shared_ptr<const ChainComplex> target_;
  std::map<int, Matrix> components_;
};

/// g after f. Throws ShapeError unless f.target() == g.source().
ChainMap compose(const ChainMap& g, const ChainMap& f);
/// Degreewise inverse of an isomorphism; throws std::invalid_argument otherwise.
ChainMap inverse(const ChainMap& f);

// ---- homology and model-category predicates -------------------------------

/// dim H_n for every n in the inflated window.
std::map<int, std::size_t> homology_dims(const ChainComplex& c);
std::size_t total_homology(const ChainComplex& c);

ChainComplex mapping_cone(const ChainMap& f);
bool is_quasi_iso(const ChainMap& f);

bool is_degreewise_injective(const ChainMap& f);
bool is_degreewise_surjective(const ChainMap& f);
/// Over a field: degreewise injective.
bool is_cofibration(const ChainMap& f);
/// Degreewise surjective.
bool is_fibration(const ChainMap& f);
bool is_trivial_fibration(const ChainMap& f);
/// Degreewise bijective.
bool is_isomorphism(const ChainMap& f);

// ---- sums, tensor products and coherence maps ------------------------------

struct DirectSum {
  ChainComplex object;
  std::vector<ChainMap> inclusions;
  std::vector<ChainMap> projections;
  /// offsets[k][n]: where summand k starts inside degree n.
  std::vector<std::map<int, std::size_t>> offsets;
};

DirectSum direct_sum(const std::vector<ChainComplex>& summands);

/// (C⊗D)_n = ⊕_{i+j=n} C_i⊗D_j, blocks ordered by ascending i, each block in
/// Kronecker order (left index major). d(a⊗b) = da⊗b + (-1)^i a⊗db.
ChainComplex tensor(const ChainComplex& c, const ChainComplex& d);
ChainMap tensor(const ChainMap& f, const ChainMap& g);
/// τ: C⊗D -> D⊗C with Koszul sign (-1)^{ij}.
ChainMap braiding(const ChainComplex& c, const ChainComplex& d);
/// (A⊗B)⊗C -> A⊗(B⊗C).
ChainMap associator(const ChainComplex& a, const ChainComplex& b, const ChainComplex& c);
/// I⊗C -> C and C⊗I -> C; identity-shaped under the basis convention.
ChainMap left_unitor(const ChainComplex& c);
ChainMap right_unitor(const ChainComplex& c);

// ---- factorization ---------------------------------------------------------

/// f = p ∘ i through the mapping cylinder Cyl(f)_n = A_n ⊕ A_{n-1} ⊕ B_n with
/// d(a, a', b) = (da - a', -da', f(a') + db), i(a) = (a, 0, 0), p = f(a) + b.
struct CylinderFactorization {
  ChainComplex cylinder;
  ChainMap i;
  ChainMap p;
};

CylinderFactorization cylinder_factorization(const ChainMap& f);

// ---- generating cofibrations and lifting -----------------------------------

/// The sphere-disc inclusion S^{d-1} -> D^d.
struct GeneratingCofibration {
  int degree = 0;
  ChainMap inclusion;
};

GeneratingCofibration generating_cofibration(Field field, int degree);
/// Every S^{d-1} -> D^d whose disc meets the window, i.e. d in [lo, hi + 1].
std::vector<GeneratingCofibration> generating_cofibrations(Field field, Window window);

/// A lift k: V -> X with k∘alpha = top and g∘k = bottom, or nullopt.
/// Throws ShapeError if the square g∘top = bottom∘alpha does not commute.
std::optional<ChainMap> solve_lifting(const ChainMap& alpha, const ChainMap& g, const ChainMap& top,
                                      const ChainMap& bottom);

struct Square {
  ChainMap top;
  ChainMap bottom;
};

/// A basis of the vector space of commuting squares (top: U->X, bottom: V->Y)
/// from alpha: U->V to g: X->Y.
std::vector<Square> commuting_squares_basis(const ChainMap& alpha, const ChainMap& g);

/// Right lifting property of g against alpha. Lifting problems form a vector
/// space and lifts add, so checking a basis of squares is exhaustive.
bool has_right_lifting(const ChainMap& alpha, const ChainMap& g);

// ---- colimits --------------------------------------------------------------

struct QuotientComplex {
  ChainComplex object;
  ChainMap projection;
  std::map<int, Matrix> section;
};

/// C modulo the subcomplex spanned by per-degree relation columns. Throws if
/// the span is not closed under the differential.
QuotientComplex quotient_complex(const ChainComplex& c, const std::map<int, Matrix>& relations);

/// The unique w with w∘q.projection = h, or nullopt if h does not vanish on
/// the relations.
std::optional<ChainMap> descend(const ChainMap& h, const QuotientComplex& q);

struct Pushout {
  ChainComplex object;
  ChainMap leg_left;   // B -> P
  ChainMap leg_right;  // C -> P
  QuotientComplex presentation;  // P as a quotient of B ⊕ C
};

/// Pushout of B <-f- A -g-> C, computed as (B ⊕ C)/<(f(x), -g(x))>.
Pushout pushout(const ChainMap& f, const ChainMap& g);
/// w: P -> Z with w∘leg_left = u and w∘leg_right = v; nullopt if u∘f != v∘g.
std::optional<ChainMap> pushout_universal(const Pushout& p, const ChainMap& u, const ChainMap& v);

struct WidePushout {
  ChainComplex object;
  std::vector<ChainMap> legs;  // B_k -> P
  ChainMap base_leg;           // A -> P
  QuotientComplex presentation;  // P as a quotient of ⊕ B_k (or of A when empty)
};

/// Wide pushout of maps sharing their source A; A itself for an empty family.
WidePushout wide_pushout(const ChainComplex& base, const std::vector<ChainMap>& maps);
/// Requires a nonempty family.
std::optional<ChainMap> wide_pushout_universal(const WidePushout& p, const std::vector<ChainMap>& cocone);

/// A finite diagram of complexes; arrows index into `objects`.
struct DiagramArrow {
  std::size_t from = 0;
  std::size_t to = 0;
  ChainMap map;
};

struct Colimit {
  ChainComplex object;
  std::vector<ChainMap> legs;
  QuotientComplex presentation;  // quotient of the direct sum of all objects
  DirectSum sum;
};

Colimit colimit(Field field, const std::vector<ChainComplex>& objects, const std::vector<DiagramArrow>& arrows);

/// The induced map out of a colimit given a compatible cocone.
std::optional<ChainMap> colimit_universal(const Colimit& c, const std::vector<ChainMap>& cocone,
                                          const ChainComplex& target);

}  // namespace cosegal
