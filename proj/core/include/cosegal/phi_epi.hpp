#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cosegal {

/// A surjection between the finite sets {0..m-1} and {0..n-1}. An arrow m -> n
/// of the opposite category is stored as the surjection n ->> m.
class Surjection {
 public:
  Surjection() = default;
  /// Throws ShapeError if some target element is missed or out of range.
  Surjection(std::size_t target_size, std::vector<std::size_t> map);
  /// Target size inferred as max + 1.
  explicit Surjection(std::vector<std::size_t> map);
  Surjection(std::initializer_list<std::size_t> map) : Surjection(std::vector<std::size_t>(map)) {}

  static Surjection identity(std::size_t n);
  /// n ->> 1.
  static Surjection unique_to_one(std::size_t n);
  /// The bijection a+b -> b+a moving the first block behind the second.
  static Surjection swap_blocks(std::size_t a, std::size_t b);

  std::size_t source_size() const { return map_.size(); }
  std::size_t target_size() const { return target_; }
  std::size_t operator()(std::size_t x) const { return map_[x]; }
  const std::vector<std::size_t>& map() const { return map_; }

  bool is_identity() const;
  bool is_bijection() const { return source_size() == target_size(); }

  /// "0,0,1"
  std::string key() const;
  static Surjection from_key(const std::string& key);

  friend bool operator==(const Surjection&, const Surjection&) = default;
  friend auto operator<=>(const Surjection& a, const Surjection& b) {
    if (auto c = a.map_.size() <=> b.map_.size(); c != 0) return c;
    if (auto c = a.target_ <=> b.target_; c != 0) return c;
    return a.map_ <=> b.map_;
  }

 private:
  std::size_t target_ = 0;
  std::vector<std::size_t> map_;
};

/// All surjections m ->> n in lexicographic order of their arrays.
std::vector<Surjection> enumerate_surjections(std::size_t m, std::size_t n);

/// g after f.
Surjection compose(const Surjection& g, const Surjection& f);
/// u on the first block, v on the second.
Surjection disjoint_sum(const Surjection& u, const Surjection& v);

/// n! S(m, n), computed from the Stirling recurrence.
std::size_t surjection_count(std::size_t m, std::size_t n);

/// Objects and arrows of the latching category at level n.
///
/// Pair objects [(p, q), s: n ->> p+q] carry F(p)⊗F(q); single objects
/// [k, t: n ->> k] with k < n carry F(k). Pairs with an empty side are left
/// out: each is glued isomorphically to the single object with the same
/// surjection, so the colimit does not change.
struct LatchingObject {
  bool is_pair = false;
  std::size_t p = 0;  // left size, or k for a single object
  std::size_t q = 0;
  Surjection s;

  std::size_t total() const { return is_pair ? p + q : p; }
  friend bool operator==(const LatchingObject&, const LatchingObject&) = default;
};

/// Arrow `from -> to` in the direction values travel.
///   pair -> pair:     (a: p'->>p, b: q'->>q), acting by F(a)⊗F(b)
///   pair -> single:   c: k ->> p+q, acting by F(c)∘φ
///   single -> single: c: k' ->> k, acting by F(c)
struct LatchingArrow {
  std::size_t from = 0;
  std::size_t to = 0;
  Surjection left;
  Surjection right;  // only for pair -> pair
};

struct LatchingShape {
  std::size_t level = 0;
  bool classical = false;
  std::vector<LatchingObject> objects;
  std::vector<LatchingArrow> arrows;

  /// Index of an object, or objects.size() if absent.
  std::size_t find(const LatchingObject& o) const;
};

/// classical = false gives the lax shape (pairs and singles); true gives the
/// ordinary latching shape (singles only). Throws ShapeError for n < 2.
LatchingShape latching_shape(std::size_t n, bool classical);

/// For each object of the classical shape, its index in the lax shape.
std::vector<std::size_t> classical_embedding(const LatchingShape& classical, const LatchingShape& lax);

}  // namespace cosegal
