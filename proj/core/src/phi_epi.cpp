#include "cosegal/phi_epi.hpp"

#include <algorithm>
#include <sstream>

#include "cosegal/field.hpp"

namespace cosegal {

Surjection::Surjection(std::size_t target_size, std::vector<std::size_t> map)
    : target_(target_size), map_(std::move(map)) {
  if (map_.empty() || target_ == 0) throw ShapeError("surjection: sizes must be positive");
  std::vector<bool> hit(target_, false);
  for (auto v : map_) {
    if (v >= target_) throw ShapeError("surjection: value out of range");
    hit[v] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw ShapeError("surjection: not surjective");
}

namespace {

std::size_t image_size(const std::vector<std::size_t>& map) {
  return map.empty() ? 0 : *std::max_element(map.begin(), map.end()) + 1;
}

}  // namespace

Surjection::Surjection(std::vector<std::size_t> map) : Surjection(image_size(map), map) {}

Surjection Surjection::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return Surjection(n, std::move(m));
}

Surjection Surjection::unique_to_one(std::size_t n) { return Surjection(1, std::vector<std::size_t>(n, 0)); }

Surjection Surjection::swap_blocks(std::size_t a, std::size_t b) {
  std::vector<std::size_t> m(a + b);
  for (std::size_t x = 0; x < a + b; ++x) m[x] = x < a ? x + b : x - a;
  return Surjection(a + b, std::move(m));
}

bool Surjection::is_identity() const {
  if (!is_bijection()) return false;
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != i) return false;
  return true;
}

std::string Surjection::key() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < map_.size(); ++i) out << (i ? "," : "") << map_[i];
  return out.str();
}

Surjection Surjection::from_key(const std::string& key) {
  std::vector<std::size_t> m;
  std::istringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw ShapeError("surjection key: bad entry '" + part + "'");
    m.push_back(std::stoul(part));
  }
  return Surjection(std::move(m));
}

std::vector<Surjection> enumerate_surjections(std::size_t m, std::size_t n) {
  std::vector<Surjection> out;
  if (m == 0 || n == 0 || n > m) return out;
  std::vector<std::size_t> f(m, 0);
  std::vector<std::size_t> hits(n, 0);
  hits[0] = m;
  // odometer over all functions, least significant digit last
  while (true) {
    if (std::find(hits.begin(), hits.end(), 0) == hits.end()) out.emplace_back(n, f);
    std::size_t i = m;
    while (i > 0) {
      --i;
      --hits[f[i]];
      if (f[i] + 1 < n) {
        ++f[i];
        ++hits[f[i]];
        break;
      }
      f[i] = 0;
      ++hits[0];
      if (i == 0) return out;
    }
  }
}

Surjection compose(const Surjection& g, const Surjection& f) {
  if (f.target_size() != g.source_size()) throw ShapeError("compose: surjection sizes do not match");
  std::vector<std::size_t> m(f.source_size());
  for (std::size_t x = 0; x < m.size(); ++x) m[x] = g(f(x));
  return Surjection(g.target_size(), std::move(m));
}

Surjection disjoint_sum(const Surjection& u, const Surjection& v) {
  std::vector<std::size_t> m = u.map();
  for (auto x : v.map()) m.push_back(x + u.target_size());
  return Surjection(u.target_size() + v.target_size(), std::move(m));
}

std::size_t surjection_count(std::size_t m, std::size_t n) {
  // S(i, j) = j S(i-1, j) + S(i-1, j-1)
  std::vector<std::vector<std::size_t>> s(m + 1, std::vector<std::size_t>(n + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  std::size_t fact = 1;
  for (std::size_t j = 2; j <= n; ++j) fact *= j;
  return fact * s[m][n];
}

std::size_t LatchingShape::find(const LatchingObject& o) const {
  auto it = std::find(objects.begin(), objects.end(), o);
  return static_cast<std::size_t>(it - objects.begin());
}

LatchingShape latching_shape(std::size_t n, bool classical) {
  if (n < 2) throw ShapeError("latching_shape: level must be at least 2");
  LatchingShape shape;
  shape.level = n;
  shape.classical = classical;
  if (!classical)
    for (std::size_t total = 2; total <= n; ++total)
      for (std::size_t p = 1; p < total; ++p)
        for (auto& s : enumerate_surjections(n, total)) shape.objects.push_back({true, p, total - p, s});
  for (std::size_t k = 1; k < n; ++k)
    for (auto& t : enumerate_surjections(n, k)) shape.objects.push_back({false, k, 0, t});

  const auto& objs = shape.objects;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const auto& src = objs[i];
    for (std::size_t j = 0; j < objs.size(); ++j) {
      if (i == j) continue;
      const auto& dst = objs[j];
      if (src.is_pair && dst.is_pair) {
        if (dst.p < src.p || dst.q < src.q) continue;
        // s_src = (a+b)∘s_dst
        for (auto& a : enumerate_surjections(dst.p, src.p))
          for (auto& b : enumerate_surjections(dst.q, src.q))
            if (compose(disjoint_sum(a, b), dst.s) == src.s) shape.arrows.push_back({i, j, a, b});
      } else if (src.is_pair && !dst.is_pair) {
        if (dst.p < src.total()) continue;
        for (auto& c : enumerate_surjections(dst.p, src.total()))
          if (compose(c, dst.s) == src.s) shape.arrows.push_back({i, j, c, {}});
      } else if (!src.is_pair && !dst.is_pair) {
        if (dst.p < src.p) continue;
        for (auto& c : enumerate_surjections(dst.p, src.p))
          if (compose(c, dst.s) == src.s) shape.arrows.push_back({i, j, c, {}});
      }
    }
  }
  return shape;
}

std::vector<std::size_t> classical_embedding(const LatchingShape& classical, const LatchingShape& lax) {
  std::vector<std::size_t> out;
  for (const auto& o : classical.objects) {
    const std::size_t idx = lax.find(o);
    if (idx == lax.objects.size()) throw ShapeError("classical_embedding: object missing from the lax shape");
    out.push_back(idx);
  }
  return out;
}

}  // namespace cosegal
