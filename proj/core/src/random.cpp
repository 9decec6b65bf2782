#include "cosegal/random.hpp"

#include "cosegal/map_system.hpp"

namespace cosegal {

namespace {

long long draw(Field field, Rng& rng) {
  if (field.is_rational()) return std::uniform_int_distribution<long long>(-2, 2)(rng);
  return std::uniform_int_distribution<long long>(0, field.characteristic() - 1)(rng);
}

ChainMap random_combination(const std::vector<ChainMap>& basis, const ChainMap& start, Rng& rng) {
  ChainMap out = start;
  for (const auto& b : basis) {
    const long long c = draw(b.field(), rng);
    if (c == 0) continue;
    std::map<int, Matrix> comps;
    for (const auto& [n, m] : b.components()) comps.emplace(n, m.scaled(c));
    out = out + ChainMap(b.source_ptr(), b.target_ptr(), std::move(comps));
  }
  return out;
}

std::vector<ChainMap> first_of(const std::vector<std::vector<ChainMap>>& sols) {
  std::vector<ChainMap> out;
  for (const auto& s : sols) out.push_back(s.front());
  return out;
}

}  // namespace

Matrix random_matrix(Field field, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const long long v = draw(field, rng);
      if (v != 0) m.set(r, c, v);
    }
  return m;
}

ChainComplex random_complex(Field field, Window window, std::size_t max_dim, Rng& rng) {
  if (window.empty()) return ChainComplex(field);
  std::vector<std::size_t> dims;
  std::uniform_int_distribution<std::size_t> dist(0, max_dim);
  for (int n = window.lo; n <= window.hi; ++n) dims.push_back(dist(rng));
  std::map<int, Matrix> diff;
  Matrix prev(field, 0, dims[0]);  // d_lo
  for (int n = window.lo + 1; n <= window.hi; ++n) {
    const std::size_t i = static_cast<std::size_t>(n - window.lo);
    const Matrix kernel = nullspace(prev);
    Matrix d = kernel * random_matrix(field, kernel.cols(), dims[i], rng);
    prev = d;
    diff.emplace(n, std::move(d));
  }
  return ChainComplex(field, window, std::move(dims), std::move(diff));
}

ChainMap random_chain_map(const ChainComplex& source, const ChainComplex& target, Rng& rng) {
  MapSystem sys(source.field());
  auto s = std::make_shared<const ChainComplex>(source);
  auto t = std::make_shared<const ChainComplex>(target);
  sys.require_chain_map(sys.add_unknown(s, t));
  return random_combination(first_of(sys.homogeneous_basis()), ChainMap(s, t), rng);
}

StrictMonoid random_strict_monoid(Field field, Rng& rng) {
  auto simple = [&](int kind) -> StrictMonoid {
    switch (kind) {
      case 0:
        return unit_monoid(field);
      case 1:
        return square_zero_extension(random_complex(field, {0, 1}, 1, rng));
      default: {
        const int degree = std::uniform_int_distribution<int>(0, 1)(rng) * 2;
        const std::size_t length = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        return truncated_polynomial(field, degree, length);
      }
    }
  };
  const int kind = std::uniform_int_distribution<int>(0, 3)(rng);
  if (kind < 3) return simple(kind);
  StrictMonoid a = simple(std::uniform_int_distribution<int>(1, 2)(rng));
  StrictMonoid b = simple(std::uniform_int_distribution<int>(0, 1)(rng));
  if (a.object.total_dim() * b.object.total_dim() > 6) return a;
  return tensor_monoid(a, b);
}

PlainDiagram random_plain_diagram(Field field, std::size_t level, Window window, std::size_t max_dim, Rng& rng) {
  PlainDiagram f;
  f.field = field;
  f.level = level;
  std::vector<ChainMap> steps;  // steps[n-1]: X_n -> X_{n+1}
  for (std::size_t n = 1; n <= level; ++n) {
    f.objects.push_back(random_complex(field, window, max_dim, rng));
    if (n > 1) steps.push_back(random_chain_map(f.objects[n - 2], f.objects[n - 1], rng));
  }
  for (const auto& s : all_surjections(level)) {
    ChainMap m = ChainMap::identity(f.at(s.target_size()));
    for (std::size_t k = s.target_size(); k < s.source_size(); ++k) m = compose(steps[k - 1], m);
    f.structure.emplace(s, std::move(m));
  }
  return f;
}

TwoConstantPremonoid random_two_constant(Field field, Rng& rng) {
  const StrictMonoid base = random_strict_monoid(field, rng);
  const ChainComplex z = random_complex(field, {0, 1}, 2, rng);
  const bool over_base = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  const ChainComplex first = over_base ? base.object : unit_complex(field);
  const DirectSum sum = direct_sum({first, z});
  const ChainMap g = random_chain_map(z, base.object, rng);
  const ChainMap on_first = over_base ? ChainMap::identity(base.object) : base.unit;
  const ChainMap h = compose(on_first, sum.projections[0]) + compose(g, sum.projections[1]);
  const ChainMap unit = over_base ? compose(sum.inclusions[0], base.unit) : sum.inclusions[0];
  return {base, sum.object, h, unit};
}

std::optional<K2Instruction> random_instruction(const TwoConstantPremonoid& f, int degree, Rng& rng) {
  const Field k = f.apex.field();
  const ChainMap alpha = generating_cofibration(k, degree).inclusion;
  const ChainMap q = random_chain_map(alpha.source(), f.apex, rng);
  const ChainMap hq = compose(f.h, q);

  MapSystem sys(k);
  const auto p = sys.add_unknown(alpha.target_ptr(), f.h.target_ptr());
  sys.require_chain_map(p);
  const ChainComplex& a = f.base.object;
  const Window w = window_union(alpha.window(), a.window());
  for (int n = w.lo; n <= w.hi; ++n)
    sys.add_equation({{p, n, Matrix::identity(k, a.dim(n)), alpha.at(n)}}, hq.at(n));
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  const ChainMap pm = random_combination(first_of(sys.homogeneous_basis()), sol->front(), rng);
  return K2Instruction{alpha, q, pm};
}

K2Instruction sample_instruction(const TwoConstantPremonoid& f, Rng& rng) {
  Window w = f.apex.window();
  if (w.empty()) w = {0, 0};
  std::uniform_int_distribution<int> deg(w.lo, w.hi + 1);
  for (int attempt = 0; attempt < 32; ++attempt)
    if (auto ins = random_instruction(f, deg(rng), rng)) return *ins;
  // q = 0 always admits p = 0
  const int d = deg(rng);
  const ChainMap alpha = generating_cofibration(f.apex.field(), d).inclusion;
  return {alpha, ChainMap::zero(alpha.source(), f.apex), ChainMap::zero(alpha.target(), f.base.object)};
}

}  // namespace cosegal
