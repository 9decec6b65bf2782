#include "cosegal/chain.hpp"

#include <algorithm>
#include <stdexcept>

#include "cosegal/map_system.hpp"

namespace cosegal {

Window window_union(Window a, Window b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// ---- ChainComplex ----------------------------------------------------------

ChainComplex::ChainComplex(Field field, Window window, std::vector<std::size_t> dims, std::map<int, Matrix> diff)
    : field_(field), window_(window), dims_(std::move(dims)) {
  if (window_.empty()) {
    window_ = Window{};
    if (!dims_.empty()) throw ShapeError("complex: dims given for an empty window");
  } else if (dims_.size() != static_cast<std::size_t>(window_.hi - window_.lo + 1)) {
    throw ShapeError("complex: expected " + std::to_string(window_.hi - window_.lo + 1) + " dims, got " +
                     std::to_string(dims_.size()));
  }
  for (auto& [n, m] : diff) {
    if (m.field() != field_) throw ShapeError("complex: differential over the wrong field");
    if (m.rows() != dim(n - 1) || m.cols() != dim(n))
      throw ShapeError("complex: d_" + std::to_string(n) + " has shape " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", expected " + std::to_string(dim(n - 1)) + "x" +
                       std::to_string(dim(n)));
    if (!m.empty()) diff_.emplace(n, std::move(m));
  }
}

std::size_t ChainComplex::dim(int n) const {
  if (!window_.contains(n)) return 0;
  return dims_[static_cast<std::size_t>(n - window_.lo)];
}

Matrix ChainComplex::d(int n) const {
  auto it = diff_.find(n);
  if (it != diff_.end()) return it->second;
  return Matrix(field_, dim(n - 1), dim(n));
}

std::size_t ChainComplex::total_dim() const {
  std::size_t t = 0;
  for (auto v : dims_) t += v;
  return t;
}

std::map<int, std::size_t> ChainComplex::dims() const {
  std::map<int, std::size_t> out;
  for (int n = window_.lo; n <= window_.hi; ++n) out[n] = dim(n);
  return out;
}

bool ChainComplex::d_squared_zero() const {
  for (int n = window_.lo + 2; n <= window_.hi; ++n)
    if (!(d(n - 1) * d(n)).is_zero()) return false;
  return true;
}

bool operator==(const ChainComplex& a, const ChainComplex& b) {
  return a.field_ == b.field_ && a.window_ == b.window_ && a.dims_ == b.dims_ && a.diff_ == b.diff_;
}

ChainComplex unit_complex(Field field) { return sphere(field, 0); }

ChainComplex sphere(Field field, int d) { return ChainComplex(field, {d, d}, {1}); }

ChainComplex disc(Field field, int d) {
  return ChainComplex(field, {d - 1, d}, {1, 1}, {{d, Matrix::identity(field, 1)}});
}

// ---- ChainMap --------------------------------------------------------------

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::map<int, Matrix> components)
    : ChainMap(std::make_shared<const ChainComplex>(std::move(source)),
               std::make_shared<const ChainComplex>(std::move(target)), std::move(components)) {}

ChainMap::ChainMap(std::shared_ptr<const ChainComplex> source, std::shared_ptr<const ChainComplex> target,
                   std::map<int, Matrix> components)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_->field() != target_->field()) throw ShapeError("chain map: source and target fields differ");
  const Window w = window();
  for (auto& [n, m] : components) {
    if (m.field() != source_->field()) throw ShapeError("chain map: component over the wrong field");
    if (m.rows() != target_->dim(n) || m.cols() != source_->dim(n))
      throw ShapeError("chain map: component " + std::to_string(n) + " has shape " + std::to_string(m.rows()) +
                       "x" + std::to_string(m.cols()) + ", expected " + std::to_string(target_->dim(n)) + "x" +
                       std::to_string(source_->dim(n)));
  }
  for (int n = w.lo; n <= w.hi; ++n) {
    auto it = components.find(n);
    components_.emplace(n, it != components.end() ? std::move(it->second)
                                                  : Matrix(source_->field(), target_->dim(n), source_->dim(n)));
  }
}

ChainMap ChainMap::identity(const ChainComplex& c) {
  auto p = std::make_shared<const ChainComplex>(c);
  std::map<int, Matrix> comps;
  for (int n = c.window().lo; n <= c.window().hi; ++n) comps.emplace(n, Matrix::identity(c.field(), c.dim(n)));
  return ChainMap(p, p, std::move(comps));
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) { return ChainMap(source, target); }

Window ChainMap::window() const { return window_union(source_->window(), target_->window()); }

Matrix ChainMap::at(int n) const {
  auto it = components_.find(n);
  if (it != components_.end()) return it->second;
  return Matrix(source_->field(), target_->dim(n), source_->dim(n));
}

bool ChainMap::is_chain_map() const {
  const Window w = window();
  for (int n = w.lo; n <= w.hi + 1; ++n)
    if (!(target_->d(n) * at(n) == at(n - 1) * source_->d(n))) return false;
  return true;
}

bool ChainMap::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

bool ChainMap::is_identity() const {
  if (!(*source_ == *target_)) return false;
  return std::all_of(components_.begin(), components_.end(),
                     [](const auto& kv) { return kv.second.is_identity(); });
}

namespace {

bool same_complex(const std::shared_ptr<const ChainComplex>& a, const std::shared_ptr<const ChainComplex>& b) {
  return a == b || *a == *b;
}

}  // namespace

ChainMap ChainMap::operator+(const ChainMap& other) const {
  if (!same_complex(source_, other.source_) || !same_complex(target_, other.target_))
    throw ShapeError("chain map sum: differing source or target");
  std::map<int, Matrix> comps;
  for (const auto& [n, m] : components_) comps.emplace(n, m + other.at(n));
  return ChainMap(source_, target_, std::move(comps));
}

ChainMap ChainMap::operator-(const ChainMap& other) const { return *this + (-other); }

ChainMap ChainMap::operator-() const {
  std::map<int, Matrix> comps;
  for (const auto& [n, m] : components_) comps.emplace(n, -m);
  return ChainMap(source_, target_, std::move(comps));
}

bool operator==(const ChainMap& a, const ChainMap& b) {
  return same_complex(a.source_, b.source_) && same_complex(a.target_, b.target_) && a.components_ == b.components_;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!same_complex(f.target_ptr(), g.source_ptr())) throw ShapeError("compose: target of f is not source of g");
  const Window w = window_union(f.source().window(), g.target().window());
  std::map<int, Matrix> comps;
  for (int n = w.lo; n <= w.hi; ++n) comps.emplace(n, g.at(n) * f.at(n));
  return ChainMap(f.source_ptr(), g.target_ptr(), std::move(comps));
}

ChainMap inverse(const ChainMap& f) {
  std::map<int, Matrix> comps;
  const Window w = f.window();
  for (int n = w.lo; n <= w.hi; ++n) {
    const Matrix m = f.at(n);
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not an isomorphism");
    auto x = solve(m, Matrix::identity(f.field(), m.rows()));
    if (!x || rank(m) != m.rows()) throw std::invalid_argument("inverse: not an isomorphism");
    comps.emplace(n, std::move(*x));
  }
  return ChainMap(f.target_ptr(), f.source_ptr(), std::move(comps));
}

// ---- homology --------------------------------------------------------------

std::map<int, std::size_t> homology_dims(const ChainComplex& c) {
  std::map<int, std::size_t> out;
  const Window w = c.window().inflated();
  for (int n = w.lo; n <= w.hi; ++n) out[n] = c.dim(n) - rank(c.d(n)) - rank(c.d(n + 1));
  return out;
}

std::size_t total_homology(const ChainComplex& c) {
  std::size_t t = 0;
  for (const auto& [n, h] : homology_dims(c)) t += h;
  return t;
}

ChainComplex mapping_cone(const ChainMap& f) {
  const auto& a = f.source();
  const auto& b = f.target();
  const Field k = f.field();
  Window shifted = a.window().empty() ? Window{} : Window{a.window().lo + 1, a.window().hi + 1};
  const Window w = window_union(shifted, b.window());
  std::vector<std::size_t> dims;
  std::map<int, Matrix> diff;
  for (int n = w.lo; n <= w.hi; ++n) dims.push_back(a.dim(n - 1) + b.dim(n));
  for (int n = w.lo + 1; n <= w.hi; ++n) {
    Matrix m(k, a.dim(n - 2) + b.dim(n - 1), a.dim(n - 1) + b.dim(n));
    m.set_block(0, 0, -a.d(n - 1));
    m.set_block(a.dim(n - 2), 0, f.at(n - 1));
    m.set_block(a.dim(n - 2), a.dim(n - 1), b.d(n));
    diff.emplace(n, std::move(m));
  }
  return ChainComplex(k, w, std::move(dims), std::move(diff));
}

bool is_quasi_iso(const ChainMap& f) { return total_homology(mapping_cone(f)) == 0; }

bool is_degreewise_injective(const ChainMap& f) {
  const Window w = f.window();
  for (int n = w.lo; n <= w.hi; ++n)
    if (rank(f.at(n)) != f.source().dim(n)) return false;
  return true;
}

bool is_degreewise_surjective(const ChainMap& f) {
  const Window w = f.window();
  for (int n = w.lo; n <= w.hi; ++n)
    if (rank(f.at(n)) != f.target().dim(n)) return false;
  return true;
}

bool is_cofibration(const ChainMap& f) { return is_degreewise_injective(f); }
bool is_fibration(const ChainMap& f) { return is_degreewise_surjective(f); }
bool is_trivial_fibration(const ChainMap& f) { return is_fibration(f) && is_quasi_iso(f); }
bool is_isomorphism(const ChainMap& f) { return is_degreewise_injective(f) && is_degreewise_surjective(f); }

// ---- direct sums and tensor products -----------------------------------------

DirectSum direct_sum(const std::vector<ChainComplex>& summands) {
  if (summands.empty()) throw ShapeError("direct_sum: no summands");
  const Field k = summands.front().field();
  Window w{};
  for (const auto& s : summands) {
    if (s.field() != k) throw ShapeError("direct_sum: field mismatch");
    w = window_union(w, s.window());
  }
  DirectSum out;
  out.offsets.resize(summands.size());
  std::vector<std::size_t> dims;
  for (int n = w.lo; n <= w.hi; ++n) {
    std::size_t off = 0;
    for (std::size_t s = 0; s < summands.size(); ++s) {
      out.offsets[s][n] = off;
      off += summands[s].dim(n);
    }
    dims.push_back(off);
  }
  std::map<int, Matrix> diff;
  for (int n = w.lo + 1; n <= w.hi; ++n) {
    Matrix m(k, dims[n - 1 - w.lo], dims[n - w.lo]);
    for (std::size_t s = 0; s < summands.size(); ++s)
      m.set_block(out.offsets[s][n - 1], out.offsets[s][n], summands[s].d(n));
    diff.emplace(n, std::move(m));
  }
  auto obj = std::make_shared<const ChainComplex>(k, w, std::move(dims), std::move(diff));
  out.object = *obj;
  for (std::size_t s = 0; s < summands.size(); ++s) {
    auto src = std::make_shared<const ChainComplex>(summands[s]);
    std::map<int, Matrix> inc, proj;
    for (int n = w.lo; n <= w.hi; ++n) {
      Matrix i(k, obj->dim(n), src->dim(n));
      i.set_block(out.offsets[s][n], 0, Matrix::identity(k, src->dim(n)));
      proj.emplace(n, i.transpose());
      inc.emplace(n, std::move(i));
    }
    out.inclusions.emplace_back(src, obj, std::move(inc));
    out.projections.emplace_back(obj, src, std::move(proj));
  }
  return out;
}

namespace {

// Block offsets of C⊗D: offset[n][i] is where C_i⊗D_{n-i} starts in degree n.
struct TensorLayout {
  Window window;
  std::map<int, std::map<int, std::size_t>> offset;
  std::map<int, std::size_t> dim;

  TensorLayout(const ChainComplex& c, const ChainComplex& d) {
    if (c.window().empty() || d.window().empty()) return;
    window = {c.window().lo + d.window().lo, c.window().hi + d.window().hi};
    for (int n = window.lo; n <= window.hi; ++n) {
      std::size_t off = 0;
      for (int i = c.window().lo; i <= c.window().hi; ++i) {
        offset[n][i] = off;
        off += c.dim(i) * d.dim(n - i);
      }
      dim[n] = off;
    }
  }

  std::size_t at(int n, int i) const { return offset.at(n).at(i); }
};

long long koszul(int i, int j) { return ((i % 2 != 0) && (j % 2 != 0)) ? -1 : 1; }

}  // namespace

ChainComplex tensor(const ChainComplex& c, const ChainComplex& d) {
  if (c.field() != d.field()) throw ShapeError("tensor: field mismatch");
  const Field k = c.field();
  TensorLayout lay(c, d);
  if (lay.window.empty()) return ChainComplex(k);
  std::vector<std::size_t> dims;
  for (int n = lay.window.lo; n <= lay.window.hi; ++n) dims.push_back(lay.dim[n]);
  std::map<int, Matrix> diff;
  for (int n = lay.window.lo + 1; n <= lay.window.hi; ++n) {
    Matrix m(k, lay.dim[n - 1], lay.dim[n]);
    for (int i = c.window().lo; i <= c.window().hi; ++i) {
      const int j = n - i;
      const std::size_t ci = c.dim(i), dj = d.dim(j);
      if (ci * dj == 0) continue;
      const std::size_t col = lay.at(n, i);
      if (c.dim(i - 1) > 0) m.set_block(lay.at(n - 1, i - 1), col, kron(c.d(i), Matrix::identity(k, dj)));
      if (d.dim(j - 1) > 0)
        m.add_block(lay.at(n - 1, i), col, kron(Matrix::identity(k, ci), d.d(j)).scaled(i % 2 == 0 ? 1 : -1));
    }
    diff.emplace(n, std::move(m));
  }
  return ChainComplex(k, lay.window, std::move(dims), std::move(diff));
}

ChainMap tensor(const ChainMap& f, const ChainMap& g) {
  const auto& a = f.source();
  const auto& b = g.source();
  const auto& a2 = f.target();
  const auto& b2 = g.target();
  auto src = std::make_shared<const ChainComplex>(tensor(a, b));
  auto tgt = std::make_shared<const ChainComplex>(tensor(a2, b2));
  TensorLayout ls(a, b), lt(a2, b2);
  const Window w = window_union(src->window(), tgt->window());
  const Window wi = window_union(a.window(), a2.window());
  std::map<int, Matrix> comps;
  for (int n = w.lo; n <= w.hi; ++n) {
    Matrix m(f.field(), tgt->dim(n), src->dim(n));
    for (int i = wi.lo; i <= wi.hi; ++i) {
      const int j = n - i;
      if (a.dim(i) * b.dim(j) == 0 || a2.dim(i) * b2.dim(j) == 0) continue;
      m.set_block(lt.at(n, i), ls.at(n, i), kron(f.at(i), g.at(j)));
    }
    comps.emplace(n, std::move(m));
  }
  return ChainMap(src, tgt, std::move(comps));
}

ChainMap braiding(const ChainComplex& c, const ChainComplex& d) {
  auto src = std::make_shared<const ChainComplex>(tensor(c, d));
  auto tgt = std::make_shared<const ChainComplex>(tensor(d, c));
  TensorLayout ls(c, d), lt(d, c);
  std::map<int, Matrix> comps;
  for (int n = ls.window.lo; n <= ls.window.hi; ++n) {
    Matrix m(c.field(), tgt->dim(n), src->dim(n));
    for (int i = c.window().lo; i <= c.window().hi; ++i) {
      const int j = n - i;
      const std::size_t ci = c.dim(i), dj = d.dim(j);
      if (ci * dj == 0) continue;
      const long long sign = koszul(i, j);
      for (std::size_t x = 0; x < ci; ++x)
        for (std::size_t y = 0; y < dj; ++y) m.set(lt.at(n, j) + y * ci + x, ls.at(n, i) + x * dj + y, sign);
    }
    comps.emplace(n, std::move(m));
  }
  return ChainMap(src, tgt, std::move(comps));
}

ChainMap associator(const ChainComplex& a, const ChainComplex& b, const ChainComplex& c) {
  const ChainComplex ab = tensor(a, b);
  const ChainComplex bc = tensor(b, c);
  auto src = std::make_shared<const ChainComplex>(tensor(ab, c));
  auto tgt = std::make_shared<const ChainComplex>(tensor(a, bc));
  TensorLayout l_ab(a, b), l_bc(b, c), l_src(ab, c), l_tgt(a, bc);
  std::map<int, Matrix> comps;
  for (int n = l_src.window.lo; n <= l_src.window.hi; ++n) {
    Matrix m(a.field(), tgt->dim(n), src->dim(n));
    for (int i = a.window().lo; i <= a.window().hi; ++i)
      for (int j = b.window().lo; j <= b.window().hi; ++j) {
        const int kk = n - i - j;
        const std::size_t ai = a.dim(i), bj = b.dim(j), ck = c.dim(kk);
        if (ai * bj * ck == 0) continue;
        for (std::size_t x = 0; x < ai; ++x)
          for (std::size_t y = 0; y < bj; ++y)
            for (std::size_t z = 0; z < ck; ++z) {
              const std::size_t s = l_src.at(n, i + j) + (l_ab.at(i + j, i) + x * bj + y) * ck + z;
              const std::size_t t = l_tgt.at(n, i) + x * bc.dim(j + kk) + l_bc.at(j + kk, j) + y * ck + z;
              m.set(t, s, 1LL);
            }
      }
    comps.emplace(n, std::move(m));
  }
  return ChainMap(src, tgt, std::move(comps));
}

namespace {

ChainMap identity_shaped(const ChainComplex& from, const ChainComplex& to) {
  std::map<int, Matrix> comps;
  for (int n = to.window().lo; n <= to.window().hi; ++n) comps.emplace(n, Matrix::identity(to.field(), to.dim(n)));
  return ChainMap(from, to, std::move(comps));
}

}  // namespace

ChainMap left_unitor(const ChainComplex& c) { return identity_shaped(tensor(unit_complex(c.field()), c), c); }

ChainMap right_unitor(const ChainComplex& c) { return identity_shaped(tensor(c, unit_complex(c.field())), c); }

// ---- cylinder ----------------------------------------------------------------

CylinderFactorization cylinder_factorization(const ChainMap& f) {
  const auto& a = f.source();
  const auto& b = f.target();
  const Field k = f.field();
  Window shifted = a.window().empty() ? Window{} : Window{a.window().lo + 1, a.window().hi + 1};
  const Window w = window_union(window_union(a.window(), shifted), b.window());
  std::vector<std::size_t> dims;
  for (int n = w.lo; n <= w.hi; ++n) dims.push_back(a.dim(n) + a.dim(n - 1) + b.dim(n));
  std::map<int, Matrix> diff;
  for (int n = w.lo + 1; n <= w.hi; ++n) {
    // rows: A_{n-1} | A_{n-2} | B_{n-1}; columns: A_n | A_{n-1} | B_n
    const std::size_t r1 = a.dim(n - 1), r2 = a.dim(n - 2);
    const std::size_t c1 = a.dim(n), c2 = a.dim(n - 1);
    Matrix m(k, r1 + r2 + b.dim(n - 1), c1 + c2 + b.dim(n));
    m.set_block(0, 0, a.d(n));
    m.set_block(0, c1, -Matrix::identity(k, r1));
    m.set_block(r1, c1, -a.d(n - 1));
    m.set_block(r1 + r2, c1, f.at(n - 1));
    m.set_block(r1 + r2, c1 + c2, b.d(n));
    diff.emplace(n, std::move(m));
  }
  auto cyl = std::make_shared<const ChainComplex>(k, w, std::move(dims), std::move(diff));
  std::map<int, Matrix> ic, pc;
  for (int n = w.lo; n <= w.hi; ++n) {
    Matrix i(k, cyl->dim(n), a.dim(n));
    i.set_block(0, 0, Matrix::identity(k, a.dim(n)));
    ic.emplace(n, std::move(i));
    Matrix p(k, b.dim(n), cyl->dim(n));
    p.set_block(0, 0, f.at(n));
    p.set_block(0, a.dim(n) + a.dim(n - 1), Matrix::identity(k, b.dim(n)));
    pc.emplace(n, std::move(p));
  }
  CylinderFactorization out{*cyl, ChainMap(f.source_ptr(), cyl, std::move(ic)),
                            ChainMap(cyl, f.target_ptr(), std::move(pc))};
  return out;
}

// ---- lifting -------------------------------------------------------------------

GeneratingCofibration generating_cofibration(Field field, int degree) {
  std::map<int, Matrix> comps{{degree - 1, Matrix::identity(field, 1)}};
  return {degree, ChainMap(sphere(field, degree - 1), disc(field, degree), std::move(comps))};
}

std::vector<GeneratingCofibration> generating_cofibrations(Field field, Window window) {
  std::vector<GeneratingCofibration> out;
  if (window.empty()) return out;
  for (int d = window.lo; d <= window.hi + 1; ++d) out.push_back(generating_cofibration(field, d));
  return out;
}

namespace {

Window all_degrees(std::initializer_list<const ChainComplex*> cs) {
  Window w{};
  for (const auto* c : cs) w = window_union(w, c->window());
  return w;
}

}  // namespace

std::optional<ChainMap> solve_lifting(const ChainMap& alpha, const ChainMap& g, const ChainMap& top,
                                      const ChainMap& bottom) {
  if (!(compose(g, top) == compose(bottom, alpha))) throw ShapeError("solve_lifting: square does not commute");
  const Field k = alpha.field();
  MapSystem sys(k);
  const auto lift = sys.add_unknown(alpha.target_ptr(), g.source_ptr());
  sys.require_chain_map(lift);
  const auto& u = alpha.source();
  const auto& v = alpha.target();
  const auto& x = g.source();
  const auto& y = g.target();
  const Window w = all_degrees({&u, &v, &x, &y});
  for (int n = w.lo; n <= w.hi; ++n) {
    sys.add_equation({{lift, n, Matrix::identity(k, x.dim(n)), alpha.at(n)}}, top.at(n));
    sys.add_equation({{lift, n, g.at(n), Matrix::identity(k, v.dim(n))}}, bottom.at(n));
  }
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return sol->front();
}

std::vector<Square> commuting_squares_basis(const ChainMap& alpha, const ChainMap& g) {
  const Field k = alpha.field();
  MapSystem sys(k);
  const auto top = sys.add_unknown(alpha.source_ptr(), g.source_ptr());
  const auto bottom = sys.add_unknown(alpha.target_ptr(), g.target_ptr());
  sys.require_chain_map(top);
  sys.require_chain_map(bottom);
  const auto& u = alpha.source();
  const auto& v = alpha.target();
  const auto& x = g.source();
  const auto& y = g.target();
  const Window w = all_degrees({&u, &v, &x, &y});
  for (int n = w.lo; n <= w.hi; ++n)
    sys.add_equation({{top, n, g.at(n), Matrix::identity(k, u.dim(n))},
                      {bottom, n, -Matrix::identity(k, y.dim(n)), alpha.at(n)}},
                     Matrix(k, y.dim(n), u.dim(n)));
  std::vector<Square> out;
  for (auto& sol : sys.homogeneous_basis()) out.push_back({sol[0], sol[1]});
  return out;
}

bool has_right_lifting(const ChainMap& alpha, const ChainMap& g) {
  for (const auto& sq : commuting_squares_basis(alpha, g))
    if (!solve_lifting(alpha, g, sq.top, sq.bottom)) return false;
  return true;
}

// ---- colimits ------------------------------------------------------------------

QuotientComplex quotient_complex(const ChainComplex& c, const std::map<int, Matrix>& relations) {
  const Field k = c.field();
  const Window w = c.window();
  std::map<int, Quotient> qs;
  for (int n = w.lo; n <= w.hi; ++n) {
    auto it = relations.find(n);
    qs.emplace(n, it != relations.end() ? quotient(c.dim(n), it->second) : quotient(c.dim(n), Matrix(k, c.dim(n), 0)));
  }
  for (const auto& [n, rel] : relations)
    if (!w.contains(n) && !rel.empty() && rel.rows() != 0) throw ShapeError("quotient_complex: relation outside window");

  std::vector<std::size_t> dims;
  for (int n = w.lo; n <= w.hi; ++n) dims.push_back(qs.at(n).dim);
  std::map<int, Matrix> diff;
  for (int n = w.lo + 1; n <= w.hi; ++n) {
    const Matrix pd = qs.at(n - 1).projection * c.d(n);
    auto it = relations.find(n);
    if (it != relations.end() && !(pd * it->second).is_zero())
      throw std::logic_error("quotient_complex: relations are not a subcomplex");
    diff.emplace(n, pd * qs.at(n).section);
  }
  auto obj = std::make_shared<const ChainComplex>(k, w, std::move(dims), std::move(diff));
  std::map<int, Matrix> proj, sect;
  for (auto& [n, q] : qs) {
    proj.emplace(n, q.projection);
    sect.emplace(n, q.section);
  }
  return {*obj, ChainMap(std::make_shared<const ChainComplex>(c), obj, std::move(proj)), std::move(sect)};
}

std::optional<ChainMap> descend(const ChainMap& h, const QuotientComplex& q) {
  std::map<int, Matrix> comps;
  const Window w = q.object.window();
  for (int n = w.lo; n <= w.hi; ++n) comps.emplace(n, h.at(n) * q.section.at(n));
  ChainMap out(q.projection.target_ptr(), h.target_ptr(), std::move(comps));
  if (!(compose(out, q.projection) == h)) return std::nullopt;
  return out;
}

Pushout pushout(const ChainMap& f, const ChainMap& g) {
  if (!same_complex(f.source_ptr(), g.source_ptr())) throw ShapeError("pushout: maps do not share a source");
  const auto sum = direct_sum({f.target(), g.target()});
  const auto& a = f.source();
  std::map<int, Matrix> rel;
  const Window w = sum.object.window();
  for (int n = w.lo; n <= w.hi; ++n) {
    Matrix r(f.field(), sum.object.dim(n), a.dim(n));
    if (a.dim(n) > 0) {
      r.set_block(sum.offsets[0].at(n), 0, f.at(n));
      r.set_block(sum.offsets[1].at(n), 0, -g.at(n));
    }
    rel.emplace(n, std::move(r));
  }
  auto q = quotient_complex(sum.object, rel);
  Pushout out{q.object, compose(q.projection, sum.inclusions[0]), compose(q.projection, sum.inclusions[1]), q};
  return out;
}

std::optional<ChainMap> pushout_universal(const Pushout& p, const ChainMap& u, const ChainMap& v) {
  const auto& sum = p.presentation.projection.source();
  std::map<int, Matrix> comps;
  for (int n = sum.window().lo; n <= sum.window().hi; ++n)
    comps.emplace(n, Matrix::hstack(u.at(n), v.at(n)));
  ChainMap h(p.presentation.projection.source_ptr(), u.target_ptr(), std::move(comps));
  return descend(h, p.presentation);
}

WidePushout wide_pushout(const ChainComplex& base, const std::vector<ChainMap>& maps) {
  if (maps.empty()) {
    auto q = quotient_complex(base, {});
    return {q.object, {}, q.projection, q};
  }
  std::vector<ChainComplex> targets;
  for (const auto& m : maps) {
    if (!(m.source() == base)) throw ShapeError("wide_pushout: map does not start at the base");
    targets.push_back(m.target());
  }
  const auto sum = direct_sum(targets);
  const Window w = sum.object.window();
  std::map<int, Matrix> rel;
  for (int n = w.lo; n <= w.hi; ++n) {
    const std::size_t an = base.dim(n);
    Matrix r(base.field(), sum.object.dim(n), an * (maps.size() - 1));
    if (an > 0)
      for (std::size_t k = 1; k < maps.size(); ++k) {
        r.set_block(sum.offsets[0].at(n), (k - 1) * an, maps[0].at(n));
        r.add_block(sum.offsets[k].at(n), (k - 1) * an, -maps[k].at(n));
      }
    rel.emplace(n, std::move(r));
  }
  auto q = quotient_complex(sum.object, rel);
  WidePushout out{q.object, {}, ChainMap(), q};
  for (const auto& inc : sum.inclusions) out.legs.push_back(compose(q.projection, inc));
  out.base_leg = compose(out.legs[0], maps[0]);
  return out;
}

std::optional<ChainMap> wide_pushout_universal(const WidePushout& p, const std::vector<ChainMap>& cocone) {
  if (p.legs.empty() || cocone.size() != p.legs.size())
    throw ShapeError("wide_pushout_universal: cocone size differs from the family");
  const auto& sum = p.presentation.projection.source();
  std::map<int, Matrix> comps;
  for (int n = sum.window().lo; n <= sum.window().hi; ++n) {
    Matrix m = cocone[0].at(n);
    for (std::size_t k = 1; k < cocone.size(); ++k) m = Matrix::hstack(m, cocone[k].at(n));
    comps.emplace(n, std::move(m));
  }
  ChainMap h(p.presentation.projection.source_ptr(), cocone[0].target_ptr(), std::move(comps));
  return descend(h, p.presentation);
}

Colimit colimit(Field field, const std::vector<ChainComplex>& objects, const std::vector<DiagramArrow>& arrows) {
  if (objects.empty()) {
    ChainComplex zero(field);
    auto q = quotient_complex(zero, {});
    return {zero, {}, q, DirectSum{zero, {}, {}, {}}};
  }
  auto sum = direct_sum(objects);
  const Window w = sum.object.window();
  std::map<int, Matrix> rel;
  for (int n = w.lo; n <= w.hi; ++n) {
    std::size_t cols = 0;
    for (const auto& a : arrows) cols += objects.at(a.from).dim(n);
    Matrix r(field, sum.object.dim(n), cols);
    std::size_t c = 0;
    for (const auto& a : arrows) {
      const std::size_t dn = objects[a.from].dim(n);
      if (dn == 0) continue;
      r.set_block(sum.offsets[a.from].at(n), c, Matrix::identity(field, dn));
      r.add_block(sum.offsets[a.to].at(n), c, -a.map.at(n));
      c += dn;
    }
    rel.emplace(n, std::move(r));
  }
  auto q = quotient_complex(sum.object, rel);
  Colimit out{q.object, {}, q, sum};
  for (const auto& inc : out.sum.inclusions) out.legs.push_back(compose(q.projection, inc));
  return out;
}

std::optional<ChainMap> colimit_universal(const Colimit& c, const std::vector<ChainMap>& cocone,
                                          const ChainComplex& target) {
  if (cocone.size() != c.legs.size()) throw ShapeError("colimit_universal: cocone size differs from the diagram");
  const auto& sum = c.presentation.projection.source();
  auto tgt = cocone.empty() ? std::make_shared<const ChainComplex>(target) : cocone[0].target_ptr();
  std::map<int, Matrix> comps;
  for (int n = sum.window().lo; n <= sum.window().hi; ++n) {
    Matrix m(sum.field(), tgt->dim(n), sum.dim(n));
    for (std::size_t k = 0; k < cocone.size(); ++k)
      if (c.sum.offsets[k].count(n)) m.set_block(0, c.sum.offsets[k].at(n), cocone[k].at(n));
    comps.emplace(n, std::move(m));
  }
  ChainMap h(c.presentation.projection.source_ptr(), tgt, std::move(comps));
  return descend(h, c.presentation);
}

}  // namespace cosegal
