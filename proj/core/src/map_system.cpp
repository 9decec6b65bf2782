#include "cosegal/map_system.hpp"

namespace cosegal {

std::size_t MapSystem::add_unknown(std::shared_ptr<const ChainComplex> source,
                                   std::shared_ptr<const ChainComplex> target) {
  if (source->field() != field_ || target->field() != field_) throw ShapeError("map system: field mismatch");
  Unknown u{source, target, window_union(source->window(), target->window()), {}};
  for (int n = u.window.lo; n <= u.window.hi; ++n) {
    u.offset[n] = variables_;
    variables_ += source->dim(n) * target->dim(n);
  }
  unknowns_.push_back(std::move(u));
  return unknowns_.size() - 1;
}

void MapSystem::add_equation(const std::vector<Term>& terms, const Matrix& rhs) {
  Equation eq;
  const std::size_t r = rhs.rows(), c = rhs.cols();
  eq.rhs = Matrix(field_, r * c, 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (!rhs.is_zero_at(i, j)) eq.rhs.set(i * c + j, 0, rhs.at(i, j));
  for (const auto& t : terms) {
    const auto& u = unknowns_.at(t.unknown);
    const std::size_t sd = u.source->dim(t.degree), td = u.target->dim(t.degree);
    if (t.left.rows() != r || t.right.cols() != c || t.left.cols() != td || t.right.rows() != sd)
      throw ShapeError("map system: term shape mismatch");
    // degrees outside the unknown's window have no variables
    if (sd == 0 || td == 0 || r * c == 0) continue;
    // vec(L X R) = (L ⊗ R^T) vec(X) for row-major vectorization
    eq.blocks.emplace_back(u.offset.at(t.degree), kron(t.left, t.right.transpose()));
  }
  rows_ += r * c;
  equations_.push_back(std::move(eq));
}

void MapSystem::require_chain_map(std::size_t unknown) {
  const auto u = unknowns_.at(unknown);
  for (int n = u.window.lo; n <= u.window.hi + 1; ++n) {
    const auto& s = *u.source;
    const auto& t = *u.target;
    std::vector<Term> terms;
    if (u.window.contains(n))
      terms.push_back({unknown, n, t.d(n), Matrix::identity(field_, s.dim(n))});
    if (u.window.contains(n - 1))
      terms.push_back({unknown, n - 1, -Matrix::identity(field_, t.dim(n - 1)), s.d(n)});
    add_equation(terms, Matrix(field_, t.dim(n - 1), s.dim(n)));
  }
}

void MapSystem::assemble(Matrix& a, Matrix& b) const {
  a = Matrix(field_, rows_, variables_);
  b = Matrix(field_, rows_, 1);
  std::size_t row = 0;
  for (const auto& eq : equations_) {
    for (const auto& [col, block] : eq.blocks) a.add_block(row, col, block);
    b.set_block(row, 0, eq.rhs);
    row += eq.rhs.rows();
  }
}

std::vector<ChainMap> MapSystem::unpack(const Matrix& x, std::size_t column) const {
  std::vector<ChainMap> maps;
  for (const auto& u : unknowns_) {
    std::map<int, Matrix> comps;
    for (const auto& [n, off] : u.offset) {
      const std::size_t sd = u.source->dim(n), td = u.target->dim(n);
      Matrix m(field_, td, sd);
      for (std::size_t i = 0; i < td; ++i)
        for (std::size_t j = 0; j < sd; ++j)
          if (!x.is_zero_at(off + i * sd + j, column)) m.set(i, j, x.at(off + i * sd + j, column));
      comps.emplace(n, std::move(m));
    }
    maps.emplace_back(u.source, u.target, std::move(comps));
  }
  return maps;
}

std::optional<std::vector<ChainMap>> MapSystem::solve() const {
  Matrix a, b;
  assemble(a, b);
  auto x = cosegal::solve(a, b);
  if (!x) return std::nullopt;
  return unpack(*x, 0);
}

std::vector<std::vector<ChainMap>> MapSystem::homogeneous_basis() const {
  Matrix a, b;
  assemble(a, b);
  const Matrix basis = nullspace(a);
  std::vector<std::vector<ChainMap>> out;
  for (std::size_t k = 0; k < basis.cols(); ++k) out.push_back(unpack(basis, k));
  return out;
}

}  // namespace cosegal
