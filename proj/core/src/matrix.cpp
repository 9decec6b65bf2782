#include "cosegal/matrix.hpp"

#include <utility>

namespace cosegal {

namespace {

struct ModOps {
  std::int64_t p;
  using T = std::int64_t;
  T zero() const { return 0; }
  T one() const { return 1; }
  T add(T a, T b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(T a, T b) const {
    T s = a - b;
    return s < 0 ? s + p : s;
  }
  T mul(T a, T b) const { return a * b % p; }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  bool is_zero(T a) const { return a == 0; }
  T inv(T a, const Field& f) const { return f.inverse(a); }
};

struct RatOps {
  using T = Rational;
  T zero() const { return T(0); }
  T one() const { return T(1); }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  bool is_zero(const T& a) const { return a == 0; }
  T inv(const T& a, const Field&) const { return T(1) / a; }
};

// In-place reduced row echelon form; returns pivot columns.
template <class Ops>
std::vector<std::size_t> rref(std::vector<typename Ops::T>& a, std::size_t rows, std::size_t cols,
                              const Ops& ops, const Field& field) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!ops.is_zero(a[i * cols + c])) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
    auto inv = ops.inv(a[r * cols + c], field);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = ops.mul(a[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      auto factor = a[i * cols + c];
      if (ops.is_zero(factor)) continue;
      for (std::size_t j = c; j < cols; ++j)
        if (!ops.is_zero(a[r * cols + j]))
          a[i * cols + j] = ops.sub(a[i * cols + j], ops.mul(factor, a[r * cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class Fn>
decltype(auto) dispatch(const Field& f, Fn&& fn) {
  if (f.is_rational()) return fn(RatOps{});
  return fn(ModOps{f.characteristic()});
}

template <class T>
std::vector<T>& storage(Matrix& m);
template <>
std::vector<std::int64_t>& storage(Matrix& m) { return m.residues(); }
template <>
std::vector<Rational>& storage(Matrix& m) { return m.rationals(); }
template <class T>
const std::vector<T>& storage(const Matrix& m) { return storage<T>(const_cast<Matrix&>(m)); }

void require_same_field(const Matrix& a, const Matrix& b, const char* what) {
  if (a.field() != b.field())
    throw ShapeError(std::string(what) + ": field mismatch " + a.field().name() + " vs " + b.field().name());
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols) : field_(field), rows_(rows), cols_(cols) {
  if (field.is_rational())
    data_ = std::vector<Rational>(rows * cols);
  else
    data_ = std::vector<std::int64_t>(rows * cols, 0);
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1LL);
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<std::vector<Rational>>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::column(Field field, const std::vector<long long>& entries) {
  Matrix m(field, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, 0, entries[i]);
  return m;
}

Rational Matrix::at(std::size_t r, std::size_t c) const {
  if (field_.is_rational()) return rationals()[r * cols_ + c];
  return Rational(residues()[r * cols_ + c]);
}

void Matrix::set(std::size_t r, std::size_t c, const Rational& v) {
  if (field_.is_rational())
    rationals()[r * cols_ + c] = v;
  else
    residues()[r * cols_ + c] = field_.reduce(v);
}

void Matrix::set(std::size_t r, std::size_t c, long long v) {
  if (field_.is_rational())
    rationals()[r * cols_ + c] = Rational(v);
  else
    residues()[r * cols_ + c] = field_.reduce(static_cast<std::int64_t>(v));
}

bool Matrix::is_zero_at(std::size_t r, std::size_t c) const {
  if (field_.is_rational()) return rationals()[r * cols_ + c] == 0;
  return residues()[r * cols_ + c] == 0;
}

bool Matrix::is_zero() const {
  if (field_.is_rational()) {
    for (const auto& v : rationals())
      if (v != 0) return false;
    return true;
  }
  for (auto v : residues())
    if (v != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      bool zero = is_zero_at(i, j);
      if (i == j ? zero || at(i, j) != 1 : !zero) return false;
    }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  dispatch(field_, [&](auto ops) {
    using T = typename decltype(ops)::T;
    const auto& src = storage<T>(*this);
    auto& dst = storage<T>(t);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) dst[j * rows_ + i] = src[i * cols_ + j];
  });
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_field(*this, rhs, "multiply");
  if (cols_ != rhs.rows_)
    throw ShapeError("multiply: " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
                     std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  Matrix out(field_, rows_, rhs.cols_);
  dispatch(field_, [&](auto ops) {
    using T = typename decltype(ops)::T;
    const auto& a = storage<T>(*this);
    const auto& b = storage<T>(rhs);
    auto& c = storage<T>(out);
    const std::size_t n = rhs.cols_;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& aik = a[i * cols_ + k];
        if (ops.is_zero(aik)) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (!ops.is_zero(b[k * n + j])) c[i * n + j] = ops.add(c[i * n + j], ops.mul(aik, b[k * n + j]));
      }
  });
  return out;
}

void Matrix::require_same_shape(const Matrix& other, const char* what) const {
  require_same_field(*this, other, what);
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError(std::string(what) + ": shape mismatch");
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_shape(rhs, "add");
  Matrix out = *this;
  out.add_block(0, 0, rhs);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (-rhs); }

Matrix Matrix::operator-() const {
  Matrix out = *this;
  dispatch(field_, [&](auto ops) {
    using T = typename decltype(ops)::T;
    for (auto& v : storage<T>(out)) v = ops.neg(v);
  });
  return out;
}

Matrix Matrix::scaled(long long s) const {
  Matrix out = *this;
  dispatch(field_, [&](auto ops) {
    using T = typename decltype(ops)::T;
    T factor;
    if constexpr (std::is_same_v<T, Rational>)
      factor = Rational(s);
    else
      factor = field_.reduce(static_cast<std::int64_t>(s));
    for (auto& v : storage<T>(out)) v = ops.mul(v, factor);
  });
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
  Matrix out(field_, nr, nc);
  dispatch(field_, [&](auto ops) {
    using T = typename decltype(ops)::T;
    const auto& src = storage<T>(*this);
    auto& dst = storage<T>(out);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) dst[i * nc + j] = src[(r0 + i) * cols_ + c0 + j];
  });
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  require_same_field(*this, m, "set_block");
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw ShapeError("set_block out of range");
  dispatch(field_, [&](auto ops) {
    using T = typename decltype(ops)::T;
    const auto& src = storage<T>(m);
    auto& dst = storage<T>(*this);
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) dst[(r0 + i) * cols_ + c0 + j] = src[i * m.cols_ + j];
  });
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  require_same_field(*this, m, "add_block");
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw ShapeError("add_block out of range");
  dispatch(field_, [&](auto ops) {
    using T = typename decltype(ops)::T;
    const auto& src = storage<T>(m);
    auto& dst = storage<T>(*this);
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) {
        auto& d = dst[(r0 + i) * cols_ + c0 + j];
        d = ops.add(d, src[i * m.cols_ + j]);
      }
  });
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "hstack");
  if (a.rows_ != b.rows_) throw ShapeError("hstack: row mismatch");
  Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
  out.set_block(0, 0, a);
  out.set_block(0, a.cols_, b);
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "vstack");
  if (a.cols_ != b.cols_) throw ShapeError("vstack: column mismatch");
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
  out.set_block(0, 0, a);
  out.set_block(a.rows_, 0, b);
  return out;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "direct_sum");
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  out.set_block(0, 0, a);
  out.set_block(a.rows_, a.cols_, b);
  return out;
}

std::vector<std::vector<Rational>> Matrix::to_rows() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = at(i, j);
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Echelon row_reduce(const Matrix& m) {
  Echelon e{m, {}};
  dispatch(m.field(), [&](auto ops) {
    using T = typename decltype(ops)::T;
    e.pivots = rref(storage<T>(e.reduced), m.rows(), m.cols(), ops, m.field());
  });
  return e;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return row_reduce(m).pivots.size();
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs) {
  require_same_field(m, rhs, "solve");
  if (m.rows() != rhs.rows())
    throw ShapeError("solve: system has " + std::to_string(m.rows()) + " rows, rhs has " +
                     std::to_string(rhs.rows()));
  const std::size_t n = m.cols();
  const auto e = row_reduce(Matrix::hstack(m, rhs));
  Matrix x(m.field(), n, rhs.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    x.set_block(e.pivots[r], 0, e.reduced.block(r, n, 1, rhs.cols()));
  }
  return x;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "kron");
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  dispatch(a.field(), [&](auto ops) {
    using T = typename decltype(ops)::T;
    const auto& x = storage<T>(a);
    const auto& y = storage<T>(b);
    auto& z = storage<T>(out);
    const std::size_t oc = out.cols();
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const auto& aij = x[i * a.cols() + j];
        if (ops.is_zero(aij)) continue;
        for (std::size_t k = 0; k < b.rows(); ++k)
          for (std::size_t l = 0; l < b.cols(); ++l)
            z[(i * b.rows() + k) * oc + j * b.cols() + l] = ops.mul(aij, y[k * b.cols() + l]);
      }
  });
  return out;
}

Matrix nullspace(const Matrix& m) {
  const auto e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix basis(m.field(), m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis.set(free[k], k, 1LL);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (!e.reduced.is_zero_at(r, free[k])) basis.set(e.pivots[r], k, -e.reduced.at(r, free[k]));
  }
  return basis;
}

Quotient quotient(std::size_t dim, const Matrix& relation_columns) {
  if (relation_columns.rows() != dim) throw ShapeError("quotient: relation length differs from dimension");
  const Field field = relation_columns.field();
  const auto e = row_reduce(relation_columns.transpose());
  std::vector<bool> is_pivot(dim, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < dim; ++c)
    if (!is_pivot[c]) kept.push_back(c);

  Quotient q{kept.size(), Matrix(field, kept.size(), dim), Matrix(field, dim, kept.size())};
  for (std::size_t j = 0; j < kept.size(); ++j) {
    q.projection.set(j, kept[j], 1LL);
    q.section.set(kept[j], j, 1LL);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (!e.reduced.is_zero_at(r, kept[j])) q.projection.set(j, e.pivots[r], -e.reduced.at(r, kept[j]));
  }
  return q;
}

Quotient quotient(Field field, std::size_t dim, const std::vector<std::vector<Rational>>& relations) {
  Matrix cols(field, dim, relations.size());
  for (std::size_t k = 0; k < relations.size(); ++k) {
    if (relations[k].size() != dim) throw ShapeError("quotient: relation length differs from dimension");
    for (std::size_t i = 0; i < dim; ++i) cols.set(i, k, relations[k][i]);
  }
  return quotient(dim, cols);
}

}  // namespace cosegal
