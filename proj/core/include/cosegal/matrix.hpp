#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "cosegal/field.hpp"

namespace cosegal {

/// Dense matrix over an exact field. Entries are stored reduced: residues in
/// [0, p) for F_p, lowest-terms rationals for Q.
class Matrix {
 public:
  Matrix() : Matrix(Field(), 0, 0) {}
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, const std::vector<std::vector<long long>>& rows);
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<std::vector<Rational>>& rows);
  /// Single column vector.
  static Matrix column(Field field, const std::vector<long long>& entries);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& v);
  void set(std::size_t r, std::size_t c, long long v);
  bool is_zero_at(std::size_t r, std::size_t c) const;

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(long long s) const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Copies `m` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  /// Adds `m` into the block at (r0, c0).
  void add_block(std::size_t r0, std::size_t c0, const Matrix& m);

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix direct_sum(const Matrix& a, const Matrix& b);

  /// Entries as integers: residues for F_p; throws for non-integral rationals.
  std::vector<std::vector<Rational>> to_rows() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

  // Storage access for the elimination kernels.
  const std::vector<std::int64_t>& residues() const { return std::get<0>(data_); }
  std::vector<std::int64_t>& residues() { return std::get<0>(data_); }
  const std::vector<Rational>& rationals() const { return std::get<1>(data_); }
  std::vector<Rational>& rationals() { return std::get<1>(data_); }

 private:
  void require_same_shape(const Matrix& other, const char* what) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::variant<std::vector<std::int64_t>, std::vector<Rational>> data_;
};

/// Result of a reduced row echelon computation.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Some x with m * x = rhs, or nullopt if inconsistent. Free variables are
/// set to zero, so the answer is canonical.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

/// Kronecker product; the left factor's index is major.
Matrix kron(const Matrix& a, const Matrix& b);

/// Basis of the kernel as columns, one per free column of the echelon form.
Matrix nullspace(const Matrix& m);

/// Quotient of k^dim by the span of a set of relation vectors.
/// `projection` is surjective with kernel exactly the span; `section` is the
/// canonical splitting (inclusion of the surviving coordinates), so that
/// projection * section = identity.
struct Quotient {
  std::size_t dim = 0;
  Matrix projection;
  Matrix section;
};

/// Relations given as the columns of a dim x k matrix.
Quotient quotient(std::size_t dim, const Matrix& relation_columns);
Quotient quotient(Field field, std::size_t dim, const std::vector<std::vector<Rational>>& relations);

}  // namespace cosegal
