#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cosegal/chain.hpp"

namespace cosegal {

/// Linear equations whose unknowns are degreewise maps between complexes.
/// Each equation reads Σ left · X_unknown(degree) · right = rhs; the system is
/// solved by vectorizing every unknown component (row-major).
class MapSystem {
 public:
  struct Term {
    std::size_t unknown = 0;
    int degree = 0;
    Matrix left;
    Matrix right;
  };

  explicit MapSystem(Field field) : field_(field) {}

  std::size_t add_unknown(std::shared_ptr<const ChainComplex> source, std::shared_ptr<const ChainComplex> target);
  void add_equation(const std::vector<Term>& terms, const Matrix& rhs);
  /// d∘X = X∘d in every degree.
  void require_chain_map(std::size_t unknown);

  /// Canonical solution (free variables zero) or nullopt.
  std::optional<std::vector<ChainMap>> solve() const;
  /// Basis of the solutions of the homogeneous system.
  std::vector<std::vector<ChainMap>> homogeneous_basis() const;

  std::size_t variable_count() const { return variables_; }

 private:
  struct Unknown {
    std::shared_ptr<const ChainComplex> source;
    std::shared_ptr<const ChainComplex> target;
    Window window;
    std::map<int, std::size_t> offset;
  };
  struct Equation {
    std::vector<std::pair<std::size_t, Matrix>> blocks;  // column offset, coefficients
    Matrix rhs;                                          // vectorized, one column
  };

  void assemble(Matrix& a, Matrix& b) const;
  std::vector<ChainMap> unpack(const Matrix& x, std::size_t column) const;

  Field field_;
  std::vector<Unknown> unknowns_;
  std::vector<Equation> equations_;
  std::size_t variables_ = 0;
  std::size_t rows_ = 0;
};

}  // namespace cosegal
