#pragma once

#include <cstddef>
#include <optional>
#include <random>

#include "cosegal/chain.hpp"
#include "cosegal/cosegal.hpp"
#include "cosegal/premonoid.hpp"

namespace cosegal {

using Rng = std::mt19937_64;

/// Uniform residues over F_p; integers in [-2, 2] over Q.
Matrix random_matrix(Field field, std::size_t rows, std::size_t cols, Rng& rng);

/// Dimensions uniform in [0, max_dim]; each d_n is a random map into ker d_{n-1}.
ChainComplex random_complex(Field field, Window window, std::size_t max_dim, Rng& rng);

/// Uniform random combination of a basis of all chain maps.
ChainMap random_chain_map(const ChainComplex& source, const ChainComplex& target, Rng& rng);

/// Unit, square-zero extensions, truncated polynomials, or a tensor product of two.
StrictMonoid random_strict_monoid(Field field, Rng& rng);

/// A tower X_1 -> ... -> X_N; every surjection n ->> m acts by the composite X_m -> X_n.
PlainDiagram random_plain_diagram(Field field, std::size_t level, Window window, std::size_t max_dim, Rng& rng);

/// Apex I ⊕ Z or A ⊕ Z over a random strict monoid A.
TwoConstantPremonoid random_two_constant(Field field, Rng& rng);

/// Draws q: S^{d-1} -> apex, then solves for p with h∘q = p∘alpha; nullopt if
/// the drawn q admits no p.
std::optional<K2Instruction> random_instruction(const TwoConstantPremonoid& f, int degree, Rng& rng);

/// Retries random_instruction over the degrees [lo, hi + 1] of the apex window.
K2Instruction sample_instruction(const TwoConstantPremonoid& f, Rng& rng);

}  // namespace cosegal
