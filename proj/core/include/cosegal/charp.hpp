#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "cosegal/chain.hpp"

namespace cosegal {

/// Coinvariants of the n-fold tensor power under the signed symmetric group.
struct SymPower {
  ChainComplex base;
  std::size_t exponent = 1;
  ChainComplex power;   // base^⊗n, left-associated
  ChainComplex result;
  ChainMap projection;  // power -> result
};

/// Basis of base^⊗n in its storage order: per degree, the tuples of
/// (degree, index) of the factors.
std::map<int, std::vector<std::vector<std::pair<int, std::size_t>>>> tensor_power_basis(const ChainComplex& base,
                                                                                      std::size_t n);

/// Throws ShapeError for n = 0.
SymPower sym_power(const ChainComplex& c, std::size_t n);

struct CharPReport {
  Field field;
  int disc_degree = 1;
  std::size_t exponent = 2;
  std::map<int, std::size_t> dims;
  std::map<int, std::size_t> homology;
  std::size_t total_homology = 0;
};

/// Homology of the symmetric power of the acyclic disc D^degree.
CharPReport demo_char_p(Field field, std::size_t exponent = 2, int disc_degree = 1);

}  // namespace cosegal
