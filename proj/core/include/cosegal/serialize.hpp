#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "cosegal/charp.hpp"
#include "cosegal/cosegal.hpp"
#include "cosegal/free_gamma.hpp"
#include "cosegal/premonoid.hpp"

namespace cosegal {

using Json = nlohmann::json;

/// Malformed or schema-violating document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorted keys, two-space indent, trailing newline.
std::string canonical(const Json& j);

Json to_json(const Matrix& m);
Json to_json(const ChainComplex& c);
/// {"source", "target", "components"}
Json to_json(const ChainMap& f);
/// {deg: rows} for every degree with a nonempty component.
Json components_json(const ChainMap& f);
Json to_json(const StrictMonoid& m);
Json to_json(const PlainDiagram& f);
Json to_json(const LaxDiagram& f);
Json to_json(const TruncatedPremonoid& f);
Json to_json(const PremonoidMorphism& m);
Json to_json(const TwoConstantPremonoid& f);
Json to_json(const K2Instruction& ins);
Json to_json(const Report& r);
Json to_json(const Surjection& s);
Json to_json(const LatchingShape& s);
Json to_json(const CharPReport& r);

Field field_from_json(const Json& j);
Matrix matrix_from_json(const Json& j, Field field, std::size_t rows, std::size_t cols);
ChainComplex complex_from_json(const Json& j);
ChainMap map_from_json(const Json& j);
ChainMap components_from_json(const Json& j, const ChainComplex& source, const ChainComplex& target);
StrictMonoid monoid_from_json(const Json& j);
PlainDiagram diagram_from_json(const Json& j);
LaxDiagram lax_diagram_from_json(const Json& j);
TruncatedPremonoid premonoid_from_json(const Json& j);
PremonoidMorphism morphism_from_json(const Json& j);
TwoConstantPremonoid two_constant_from_json(const Json& j);
K2Instruction instruction_from_json(const Json& j, const TwoConstantPremonoid& f);

/// The "kind" tag of a document; throws ParseError if absent.
std::string kind_of(const Json& j);

}  // namespace cosegal
