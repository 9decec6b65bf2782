#include "cosegal/serialize.hpp"

namespace cosegal {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    fail("expected an integer key, got \"" + text + "\"");
  }
  if (used != text.size()) fail("expected an integer key, got \"" + text + "\"");
  return v;
}

Json entry(const Matrix& m, std::size_t r, std::size_t c) {
  const Rational v = m.at(r, c);
  if (boost::multiprecision::denominator(v) == 1) {
    const BigInt n = boost::multiprecision::numerator(v);
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
      return static_cast<std::int64_t>(n);
  }
  return to_string(v);
}

Rational parse_entry(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
      fail(std::string("bad matrix entry: ") + e.what());
    }
  }
  fail("matrix entries must be integers or \"a/b\" strings");
}

std::string pair_key(std::size_t p, std::size_t q) { return std::to_string(p) + "," + std::to_string(q); }

std::pair<std::size_t, std::size_t> parse_pair(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) fail("laxity key must be \"p,q\", got \"" + key + "\"");
  const int p = parse_int(key.substr(0, comma));
  const int q = parse_int(key.substr(comma + 1));
  if (p < 1 || q < 1) fail("laxity key must have positive entries");
  return {static_cast<std::size_t>(p), static_cast<std::size_t>(q)};
}

void put_diagram(Json& j, const PlainDiagram& f) {
  j["field"] = f.field.characteristic();
  j["level"] = f.level;
  Json objects = Json::object();
  for (std::size_t n = 1; n <= f.objects.size(); ++n) objects[std::to_string(n)] = to_json(f.at(n));
  j["objects"] = objects;
  Json structure = Json::object();
  for (const auto& [s, m] : f.structure) structure[s.key()] = components_json(m);
  j["structure"] = structure;
}

void put_laxity(Json& j, const LaxDiagram& f) {
  Json laxity = Json::object();
  for (const auto& [pq, m] : f.laxity) laxity[pair_key(pq.first, pq.second)] = components_json(m);
  j["laxity"] = laxity;
}

void read_diagram(const Json& j, PlainDiagram& f) {
  f.field = field_from_json(field_of(j, "field"));
  const Json& level = field_of(j, "level");
  if (!level.is_number_integer() || level.get<std::int64_t>() < 1) fail("level must be a positive integer");
  f.level = level.get<std::size_t>();
  const Json& objects = field_of(j, "objects");
  for (std::size_t n = 1; n <= f.level; ++n) {
    const std::string key = std::to_string(n);
    if (!objects.contains(key)) fail("missing object " + key);
    f.objects.push_back(complex_from_json(objects.at(key)));
    if (f.objects.back().field() != f.field) fail("object " + key + " is over a different field");
  }
  const Json& structure = field_of(j, "structure");
  if (!structure.is_object()) fail("structure must be an object");
  for (const auto& [key, comps] : structure.items()) {
    Surjection s;
    try {
      s = Surjection::from_key(key);
    } catch (const ShapeError& e) {
      fail(e.what());
    }
    if (s.source_size() > f.level) fail("structure key " + key + " exceeds the level");
    f.structure.emplace(s, components_from_json(comps, f.at(s.target_size()), f.at(s.source_size())));
  }
  // identities may be omitted
  for (std::size_t n = 1; n <= f.level; ++n) f.structure.emplace(Surjection::identity(n), ChainMap::identity(f.at(n)));
}

void read_laxity(const Json& j, LaxDiagram& f) {
  const Json& laxity = field_of(j, "laxity");
  if (!laxity.is_object()) fail("laxity must be an object");
  for (const auto& [key, comps] : laxity.items()) {
    const auto [p, q] = parse_pair(key);
    if (p + q > f.level) fail("laxity key " + key + " exceeds the level");
    f.laxity.emplace(std::pair{p, q}, components_from_json(comps, tensor(f.at(p), f.at(q)), f.at(p + q)));
  }
}

}  // namespace

std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(entry(m, r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ChainComplex& c) {
  Json j;
  j["field"] = c.field().characteristic();
  j["window"] = Json::array({c.window().lo, c.window().hi});
  Json dims = Json::object();
  Json diff = Json::object();
  for (int n = c.window().lo; n <= c.window().hi; ++n) {
    dims[std::to_string(n)] = c.dim(n);
    if (n > c.window().lo && c.dim(n) * c.dim(n - 1) > 0) diff[std::to_string(n)] = to_json(c.d(n));
  }
  j["dims"] = dims;
  j["diff"] = diff;
  return j;
}

Json components_json(const ChainMap& f) {
  Json j = Json::object();
  for (const auto& [n, m] : f.components())
    if (!m.empty()) j[std::to_string(n)] = to_json(m);
  return j;
}

Json to_json(const ChainMap& f) {
  return {{"kind", "map"}, {"source", to_json(f.source())}, {"target", to_json(f.target())},
          {"components", components_json(f)}};
}

Json to_json(const StrictMonoid& m) {
  return {{"kind", "monoid"},
          {"object", to_json(m.object)},
          {"mult", components_json(m.mult)},
          {"unit", components_json(m.unit)}};
}

Json to_json(const PlainDiagram& f) {
  Json j;
  j["kind"] = "diagram";
  put_diagram(j, f);
  return j;
}

Json to_json(const LaxDiagram& f) {
  Json j;
  j["kind"] = "lax-diagram";
  put_diagram(j, f);
  put_laxity(j, f);
  return j;
}

Json to_json(const TruncatedPremonoid& f) {
  Json j;
  j["kind"] = "premonoid";
  put_diagram(j, f);
  put_laxity(j, f);
  j["unit"] = components_json(f.unit);
  return j;
}

Json to_json(const PremonoidMorphism& m) {
  Json comps = Json::object();
  for (std::size_t n = 1; n <= m.components.size(); ++n) comps[std::to_string(n)] = components_json(m.at(n));
  return {{"kind", "morphism"}, {"source", to_json(m.source)}, {"target", to_json(m.target)}, {"components", comps}};
}

Json to_json(const TwoConstantPremonoid& f) {
  Json base = to_json(f.base);
  base.erase("kind");
  return {{"kind", "two-constant"},
          {"field", f.apex.field().characteristic()},
          {"base", base},
          {"apex", to_json(f.apex)},
          {"h", components_json(f.h)},
          {"unit", components_json(f.unit)}};
}

Json to_json(const K2Instruction& ins) {
  const int degree = ins.alpha.target().window().hi;
  return {{"kind", "instruction"}, {"alpha_degree", degree}, {"q", components_json(ins.q)}, {"p", components_json(ins.p)}};
}

Json to_json(const Report& r) {
  Json j = Json::array();
  for (const auto& v : r) j.push_back({{"axiom", v.axiom}, {"where", v.where}});
  return j;
}

Json to_json(const Surjection& s) { return s.map(); }

Json to_json(const LatchingShape& s) {
  Json objects = Json::array();
  for (const auto& o : s.objects) {
    if (o.is_pair)
      objects.push_back({{"pair", Json::array({o.p, o.q})}, {"surjection", to_json(o.s)}});
    else
      objects.push_back({{"single", o.p}, {"surjection", to_json(o.s)}});
  }
  Json arrows = Json::array();
  for (const auto& a : s.arrows) {
    Json x = {{"from", a.from}, {"to", a.to}, {"left", to_json(a.left)}};
    if (!a.right.map().empty()) x["right"] = to_json(a.right);
    arrows.push_back(std::move(x));
  }
  return {{"level", s.level}, {"classical", s.classical}, {"objects", objects}, {"arrows", arrows}};
}

Json to_json(const CharPReport& r) {
  Json dims = Json::object();
  for (const auto& [n, d] : r.dims) dims[std::to_string(n)] = d;
  Json hom = Json::object();
  for (const auto& [n, h] : r.homology) hom[std::to_string(n)] = h;
  return {{"field", r.field.characteristic()}, {"disc_degree", r.disc_degree}, {"exponent", r.exponent},
          {"dims", dims},                      {"homology", hom},              {"total_homology", r.total_homology},
          {"acyclic", r.total_homology == 0}};
}

// ---- parsing ---------------------------------------------------------------------

std::string kind_of(const Json& j) {
  const Json& k = field_of(j, "kind");
  if (!k.is_string()) fail("kind must be a string");
  return k.get<std::string>();
}

Field field_from_json(const Json& j) {
  if (!j.is_number_integer()) fail("field must be an integer characteristic");
  try {
    return Field::of_characteristic(j.get<std::int64_t>());
  } catch (const ShapeError& e) {
    fail(e.what());
  }
}

Matrix matrix_from_json(const Json& j, Field field, std::size_t rows, std::size_t cols) {
  if (!j.is_array()) fail("matrix must be an array of rows");
  if (j.size() != rows) fail("matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      fail("matrix row " + std::to_string(r) + " does not have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational v = parse_entry(row[c]);
      if (v != 0) m.set(r, c, v);
    }
  }
  return m;
}

ChainComplex complex_from_json(const Json& j) {
  const Field field = field_from_json(field_of(j, "field"));
  const Json& w = field_of(j, "window");
  if (!w.is_array() || w.size() != 2 || !w[0].is_number_integer() || !w[1].is_number_integer())
    fail("window must be [lo, hi]");
  const Window window{w[0].get<int>(), w[1].get<int>()};
  const Json& dims_j = field_of(j, "dims");
  if (!dims_j.is_object()) fail("dims must be an object");
  std::vector<std::size_t> dims;
  for (int n = window.lo; n <= window.hi; ++n) {
    const std::string key = std::to_string(n);
    if (!dims_j.contains(key)) {
      dims.push_back(0);
      continue;
    }
    const Json& d = dims_j.at(key);
    if (!d.is_number_integer() || d.get<std::int64_t>() < 0) fail("dims entries must be non-negative integers");
    dims.push_back(d.get<std::size_t>());
  }
  for (const auto& [key, v] : dims_j.items())
    if (!window.contains(parse_int(key)) && v != 0) fail("dims entry " + key + " lies outside the window");
  ChainComplex shape(field, window, dims);
  std::map<int, Matrix> diff;
  if (j.contains("diff")) {
    const Json& dj = j.at("diff");
    if (!dj.is_object()) fail("diff must be an object");
    for (const auto& [key, rows] : dj.items()) {
      const int n = parse_int(key);
      diff.emplace(n, matrix_from_json(rows, field, shape.dim(n - 1), shape.dim(n)));
    }
  }
  return ChainComplex(field, window, dims, std::move(diff));
}

ChainMap components_from_json(const Json& j, const ChainComplex& source, const ChainComplex& target) {
  if (!j.is_object()) fail("components must be an object");
  std::map<int, Matrix> comps;
  for (const auto& [key, rows] : j.items()) {
    const int n = parse_int(key);
    comps.emplace(n, matrix_from_json(rows, source.field(), target.dim(n), source.dim(n)));
  }
  return ChainMap(source, target, std::move(comps));
}

ChainMap map_from_json(const Json& j) {
  return components_from_json(field_of(j, "components"), complex_from_json(field_of(j, "source")),
                              complex_from_json(field_of(j, "target")));
}

StrictMonoid monoid_from_json(const Json& j) {
  ChainComplex a = complex_from_json(field_of(j, "object"));
  ChainMap mult = components_from_json(field_of(j, "mult"), tensor(a, a), a);
  ChainMap unit = components_from_json(field_of(j, "unit"), unit_complex(a.field()), a);
  return {std::move(a), std::move(mult), std::move(unit)};
}

PlainDiagram diagram_from_json(const Json& j) {
  PlainDiagram f;
  read_diagram(j, f);
  return f;
}

LaxDiagram lax_diagram_from_json(const Json& j) {
  LaxDiagram f;
  read_diagram(j, f);
  read_laxity(j, f);
  return f;
}

TruncatedPremonoid premonoid_from_json(const Json& j) {
  TruncatedPremonoid f;
  read_diagram(j, f);
  read_laxity(j, f);
  f.unit = components_from_json(field_of(j, "unit"), unit_complex(f.field), f.at(1));
  return f;
}

PremonoidMorphism morphism_from_json(const Json& j) {
  PremonoidMorphism m{premonoid_from_json(field_of(j, "source")), premonoid_from_json(field_of(j, "target")), {}};
  const Json& comps = field_of(j, "components");
  for (std::size_t n = 1; n <= m.source.level; ++n) {
    const std::string key = std::to_string(n);
    if (!comps.contains(key)) fail("missing component " + key);
    if (n > m.target.level) fail("target level is too small");
    m.components.push_back(components_from_json(comps.at(key), m.source.at(n), m.target.at(n)));
  }
  return m;
}

TwoConstantPremonoid two_constant_from_json(const Json& j) {
  StrictMonoid base = monoid_from_json(field_of(j, "base"));
  ChainComplex apex = complex_from_json(field_of(j, "apex"));
  if (apex.field() != base.object.field()) fail("apex and base are over different fields");
  ChainMap h = components_from_json(field_of(j, "h"), apex, base.object);
  ChainMap unit = components_from_json(field_of(j, "unit"), unit_complex(apex.field()), apex);
  return {std::move(base), std::move(apex), std::move(h), std::move(unit)};
}

K2Instruction instruction_from_json(const Json& j, const TwoConstantPremonoid& f) {
  const Json& d = field_of(j, "alpha_degree");
  if (!d.is_number_integer()) fail("alpha_degree must be an integer");
  const Field k = f.apex.field();
  const GeneratingCofibration g = generating_cofibration(k, d.get<int>());
  ChainMap q = components_from_json(field_of(j, "q"), g.inclusion.source(), f.apex);
  ChainMap p = components_from_json(field_of(j, "p"), g.inclusion.target(), f.base.object);
  return {g.inclusion, std::move(q), std::move(p)};
}

}  // namespace cosegal
