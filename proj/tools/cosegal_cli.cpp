// Command-line front end: validate documents, run the constructions, print
// reports. Exit codes: 0 ok, 1 a check failed, 2 bad input.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cosegal/random.hpp"
#include "cosegal/serialize.hpp"

using namespace cosegal;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int field = 2;
  std::size_t level = 2;
  std::string window;
  std::uint64_t seed = 1;
  std::string out;
  bool json = false;
};

std::size_t max_dim() {
  const char* env = std::getenv("COSEGAL_MAX_DIM");
  if (!env || !*env) return 0;
  try {
    return std::stoul(env);
  } catch (const std::exception&) {
    throw InputError("COSEGAL_MAX_DIM must be a non-negative integer");
  }
}

void check_size(const ChainComplex& c, const std::string& what) {
  const std::size_t cap = max_dim();
  if (cap && c.total_dim() > cap)
    throw InputError(what + " has total dimension " + std::to_string(c.total_dim()) + ", above COSEGAL_MAX_DIM=" +
                     std::to_string(cap));
}

Json load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void write(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << canonical(j);
}

Window parse_window(const std::string& text, Window fallback) {
  if (text.empty()) return fallback;
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw InputError("--window expects lo,hi");
  }
}

Json nonzero(const std::map<int, std::size_t>& m) {
  Json j = Json::object();
  for (const auto& [d, v] : m)
    if (v) j[std::to_string(d)] = v;
  return j;
}

Json describe(const ChainComplex& c) { return {{"dims", nonzero(c.dims())}, {"homology", nonzero(homology_dims(c))}}; }

void print(const Json& report, const Options& o) {
  if (o.json) {
    std::cout << canonical(report);
    return;
  }
  for (const auto& [key, value] : report.items()) std::cout << key << ": " << value.dump() << "\n";
}

int verdict(const Json& checks) {
  for (const auto& [name, ok] : checks.items())
    if (!ok.get<bool>()) return kFailed;
  return kOk;
}

// ---- validate ----------------------------------------------------------------

Report validate_document(const Json& j, std::string& kind) {
  kind = kind_of(j);
  if (kind == "complex") {
    const ChainComplex c = complex_from_json(j);
    check_size(c, "complex");
    return c.d_squared_zero() ? Report{} : Report{{"d-squared", "complex"}};
  }
  if (kind == "map") {
    const ChainMap f = map_from_json(j);
    check_size(f.source(), "source");
    check_size(f.target(), "target");
    Report r;
    if (!f.source().d_squared_zero()) r.push_back({"d-squared", "source"});
    if (!f.target().d_squared_zero()) r.push_back({"d-squared", "target"});
    if (!f.is_chain_map()) r.push_back({"chain-map", "map"});
    return r;
  }
  if (kind == "monoid") {
    const StrictMonoid m = monoid_from_json(j);
    check_size(m.object, "object");
    return validate(m);
  }
  if (kind == "diagram") {
    const PlainDiagram f = diagram_from_json(j);
    for (const auto& o : f.objects) check_size(o, "object");
    return validate(f);
  }
  if (kind == "lax-diagram") {
    const LaxDiagram f = lax_diagram_from_json(j);
    for (const auto& o : f.objects) check_size(o, "object");
    return validate(f);
  }
  if (kind == "premonoid") {
    const TruncatedPremonoid f = premonoid_from_json(j);
    for (const auto& o : f.objects) check_size(o, "object");
    return validate(f);
  }
  if (kind == "morphism") return validate(morphism_from_json(j));
  if (kind == "two-constant") {
    const TwoConstantPremonoid f = two_constant_from_json(j);
    check_size(f.apex, "apex");
    check_size(f.base.object, "base");
    return validate(f);
  }
  throw ParseError("unknown document kind \"" + kind + "\"");
}

int cmd_validate(const std::vector<std::string>& paths, const Options& o) {
  int code = kOk;
  Json all = Json::array();
  for (const auto& path : paths) {
    Json entry = {{"path", path}};
    try {
      std::string kind;
      const Report r = validate_document(load(path), kind);
      entry["kind"] = kind;
      entry["valid"] = r.empty();
      entry["violations"] = to_json(r);
      if (!r.empty()) code = std::max(code, kFailed);
      if (!o.json) {
        std::cout << path << ": " << kind << ", " << (r.empty() ? "valid" : std::to_string(r.size()) + " violations")
                  << "\n";
        for (const auto& v : r) std::cout << "  " << v.axiom << " at " << v.where << "\n";
      }
    } catch (const std::exception& e) {
      entry["error"] = e.what();
      code = kBadInput;
      if (!o.json) std::cout << path << ": error: " << e.what() << "\n";
    }
    all.push_back(std::move(entry));
  }
  if (o.json) std::cout << canonical(all);
  return code;
}

// ---- constructions -------------------------------------------------------------

int cmd_gamma(const std::string& path, const Options& o) {
  const Json doc = load(path);
  if (kind_of(doc) != "diagram") throw ParseError("gamma expects a diagram document");
  const PlainDiagram f = diagram_from_json(doc);
  for (const auto& c : f.objects) check_size(c, "object");
  const Gamma g = gamma_na(f);

  Json levels = Json::object();
  for (std::size_t n = 1; n <= g.diagram.level; ++n) levels[std::to_string(n)] = describe(g.diagram.at(n));
  Json latching = Json::object();
  for (const auto& lv : g.levels)
    latching[std::to_string(lv.lax.shape.level)] = {{"lax_objects", lv.lax.shape.objects.size()},
                                                    {"lax_dims", nonzero(lv.lax.object().dims())},
                                                    {"classical_dims", nonzero(lv.classical.object().dims())}};
  const Json checks = {{"level_one_verbatim", g.diagram.at(1) == f.at(1)},
                       {"lax_diagram_valid", validate(static_cast<const LaxDiagram&>(g.diagram)).empty()},
                       {"unit_valid", validate(g.unit).empty()}};
  print({{"command", "gamma"}, {"levels", levels}, {"latching", latching}, {"checks", checks}}, o);
  if (!o.out.empty()) write(o.out, to_json(static_cast<const LaxDiagram&>(g.diagram)));
  return verdict(checks);
}

TwoConstantPremonoid load_two_constant(const std::string& path) {
  const Json doc = load(path);
  const std::string kind = kind_of(doc);
  TwoConstantPremonoid f;
  if (kind == "two-constant") {
    f = two_constant_from_json(doc);
  } else if (kind == "premonoid") {
    const TruncatedPremonoid p = premonoid_from_json(doc);
    const Report r = validate(p);
    if (!r.empty()) throw std::invalid_argument("premonoid is invalid (" + r.front().axiom + " at " + r.front().where + ")");
    f = two_constant_of(reflect(p));
  } else {
    throw ParseError("expected a two-constant or premonoid document, got \"" + kind + "\"");
  }
  check_size(f.apex, "apex");
  check_size(f.base.object, "base");
  return f;
}

int cmd_cosegalify(const std::string& path, const Options& o) {
  const TwoConstantPremonoid f = load_two_constant(path);
  const Cosegalification c = cosegalify_two_constant(f, o.level);
  const TruncatedPremonoid e = expand_to_premonoid(c.result, o.level);
  const Json checks = {{"valid", validate(e).empty()},
                       {"cosegal", is_cosegal(e)},
                       {"k_injective", is_k_injective(c.result, o.level)},
                       {"reflection_preserved", reflect(c.result) == reflect(f)},
                       {"tau_cofibration", is_cofibration(c.tau.at(1))},
                       {"factors_h", compose(c.result.h, c.tau.at(1)) == f.h}};
  print({{"command", "cosegalify"},
         {"level", o.level},
         {"apex_before", describe(f.apex)},
         {"apex_after", describe(c.result.apex)},
         {"base", describe(f.base.object)},
         {"checks", checks}},
        o);
  if (!o.out.empty()) write(o.out, to_json(c.result));
  return verdict(checks);
}

int cmd_pushout_k2(const std::string& path, const std::vector<std::string>& instructions, const Options& o) {
  const TwoConstantPremonoid f = load_two_constant(path);
  std::vector<K2Instruction> ins;
  for (const auto& p : instructions) {
    const Json doc = load(p);
    if (kind_of(doc) != "instruction") throw ParseError(p + ": expected an instruction document");
    ins.push_back(instruction_from_json(doc, f));
  }
  Json sampled = Json::array();
  if (ins.empty()) {
    Rng rng(o.seed);
    const Window w = parse_window(o.window, f.apex.window());
    const auto templates = localizing_set(f.apex.field(), w.empty() ? Window{0, 0} : w, 2);
    for (int attempt = 0; attempt < 64 && ins.empty(); ++attempt) {
      const auto& t = templates[rng() % templates.size()];
      if (auto i = random_instruction(f, t.alpha.degree, rng)) ins.push_back(*i);
    }
    if (ins.empty()) ins.push_back(sample_instruction(f, rng));
    sampled.push_back(to_json(ins.front()));
  }

  const K2WidePushout w = wide_pushout_two_constant(f, ins, o.level);
  Json checks = {{"valid", validate(w.result, o.level).empty()},
                 {"upsilon_valid", validate(w.upsilon).empty()},
                 {"reflection_preserved", reflect(w.result) == reflect(f)}};
  bool identities = true;
  for (std::size_t n = 2; n <= o.level; ++n) identities = identities && w.upsilon.at(n).is_identity();
  checks["upsilon_identity_above_one"] = identities;
  if (ins.size() > 1) {
    const K2Iterated it = iterated_pushout_k2(f, ins);
    checks["matches_iterated"] = it.result.apex.dims() == w.result.apex.dims() &&
                                 homology_dims(it.result.apex) == homology_dims(w.result.apex);
  }
  Json report = {{"command", "pushout-k2"},
                 {"level", o.level},
                 {"cells", ins.size()},
                 {"apex_before", describe(f.apex)},
                 {"apex_after", describe(w.result.apex)},
                 {"checks", checks}};
  if (!sampled.empty()) report["sampled_instruction"] = sampled.front();
  print(report, o);
  if (!o.out.empty()) write(o.out, to_json(w.result));
  return verdict(checks);
}

int cmd_demo_charp(std::size_t exponent, int degree, const Options& o) {
  if (exponent == 0 || exponent > 4) throw InputError("--exponent must be between 1 and 4");
  const Field k = Field::of_characteristic(o.field);
  const std::size_t cap = max_dim();
  std::size_t power = 1;
  for (std::size_t i = 0; i < exponent; ++i) power *= 2;
  if (cap && power > cap) throw InputError("tensor power exceeds COSEGAL_MAX_DIM");
  const CharPReport r = demo_char_p(k, exponent, degree);
  if (o.json) {
    std::cout << canonical(to_json(r));
  } else {
    std::cout << "field: " << (k.is_rational() ? std::string("Q") : "F_" + std::to_string(k.characteristic())) << "\n"
              << "sym^" << exponent << " of D^" << degree << "\n"
              << "degree  dim  homology\n";
    for (const auto& [d, dim] : r.dims) {
      if (!dim) continue;
      const auto it = r.homology.find(d);
      std::cout << std::setw(6) << d << std::setw(5) << dim << std::setw(10) << (it == r.homology.end() ? 0 : it->second)
                << "\n";
    }
    std::cout << "total homology: " << r.total_homology << (r.total_homology ? " (not acyclic)" : " (acyclic)")
              << "\n";
  }
  if (!o.out.empty()) write(o.out, to_json(r));
  return kOk;
}

int cmd_surjections(std::size_t m, std::size_t n, const Options& o) {
  const auto all = enumerate_surjections(m, n);
  if (o.json) {
    Json list = Json::array();
    for (const auto& s : all) list.push_back(to_json(s));
    std::cout << canonical({{"source", m}, {"target", n}, {"count", all.size()}, {"surjections", list}});
  } else {
    for (const auto& s : all) std::cout << s.key() << "\n";
    std::cout << all.size() << " surjections " << m << " ->> " << n << "\n";
  }
  return kOk;
}

int cmd_latching(std::size_t n, bool classical, const Options& o) {
  if (n < 2) throw InputError("latching level must be at least 2");
  const LatchingShape s = latching_shape(n, classical);
  if (o.json) {
    std::cout << canonical(to_json(s));
  } else {
    for (const auto& x : s.objects) {
      if (x.is_pair)
        std::cout << "(" << x.p << "," << x.q << ") " << x.s.key() << "\n";
      else
        std::cout << x.p << " " << x.s.key() << "\n";
    }
    std::cout << s.objects.size() << " objects, " << s.arrows.size() << " arrows\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated co-Segal premonoids in chain complexes over a field"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--field", o.field, "Characteristic: 0 for Q, or a prime");
  app.add_option("--level", o.level, "Truncation level N")->check(CLI::Range(2, 6));
  app.add_option("--window", o.window, "Degree window lo,hi for sampled cells");
  app.add_option("--seed", o.seed, "Seed for any sampling");
  app.add_option("--out", o.out, "Write the resulting document here");
  app.add_flag("--json", o.json, "Print the report as JSON");

  std::vector<std::string> paths;
  auto* validate_cmd = app.add_subcommand("validate", "Check documents against their axioms");
  validate_cmd->add_option("paths", paths, "Documents")->required();

  std::string input;
  auto* gamma_cmd = app.add_subcommand("gamma", "Free lax diagram on a plain diagram");
  gamma_cmd->add_option("diagram", input, "Diagram document")->required();

  auto* cosegalify_cmd = app.add_subcommand("cosegalify", "Co-Segal replacement of a 2-constant premonoid");
  cosegalify_cmd->add_option("premonoid", input, "Two-constant or constant premonoid document")->required();

  std::vector<std::string> instructions;
  auto* pushout_cmd = app.add_subcommand("pushout-k2", "Attach cells to a 2-constant premonoid");
  pushout_cmd->add_option("premonoid", input, "Two-constant or constant premonoid document")->required();
  pushout_cmd->add_option("instructions", instructions, "Instruction documents; one is sampled when none are given");

  std::size_t exponent = 2;
  int degree = 1;
  auto* charp_cmd = app.add_subcommand("demo-charp", "Symmetric powers of a disc in characteristic p");
  charp_cmd->add_option("--exponent", exponent, "Tensor exponent");
  charp_cmd->add_option("--degree", degree, "Disc degree");

  std::size_t m = 0, n = 0;
  auto* surj_cmd = app.add_subcommand("surjections", "List the surjections m ->> n");
  surj_cmd->add_option("m", m)->required();
  surj_cmd->add_option("n", n)->required();

  std::size_t latch_level = 2;
  bool classical = false;
  auto* latch_cmd = app.add_subcommand("latching", "Objects of the latching shape at a level");
  latch_cmd->add_option("level", latch_level)->required();
  latch_cmd->add_flag("--classical", classical, "Only the ordinary latching objects");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    Field::of_characteristic(o.field);
    if (*validate_cmd) return cmd_validate(paths, o);
    if (*gamma_cmd) return cmd_gamma(input, o);
    if (*cosegalify_cmd) return cmd_cosegalify(input, o);
    if (*pushout_cmd) return cmd_pushout_k2(input, instructions, o);
    if (*charp_cmd) return cmd_demo_charp(exponent, degree, o);
    if (*surj_cmd) return cmd_surjections(m, n, o);
    if (*latch_cmd) return cmd_latching(latch_level, classical, o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}
