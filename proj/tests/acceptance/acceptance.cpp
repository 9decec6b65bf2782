// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Sample sizes, seeds and time limits are fixed here.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cosegal/charp.hpp"
#include "cosegal/cosegal.hpp"
#include "cosegal/free_gamma.hpp"
#include "cosegal/random.hpp"
#include "cosegal/serialize.hpp"
#include "latching_oracle.hpp"
#include "oracles.hpp"

using namespace cosegal;

namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);
const Field Q = Field::rationals();

// Collects failures with a short note for the first one.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (!failures++) first = what;
  }
};

std::map<int, std::size_t> nonzero(const std::map<int, std::size_t>& m) {
  std::map<int, std::size_t> out;
  for (const auto& [d, v] : m)
    if (v) out.emplace(d, v);
  return out;
}

std::string name_of(Field k) { return k.is_rational() ? "Q" : "F" + std::to_string(k.characteristic()); }

// ---- 1: Künneth ----------------------------------------------------------------

void check_kunneth(Tally& t) {
  Rng rng(1001);
  for (const Field k : {F2, F3, F5, Q})
    for (int i = 0; i < 50; ++i) {
      const ChainComplex c = random_complex(k, {-1, 2}, 3, rng);
      const ChainComplex d = random_complex(k, {-1, 2}, 3, rng);
      const auto hc = homology_dims(c);
      const auto hd = homology_dims(d);
      std::map<int, std::size_t> conv;
      for (const auto& [a, x] : hc)
        for (const auto& [b, y] : hd) conv[a + b] += x * y;
      t.check(nonzero(homology_dims(tensor(c, d))) == nonzero(conv), name_of(k) + " pair " + std::to_string(i));
    }
}

// ---- 2: trivial fibrations by lifting --------------------------------------------

void check_lifting(Tally& t) {
  Rng rng(1002);
  std::size_t positives = 0;
  for (int i = 0; i < 100; ++i) {
    const ChainComplex x = random_complex(F2, {0, 1}, 2, rng);
    const ChainComplex y = random_complex(F2, {0, 1}, 2, rng);
    const ChainMap f = random_chain_map(x, y, rng);
    // every other map is a cylinder projection so both answers occur
    const ChainMap g = i % 2 ? cylinder_factorization(f).p : f;
    bool lifts = true;
    for (const auto& gen : generating_cofibrations(F2, g.window().inflated()))
      for (const auto& sq : commuting_squares_basis(gen.inclusion, g)) {
        const auto k = solve_lifting(gen.inclusion, g, sq.top, sq.bottom);
        if (k && !(compose(*k, gen.inclusion) == sq.top && compose(g, *k) == sq.bottom))
          t.check(false, "bad lift at map " + std::to_string(i));
        lifts = lifts && k.has_value();
      }
    const bool tf = is_trivial_fibration(g);
    positives += tf;
    t.check(lifts == tf, "map " + std::to_string(i));
  }
  t.check(positives > 0 && positives < 100, "sample lacks one of the two outcomes");
}

// ---- 3: cylinder factorization ----------------------------------------------------

void check_cylinder(Tally& t) {
  Rng rng(1003);
  for (const Field k : {F2, F3, F5, Q})
    for (int i = 0; i < 50; ++i) {
      const ChainMap f = random_chain_map(random_complex(k, {-1, 2}, 3, rng), random_complex(k, {-1, 2}, 3, rng), rng);
      const CylinderFactorization c = cylinder_factorization(f);
      const std::string where = name_of(k) + " map " + std::to_string(i);
      t.check(c.cylinder.d_squared_zero() && c.i.is_chain_map() && c.p.is_chain_map(), where + " chain maps");
      t.check(compose(c.p, c.i) == f, where + " p∘i");
      t.check(is_degreewise_injective(c.i), where + " i injective");
      t.check(is_degreewise_surjective(c.p), where + " p surjective");
      t.check(is_quasi_iso(c.p), where + " p quasi-iso");
    }
}

// ---- 4: free lax diagram ----------------------------------------------------------

PlainDiagram constant_diagram(const ChainComplex& c, std::size_t level) {
  PlainDiagram f;
  f.field = c.field();
  f.level = level;
  f.objects.assign(level, c);
  for (const auto& s : all_surjections(level)) f.structure.emplace(s, ChainMap::identity(c));
  return f;
}

void check_gamma(Tally& t) {
  std::vector<std::pair<std::string, PlainDiagram>> fixtures;
  for (const auto& entry : std::filesystem::directory_iterator(FIXTURE_DIR)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    const Json j = Json::parse(in, nullptr, false);
    if (!j.is_discarded() && j.is_object() && j.value("kind", "") == "diagram")
      fixtures.emplace_back(entry.path().filename().string(), diagram_from_json(j));
  }
  t.check(!fixtures.empty(), "no diagram fixtures found");
  for (const Field k : {F3, Q}) fixtures.emplace_back("S^0 over " + name_of(k), constant_diagram(sphere(k, 0), 2));
  fixtures.emplace_back("S^1 at level 3", constant_diagram(sphere(F2, 1), 3));

  for (const auto& [name, f] : fixtures) {
    const Gamma g = gamma_na(f);
    t.check(g.diagram.at(1) == f.at(1), name + ": level 1 not verbatim");
    t.check(g.unit.at(1).is_identity(), name + ": unit at level 1");
    // Γ(2) glues f(2) to the lax latching object along the copy of f(1)
    const auto lax = oracle::latching_dims(g.diagram, 2);
    const Window w = g.diagram.at(2).window();
    for (int d = w.lo - 1; d <= w.hi + 1; ++d) {
      const std::size_t expected = f.at(2).dim(d) + (lax.count(d) ? lax.at(d) : 0) - f.at(1).dim(d);
      t.check(g.diagram.at(2).dim(d) == expected, name + ": level 2 degree " + std::to_string(d));
    }
    if (f.at(1) == sphere(f.field, 0) && f.level == 2)
      t.check(g.diagram.at(2).total_dim() == 3, name + ": S^0 level 2 is not 3-dimensional");
  }

  Rng rng(1004);
  for (int i = 0; i < 20; ++i) {
    const Field k = i % 2 ? F2 : F3;
    const std::size_t level = 2 + static_cast<std::size_t>(i % 2);
    const PlainDiagram f = random_plain_diagram(k, level, {0, 1}, 2, rng);
    const Gamma g = gamma_na(f);
    const LaxMorphism ext = universal_extension(g, g.diagram, g.unit.components);
    bool ok = validate(ext).empty();
    for (std::size_t n = 1; n <= level; ++n) ok = ok && ext.at(n).is_identity();
    t.check(ok, "triangle identity, diagram " + std::to_string(i));
  }
}

// ---- 5: single K2 pushouts ---------------------------------------------------------

bool jointly_surjective(const ChainMap& a, const ChainMap& b) {
  const ChainComplex& target = a.target();
  for (int n = target.window().lo; n <= target.window().hi; ++n)
    if (rank(Matrix::hstack(a.at(n), b.at(n))) != target.dim(n)) return false;
  return true;
}

void check_pushout_single(Tally& t) {
  Rng rng(1005);
  for (int i = 0; i < 30; ++i) {
    const std::string where = "instruction " + std::to_string(i);
    const TwoConstantPremonoid f = random_two_constant(F2, rng);
    const K2Instruction ins = sample_instruction(f, rng);
    const K2Pushout po = pushout_k2(f, ins, 3);
    t.check(validate(po.result, 3).empty() && validate(po.upsilon).empty(), where + " validates");
    t.check(po.upsilon.at(2).is_identity() && po.upsilon.at(3).is_identity(), where + " Υ above level 1");
    t.check(reflect(po.result) == reflect(f), where + " reflection");
    const auto ff = fundamental_factorization(f, 3);
    const auto zeta = pushout_k2_universal(po, ff.epsilon, ins.p);
    t.check(zeta.has_value(), where + " ζ missing");
    if (!zeta) continue;
    const PremonoidMorphism back = compose(*zeta, po.upsilon);
    bool ok = validate(*zeta).empty() && compose(zeta->at(1), po.apex.leg_right) == ins.p;
    for (std::size_t n = 1; n <= 3; ++n) ok = ok && back.at(n) == ff.epsilon.at(n);
    t.check(ok, where + " ζ∘Υ");
    t.check(jointly_surjective(po.apex.leg_left, po.apex.leg_right), where + " ζ not pinned by generators");
  }
}

// ---- 6: wide versus iterated ------------------------------------------------------

void check_route_independence(Tally& t) {
  Rng rng(1006);
  for (int i = 0; i < 24; ++i) {
    const std::string where = "family " + std::to_string(i);
    const TwoConstantPremonoid f = random_two_constant(i % 3 == 0 ? Q : F2, rng);
    std::vector<K2Instruction> ins;
    for (int c = 0; c <= i % 3; ++c) ins.push_back(sample_instruction(f, rng));
    const K2WidePushout wide = wide_pushout_two_constant(f, ins);
    const K2Iterated iter = iterated_pushout_k2(f, ins);
    std::vector<ChainMap> cocone{iter.apex_leg};
    for (std::size_t c = 0; c < ins.size(); ++c) {
      cocone.push_back(compose(iter.apex_leg, ins[c].q));
      cocone.push_back(iter.cell_legs[c]);
    }
    const auto cmp = colimit_universal(wide.apex, cocone, iter.result.apex);
    t.check(cmp.has_value(), where + " no comparison map");
    if (!cmp) continue;
    bool full_rank = true;
    const Window w = window_union(cmp->source().window(), cmp->target().window());
    for (int n = w.lo; n <= w.hi; ++n) {
      const std::size_t r = rank(cmp->at(n));
      full_rank = full_rank && r == cmp->source().dim(n) && r == cmp->target().dim(n);
    }
    t.check(full_rank, where + " comparison not full rank");
    t.check(compose(iter.result.h, *cmp) == wide.result.h, where + " comparison over the base");
  }
}

// ---- 7: co-Segalification ---------------------------------------------------------

void check_cosegalification(Tally& t) {
  Rng rng(1007);
  for (std::size_t level = 2; level <= 4; ++level)
    for (int i = 0; i < 8; ++i) {
      const std::string where = "N=" + std::to_string(level) + " sample " + std::to_string(i);
      const TwoConstantPremonoid f = random_two_constant(i % 2 ? F2 : Q, rng);
      const Cosegalification c = cosegalify_two_constant(f, level);
      t.check(is_cosegal(expand_to_premonoid(c.result, level)), where + " co-Segal");
      t.check(is_k_injective(c.result, level), where + " K-injective");
      t.check(reflect(c.result) == reflect(f), where + " reflection");
      t.check(is_cofibration(c.tau.at(1)), where + " τ_1 cofibration");
    }
}

// ---- 8: strict round trip and easy weak equivalences -------------------------------

void check_predicates(Tally& t) {
  Rng rng(1008);
  for (int i = 0; i < 20; ++i) {
    const StrictMonoid m = random_strict_monoid(i % 2 ? F3 : Q, rng);
    const auto back = to_strict(from_strict(m, 3));
    t.check(back && *back == m, "round trip " + std::to_string(i));
  }
  for (int i = 0; i < 20; ++i) {
    const TwoConstantPremonoid f = random_two_constant(i % 2 ? F2 : Q, rng);
    const auto ff = fundamental_factorization(f, 2 + static_cast<std::size_t>(i % 3));
    t.check(is_easy_weq(ff.rho), "ρ of sample " + std::to_string(i));
  }
}

// ---- 9: characteristic p ----------------------------------------------------------

void check_charp(Tally& t) {
  const CharPReport q = demo_char_p(Q);
  const CharPReport f2 = demo_char_p(F2);
  t.check(q.total_homology == 0, "Q square of D^1 not acyclic");
  t.check(f2.total_homology > 0, "F2 square of D^1 acyclic");
  // the F2 value agrees with the enumeration oracle
  const SymPower s = sym_power(disc(F2, 1), 2);
  std::size_t brute = 0;
  for (int d = s.result.window().lo; d <= s.result.window().hi; ++d) brute += oracle::homology_f2(s.result, d);
  t.check(brute == f2.total_homology, "F2 total homology disagrees with the oracle");
  t.check(brute == 1, "F2 total homology is not 1");
}

// ---- 10: CLI determinism ---------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// stdout, exit status, and the --out file if any
std::string run(const std::string& args, const std::filesystem::path& out) {
  std::filesystem::remove(out);
  const std::string cmd = std::string("\"") + CLI_PATH + "\" " + args + " --out \"" + out.string() + "\" 2>&1";
  std::string text;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) text.append(buf.data(), n);
  const int status = pclose(pipe);
  return text + "\n<status " + std::to_string(status) + ">\n" + slurp(out);
}

void check_determinism(Tally& t) {
  const std::string fx = std::string(FIXTURE_DIR) + "/";
  const std::vector<std::string> commands = {
      "validate " + fx + "constant_premonoid.json " + fx + "corrupted_premonoid.json " + fx + "s0_diagram.json",
      "gamma " + fx + "s0_diagram.json",
      "cosegalify --level 3 " + fx + "two_constant.json",
      "cosegalify --level 4 " + fx + "constant_premonoid.json",
      "pushout-k2 --level 3 " + fx + "two_constant.json " + fx + "instruction.json " + fx + "instruction.json",
      "pushout-k2 --seed 7 " + fx + "two_constant.json",
      "pushout-k2 --seed 8 --window -1,2 " + fx + "constant_premonoid.json",
      "demo-charp --field 2 --exponent 3 --degree 2",
      "demo-charp --field 0",
      "surjections 4 2",
      "latching 3",
  };
  const auto dir = std::filesystem::temp_directory_path() / ("cosegal_acceptance_" + std::to_string(getpid()));
  std::filesystem::create_directories(dir);
  for (const auto& base : commands)
    for (const std::string mode : {"", " --json"}) {
      const std::string args = base + mode;
      const std::string a = run(args, dir / "a.json");
      const std::string b = run(args, dir / "b.json");
      t.check(a == b, "output differs for: " + args);
      t.check(a.find("<status 0>") != std::string::npos || args.find("corrupted") != std::string::npos,
              "unexpected failure for: " + args);
    }
  std::filesystem::remove_all(dir);
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 means no limit
  std::function<void(Tally&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Kunneth formula on random complex pairs", 5.0, check_kunneth},
      {2, "trivial fibration iff lifting against generators", 30.0, check_lifting},
      {3, "cylinder factorization", 0, check_cylinder},
      {4, "free lax diagram: level 1, S^0 dimension, triangle identity", 0, check_gamma},
      {5, "single cell attachment and its universal map", 0, check_pushout_single},
      {6, "wide and iterated cell attachment agree", 0, check_route_independence},
      {7, "co-Segal replacement", 0, check_cosegalification},
      {8, "strict round trip and easy weak equivalences", 0, check_predicates},
      {9, "symmetric square of D^1 in characteristic 0 and 2", 1.0, check_charp},
      {10, "CLI output is byte-reproducible", 0, check_determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(t);
    } catch (const std::exception& e) {
      t.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool slow = c.limit_seconds > 0 && secs >= c.limit_seconds;
    const bool ok = !t.failures && !slow;
    failed += !ok;
    std::printf("%s criterion %d: %s (%zu checks, %.2f s", ok ? "PASS" : "FAIL", c.id, c.name, t.checks, secs);
    if (c.limit_seconds > 0) std::printf(", limit %.0f s", c.limit_seconds);
    std::printf(")");
    if (t.failures) std::printf(" %zu failed, first: %s", t.failures, t.first.c_str());
    if (slow) std::printf(" over the time limit");
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
