#include "cosegal/charp.hpp"

namespace cosegal {

namespace {

ChainComplex tensor_power(const ChainComplex& c, std::size_t n) {
  ChainComplex t = c;
  for (std::size_t k = 1; k < n; ++k) t = tensor(t, c);
  return t;
}

}  // namespace

std::map<int, std::vector<std::vector<std::pair<int, std::size_t>>>> tensor_power_basis(const ChainComplex& base,
                                                                                      std::size_t n) {
  using Tuple = std::vector<std::pair<int, std::size_t>>;
  std::map<int, std::vector<Tuple>> cur;
  const Window w = base.window();
  for (int d = w.lo; d <= w.hi; ++d)
    for (std::size_t i = 0; i < base.dim(d); ++i) cur[d].push_back({{d, i}});
  Window cw = w;
  for (std::size_t k = 1; k < n; ++k) {
    std::map<int, std::vector<Tuple>> next;
    const Window nw{cw.lo + w.lo, cw.hi + w.hi};
    for (int deg = nw.lo; deg <= nw.hi; ++deg) {
      auto& out = next[deg];
      for (int i = cw.lo; i <= cw.hi; ++i) {
        auto it = cur.find(i);
        if (it == cur.end()) continue;
        const int j = deg - i;
        for (const auto& x : it->second)
          for (std::size_t y = 0; y < base.dim(j); ++y) {
            Tuple t = x;
            t.emplace_back(j, y);
            out.push_back(std::move(t));
          }
      }
    }
    cur = std::move(next);
    cw = nw;
  }
  return cur;
}

SymPower sym_power(const ChainComplex& c, std::size_t n) {
  if (n == 0) throw ShapeError("sym_power: exponent must be positive");
  const Field k = c.field();
  ChainComplex power = tensor_power(c, n);
  const auto basis = tensor_power_basis(c, n);

  std::map<int, Matrix> relations;
  for (const auto& [deg, tuples] : basis) {
    std::map<std::vector<std::pair<int, std::size_t>>, std::size_t> position;
    for (std::size_t i = 0; i < tuples.size(); ++i) position[tuples[i]] = i;
    std::vector<std::vector<Rational>> rels;
    for (std::size_t i = 0; i < tuples.size(); ++i)
      for (std::size_t j = 0; j + 1 < n; ++j) {
        auto swapped = tuples[i];
        std::swap(swapped[j], swapped[j + 1]);
        const bool odd = (tuples[i][j].first % 2 != 0) && (tuples[i][j + 1].first % 2 != 0);
        // v - sign·σv
        std::vector<Rational> r(tuples.size(), 0);
        r[i] += 1;
        r[position.at(swapped)] -= odd ? -1 : 1;
        rels.push_back(std::move(r));
      }
    Matrix m(k, tuples.size(), rels.size());
    for (std::size_t col = 0; col < rels.size(); ++col)
      for (std::size_t row = 0; row < tuples.size(); ++row)
        if (rels[col][row] != 0) m.set(row, col, rels[col][row]);
    relations.emplace(deg, std::move(m));
  }
  QuotientComplex q = quotient_complex(power, relations);
  return {c, n, std::move(power), q.object, q.projection};
}

CharPReport demo_char_p(Field field, std::size_t exponent, int disc_degree) {
  const SymPower s = sym_power(disc(field, disc_degree), exponent);
  CharPReport r{field, disc_degree, exponent, s.result.dims(), homology_dims(s.result), 0};
  for (const auto& [deg, h] : r.homology) r.total_homology += h;
  return r;
}

}  // namespace cosegal
