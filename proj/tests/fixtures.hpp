#pragma once

#include <optional>
#include <random>

#include "eulerlab/corpus.hpp"

namespace eulerlab::fx {

inline const Workspace& corpus() {
  static const Workspace ws(standard_corpus());
  return ws;
}

/// Random subset of the simplices of k, each kept with probability p.
inline CellSet random_set(const ComplexPtr& k, std::mt19937& g, double p = 0.5) {
  std::bernoulli_distribution keep(p);
  Bits b(k->size());
  for (std::size_t i = 0; i < k->size(); ++i)
    if (keep(g)) b.set(i);
  return CellSet(k, b);
}

/// Random 2-complex: a grid of unit squares (each split by a diagonal) with
/// random squares dropped, plus a few random whiskers.
inline ComplexPtr random_complex(std::mt19937& g, int n = 3) {
  std::vector<QPoint> v;
  for (int y = 0; y <= n; ++y)
    for (int x = 0; x <= n; ++x) v.push_back(QPoint{Rational(x), Rational(y)});
  auto at = [n](int x, int y) { return y * (n + 1) + x; };
  std::vector<std::vector<int>> top;
  std::uniform_int_distribution<int> kind(0, 4);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      switch (kind(g)) {
        case 0:
          break;
        case 1:
          top.push_back({at(x, y), at(x + 1, y)});
          top.push_back({at(x, y), at(x, y + 1)});
          break;
        case 2:
          top.push_back({at(x, y), at(x + 1, y), at(x + 1, y + 1)});
          break;
        default:
          top.push_back({at(x, y), at(x + 1, y), at(x + 1, y + 1)});
          top.push_back({at(x, y), at(x, y + 1), at(x + 1, y + 1)});
      }
    }
  if (top.empty()) top.push_back({at(0, 0), at(1, 0)});
  return GeomComplex::create(v, top, true);
}

/// Random locally closed set: a random closed set minus a random closed subset.
inline CellSet random_locally_closed(const ComplexPtr& k, std::mt19937& g) {
  CellSet c = random_set(k, g, 0.4).closure();
  CellSet y = (random_set(k, g, 0.15) & c).closure();
  return c - y;
}

/// The n×n grid of unit squares, each split along its main diagonal.
inline ComplexPtr full_grid(int n = 3) {
  std::vector<QPoint> v;
  for (int y = 0; y <= n; ++y)
    for (int x = 0; x <= n; ++x) v.push_back(QPoint{Rational(x), Rational(y)});
  auto at = [n](int x, int y) { return y * (n + 1) + x; };
  std::vector<std::vector<int>> top;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      top.push_back({at(x, y), at(x + 1, y), at(x + 1, y + 1)});
      top.push_back({at(x, y), at(x, y + 1), at(x + 1, y + 1)});
    }
  return GeomComplex::create(v, top, true);
}

/// Interior of a random union of closed triangles, sometimes with a few
/// frontier vertices added back (kept only if the result stays locally
/// closed). Non-Euler points, if any, are vertices.
inline CellSet random_region(const ComplexPtr& k, std::mt19937& g) {
  Bits tops(k->size());
  std::bernoulli_distribution keep(0.5);
  for (int m : k->maximal())
    if (keep(g)) tops.set(m);
  CellSet region = CellSet(k, tops).closure().interior();
  std::bernoulli_distribution add(0.3);
  CellSet grown = region;
  for (int f : region.frontier().ids())
    if (k->dim(f) == 0 && add(g)) grown = grown | CellSet::from_ids(k, {f});
  return grown.is_locally_closed() ? grown : region;
}

/// A random element of the cycle space of the 1-skeleton (mod-2 sum of
/// triangle boundaries), closed; every vertex has even degree.
inline CellSet random_cycle(const ComplexPtr& k, std::mt19937& g) {
  Bits edges(k->size());
  std::bernoulli_distribution keep(0.4);
  for (int m : k->maximal())
    if (k->dim(m) == 2 && keep(g))
      for (int e : k->facets(m)) edges.flip(e);
  return CellSet(k, edges).closure();
}

/// Random sets that pass the Euler test far more often than uniform ones.
inline CellSet random_euler_candidate(std::mt19937& g) {
  std::uniform_int_distribution<int> kind(0, 3);
  auto k = full_grid(3);
  switch (kind(g)) {
    case 0:
      return random_region(k, g);
    case 1:
      return random_cycle(k, g);
    case 2: {
      auto c = random_cycle(k, g);
      return c - (random_set(k, g, 0.2) & c).closure();
    }
    default: {
      auto r = random_region(k, g);
      auto c = random_cycle(k, g);
      return (c - r.closure()) | r;
    }
  }
}

// Random family on a random complex whose atoms come from at most five blocks
// of a random partition of the universe, so brute force stays cheap.
inline std::optional<Family> random_family(std::mt19937& g) {
  auto k = random_complex(g, 2);
  auto u = random_locally_closed(k, g);
  if (u.empty()) return std::nullopt;
  std::uniform_int_distribution<int> nblocks(2, 5), ngens(1, 11);
  int nb = nblocks(g);
  std::uniform_int_distribution<int> pick(0, nb - 1);
  std::vector<CellSet> blocks(nb, CellSet(k));
  for (int s : u.ids()) {
    int b = pick(g);
    blocks[b] = blocks[b] | CellSet::from_ids(k, {s});
  }
  std::vector<FamilyGenerator> gens{{"U", u, true}};
  std::bernoulli_distribution coin(0.5);
  int n = ngens(g);
  for (int i = 0; i < n; ++i) {
    CellSet s(k);
    for (const auto& b : blocks)
      if (coin(g)) s = s | b;
    bool algebraic = coin(g);
    if (algebraic) s = s.closure() & u;
    gens.push_back({"g" + std::to_string(i), s, algebraic});
  }
  Family f(std::move(gens));
  if (f.atoms().size() > 16) return std::nullopt;
  return f;
}

inline CellSet random_subset(const Family& f, std::mt19937& g, double p = 0.3) {
  return random_set(f.ambient(), g, p) & f.universe();
}

}  // namespace eulerlab::fx
