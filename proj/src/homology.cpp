#include "eulerlab/homology.hpp"

#include <algorithm>
#include <map>

namespace eulerlab {

bool Echelon::add(const Bits& v) {
  Bits r = reduce(v);
  long h = r.highest();
  if (h < 0) return false;
  row_of_pivot_[h] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

Bits Echelon::reduce(Bits v) const {
  while (true) {
    long h = v.highest();
    if (h < 0) return v;
    int r = row_of_pivot_[h];
    if (r < 0) return v;
    v ^= rows_[r];
  }
}

ChainComplexZ2::ChainComplexZ2(std::vector<std::vector<Generator>> gens,
                               std::vector<std::vector<Bits>> boundary)
    : gens_(std::move(gens)), bd_(std::move(boundary)) {
  if (bd_.size() != gens_.size()) throw ContractError("chain complex: degree count mismatch");
  for (int d = 0; d <= top_degree(); ++d) {
    if (bd_[d].size() != gens_[d].size()) throw ContractError("chain complex: boundary count mismatch");
    for (const auto& b : bd_[d])
      if (b.size() != size(d - 1)) throw ContractError("chain complex: boundary length mismatch");
  }
  for (int d = 2; d <= top_degree(); ++d)
    for (const auto& b : bd_[d])
      if (boundary_of(d - 1, b).any()) throw ContractError("chain complex: boundary of boundary is nonzero");
}

Bits ChainComplexZ2::boundary_of(int d, const Bits& chain) const {
  Bits out(size(d - 1));
  if (d <= 0) return out;
  chain.for_each([&](std::size_t j) { out ^= bd_[d][j]; });
  return out;
}

int HomologyResult::euler_characteristic() const {
  int chi = 0;
  for (std::size_t d = 0; d < betti.size(); ++d) chi += (d % 2 ? -1 : 1) * betti[d];
  return chi;
}

namespace {

// Basis of ker ∂_d.
std::vector<Bits> kernel(const ChainComplexZ2& c, int d) {
  const std::size_t n = c.size(d);
  std::vector<Bits> out;
  if (d == 0) {
    for (std::size_t j = 0; j < n; ++j) {
      Bits e(n);
      e.set(j);
      out.push_back(e);
    }
    return out;
  }
  const std::size_t m = c.size(d - 1);
  std::vector<Bits> rows, tags;
  std::vector<int> row_of_pivot(m, -1);
  for (std::size_t j = 0; j < n; ++j) {
    Bits v = c.boundary(d, j);
    Bits t(n);
    t.set(j);
    while (true) {
      long h = v.highest();
      if (h < 0) {
        out.push_back(t);
        break;
      }
      int r = row_of_pivot[h];
      if (r < 0) {
        row_of_pivot[h] = static_cast<int>(rows.size());
        rows.push_back(v);
        tags.push_back(t);
        break;
      }
      v ^= rows[r];
      t ^= tags[r];
    }
  }
  return out;
}

Echelon boundaries(const ChainComplexZ2& c, int d) {
  Echelon e(c.size(d));
  for (std::size_t j = 0; j < c.size(d + 1); ++j) e.add(c.boundary(d + 1, j));
  return e;
}

std::map<int, std::size_t> index_of(const ChainComplexZ2& c, int d) {
  std::map<int, std::size_t> m;
  for (std::size_t j = 0; j < c.size(d); ++j) m[c.generator(d, j).simplex] = j;
  return m;
}

}  // namespace

HomologyResult homology(const ChainComplexZ2& c) {
  HomologyResult r;
  for (int d = 0; d <= c.top_degree(); ++d) {
    Echelon e = boundaries(c, d);
    std::vector<Bits> reps;
    for (auto& z : kernel(c, d))
      if (e.add(z)) reps.push_back(std::move(z));
    r.betti.push_back(static_cast<int>(reps.size()));
    r.representatives.push_back(std::move(reps));
  }
  return r;
}

int class_rank(const ChainComplexZ2& c, int d, const std::vector<Bits>& cycles) {
  if (d < 0 || d > c.top_degree()) return 0;
  Echelon e = boundaries(c, d);
  std::size_t base = e.rank();
  for (const auto& z : cycles) e.add(z);
  return static_cast<int>(e.rank() - base);
}

bool is_cycle(const ChainComplexZ2& c, int d, const Bits& chain) {
  return c.boundary_of(d, chain).none();
}

bool is_boundary(const ChainComplexZ2& c, int d, const Bits& chain) {
  if (chain.none()) return true;
  return boundaries(c, d).in_span(chain);
}

ChainComplexZ2 abstract_chain_complex(const std::vector<std::vector<int>>& simplices) {
  int top = -1;
  for (const auto& s : simplices) top = std::max(top, static_cast<int>(s.size()) - 1);
  std::vector<std::vector<Generator>> gens(top + 1);
  std::vector<std::map<std::vector<int>, std::size_t>> index(top + 1);
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    auto s = simplices[i];
    std::sort(s.begin(), s.end());
    int d = static_cast<int>(s.size()) - 1;
    index[d][s] = gens[d].size();
    gens[d].push_back(Generator{static_cast<int>(i), {}});
  }
  std::vector<std::vector<Bits>> bd(top + 1);
  for (int d = 0; d <= top; ++d) {
    bd[d].assign(gens[d].size(), Bits(d > 0 ? gens[d - 1].size() : 0));
    if (d == 0) continue;
    for (const auto& [s, j] : index[d]) {
      for (std::size_t k = 0; k < s.size(); ++k) {
        auto f = s;
        f.erase(f.begin() + static_cast<long>(k));
        auto it = index[d - 1].find(f);
        if (it == index[d - 1].end()) throw ContractError("abstract complex is not face-closed");
        bd[d][j].flip(it->second);
      }
    }
  }
  return ChainComplexZ2(std::move(gens), std::move(bd));
}

ChainComplexZ2 bm_chain_complex(const CellSet& a) {
  if (!a.is_locally_closed()) throw ContractError("Borel-Moore chains need a locally closed set");
  const auto& k = a.ambient();
  int top = a.dimension();
  std::vector<std::vector<Generator>> gens(std::max(top + 1, 0));
  std::vector<int> index(k->size(), -1);
  for (int s : a.ids()) {
    int d = k->dim(s);
    index[s] = static_cast<int>(gens[d].size());
    gens[d].push_back(Generator{s, {}});
  }
  std::vector<std::vector<Bits>> bd(gens.size());
  for (int d = 0; d <= top; ++d) {
    for (const auto& g : gens[d]) {
      Bits b(d > 0 ? gens[d - 1].size() : 0);
      if (d > 0)
        for (int f : k->facets(g.simplex))
          if (index[f] >= 0) b.flip(index[f]);
      bd[d].push_back(std::move(b));
    }
  }
  return ChainComplexZ2(std::move(gens), std::move(bd));
}

HomologyResult local_homology(const CellSet& a, int x) {
  const auto& k = a.ambient();
  if (!a.contains(k->vertex_simplex(x)))
    throw ContractError("local homology: vertex " + std::to_string(x) + " is not in the set");
  return homology(bm_chain_complex(a & open_star(k, k->vertex_simplex(x))));
}

Bits Z2Map::apply(int d, const Bits& chain) const {
  Bits out = target.zero(d);
  chain.for_each([&](std::size_t j) { out ^= matrix[d][j]; });
  return out;
}

int Z2Map::induced_rank(int d) const {
  if (d > source.top_degree()) return 0;
  auto h = homology(source);
  std::vector<Bits> imgs;
  for (const auto& z : h.representatives[d]) imgs.push_back(apply(d, z));
  return class_rank(target, d, imgs);
}

bool Z2Map::is_chain_map() const {
  for (int d = 1; d <= source.top_degree(); ++d)
    for (std::size_t j = 0; j < source.size(d); ++j) {
      Bits e = source.zero(d);
      e.set(j);
      if (target.boundary_of(d, apply(d, e)) != apply(d - 1, source.boundary(d, j))) return false;
    }
  return true;
}

namespace {

// Generator-matching map between two BM complexes over the same ambient:
// generator sigma goes to sigma when present in the target.
Z2Map inclusion_map(ChainComplexZ2 src, ChainComplexZ2 tgt) {
  Z2Map m{std::move(src), std::move(tgt), {}};
  for (int d = 0; d <= m.source.top_degree(); ++d) {
    auto idx = index_of(m.target, d);
    std::vector<Bits> col;
    for (std::size_t j = 0; j < m.source.size(d); ++j) {
      Bits b = m.target.zero(d);
      auto it = idx.find(m.source.generator(d, j).simplex);
      if (it != idx.end()) b.set(it->second);
      col.push_back(std::move(b));
    }
    m.matrix.push_back(std::move(col));
  }
  return m;
}

}  // namespace

Z2Map restriction(const CellSet& x, const CellSet& u) {
  if (!u.is_open_in(x)) throw ContractError("restriction: u is not open in x");
  return inclusion_map(bm_chain_complex(x), bm_chain_complex(u));
}

LesReport verify_les(const CellSet& x, const CellSet& y) {
  if (!y.is_closed_in(x)) throw ContractError("verify_les: y is not closed in x");
  CellSet u = x - y;
  Z2Map i = inclusion_map(bm_chain_complex(y), bm_chain_complex(x));
  Z2Map j = inclusion_map(bm_chain_complex(x), bm_chain_complex(u));
  const auto& cy = i.source;
  const auto& cx = i.target;
  const auto& cu = j.target;
  auto hy = homology(cy), hx = homology(cx), hu = homology(cu);
  int top = std::max({cy.top_degree(), cx.top_degree(), cu.top_degree()});

  // Connecting map on a U-cycle of degree d: lift to X, take the boundary,
  // read it as a Y-chain of degree d-1.
  auto delta = [&](int d, const Bits& z) {
    Bits lift = cx.zero(d);
    auto xi = index_of(cx, d);
    z.for_each([&](std::size_t k) { lift.set(xi.at(cu.generator(d, k).simplex)); });
    Bits b = cx.boundary_of(d, lift);
    Bits out = cy.zero(d - 1);
    auto yi = index_of(cy, d - 1);
    b.for_each([&](std::size_t k) {
      auto it = yi.find(cx.generator(d - 1, k).simplex);
      if (it != yi.end()) out.set(it->second);
    });
    return out;
  };
  auto reps = [](const HomologyResult& h, int d) {
    return d >= 0 && d < static_cast<int>(h.representatives.size()) ? h.representatives[d]
                                                                      : std::vector<Bits>{};
  };
  auto rank_i = [&](int d) {
    std::vector<Bits> im;
    for (const auto& z : reps(hy, d)) im.push_back(i.apply(d, z));
    return class_rank(cx, d, im);
  };
  auto rank_j = [&](int d) {
    std::vector<Bits> im;
    for (const auto& z : reps(hx, d)) im.push_back(j.apply(d, z));
    return class_rank(cu, d, im);
  };
  auto rank_delta = [&](int d) {
    if (d <= 0) return 0;
    std::vector<Bits> im;
    for (const auto& z : reps(hu, d)) im.push_back(delta(d, z));
    return class_rank(cy, d - 1, im);
  };

  LesReport rep;
  for (int d = top; d >= 0; --d) {
    int ri = rank_i(d), rj = rank_j(d), rd_in = rank_delta(d + 1), rd_out = rank_delta(d);
    LesNode ny{"Y", d, hy.betti_at(d), rd_in, ri, false};
    LesNode nx{"X", d, hx.betti_at(d), ri, rj, false};
    LesNode nu{"U", d, hu.betti_at(d), rj, rd_out, false};
    for (auto* n : {&ny, &nx, &nu}) {
      n->exact = n->dim - n->rank_out == n->rank_in;
      rep.exact = rep.exact && n->exact;
      rep.nodes.push_back(*n);
    }
    for (const auto& z : reps(hy, d))
      if (!is_boundary(cu, d, j.apply(d, i.apply(d, z)))) rep.compositions_vanish = false;
    if (d > 0)
      for (const auto& z : reps(hx, d))
        if (!is_boundary(cy, d - 1, delta(d, j.apply(d, z)))) rep.compositions_vanish = false;
    if (d > 0)
      for (const auto& z : reps(hu, d))
        if (!is_boundary(cx, d - 1, i.apply(d - 1, delta(d, z)))) rep.compositions_vanish = false;
  }
  rep.exact = rep.exact && rep.compositions_vanish;
  return rep;
}

FundamentalClass fundamental_class(const CellSet& a) {
  if (!a.is_locally_closed()) throw ContractError("fundamental class needs a locally closed set");
  const auto& k = a.ambient();
  FundamentalClass fc;
  fc.dimension = a.dimension();
  if (fc.dimension < 0) return fc;
  std::vector<int> incidence(k->size(), 0);
  for (int s : a.ids()) {
    if (k->dim(s) != fc.dimension) continue;
    fc.simplices.push_back(s);
    for (int f : k->facets(s))
      if (a.contains(f)) ++incidence[f];
  }
  for (std::size_t f = 0; f < incidence.size(); ++f)
    if (incidence[f] % 2) {
      fc.witness = static_cast<int>(f);
      fc.simplices.clear();
      return fc;
    }
  fc.exists = true;
  // Local check at the barycenter of the first top simplex.
  fc.checked_simplex = fc.simplices.front();
  auto sd = barycentric_subdivide(k);
  CellSet a2 = sd.transport(a);
  int b = sd.fine->vertex_simplex(fc.checked_simplex);
  auto c = bm_chain_complex(a2 & open_star(sd.fine, b));
  Bits top(c.size(fc.dimension));
  for (std::size_t j = 0; j < top.size(); ++j) top.set(j);
  fc.local_nonzero = top.any() && is_cycle(c, fc.dimension, top) && !is_boundary(c, fc.dimension, top);
  return fc;
}

}  // namespace eulerlab
