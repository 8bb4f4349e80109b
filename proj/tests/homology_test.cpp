#include <gtest/gtest.h>

#include <random>

#include "eulerlab/euler.hpp"
#include "eulerlab/homology.hpp"
#include "fixtures.hpp"

using namespace eulerlab;
using eulerlab::fx::corpus;

namespace {

std::vector<int> betti(const CellSet& a) { return homology(bm_chain_complex(a)).betti; }

int betti_at(const CellSet& a, int d) { return homology(bm_chain_complex(a)).betti_at(d); }

// Independent rank over GF(2) by plain row reduction on dense 0/1 rows.
int dense_rank(std::vector<std::vector<int>> m) {
  int r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(m.size()); ++i)
      if (m[i][c]) piv = i;
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    for (int i = 0; i < static_cast<int>(m.size()); ++i)
      if (i != r && m[i][c])
        for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
    ++r;
  }
  return r;
}

// Betti numbers of a closed set from dense boundary ranks.
std::vector<int> dense_betti(const CellSet& a) {
  const auto& k = a.ambient();
  int top = a.dimension();
  std::vector<std::vector<int>> by_dim(top + 1);
  for (int s : a.ids()) by_dim[k->dim(s)].push_back(s);
  std::vector<int> rank(top + 2, 0);
  for (int d = 1; d <= top; ++d) {
    std::vector<std::vector<int>> m;
    for (int s : by_dim[d]) {
      std::vector<int> row(by_dim[d - 1].size(), 0);
      for (int f : k->facets(s))
        for (std::size_t j = 0; j < by_dim[d - 1].size(); ++j)
          if (by_dim[d - 1][j] == f) row[j] = 1;
      m.push_back(row);
    }
    rank[d] = dense_rank(m);
  }
  std::vector<int> out;
  for (int d = 0; d <= top; ++d) out.push_back(static_cast<int>(by_dim[d].size()) - rank[d] - rank[d + 1]);
  return out;
}

}  // namespace

TEST(Homology, KnownSpaces) {
  EXPECT_EQ(betti(corpus().set("circle")), (std::vector<int>{1, 1}));
  EXPECT_EQ(betti(corpus().set("sphere")), (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(betti(corpus().set("circle_p")), (std::vector<int>{1}));
  EXPECT_EQ(betti(corpus().set("tripod")), (std::vector<int>{1, 0}));
  EXPECT_EQ(betti(corpus().set("nested_3")), (std::vector<int>{3, 3}));
}

TEST(Homology, BorelMooreExamples) {
  auto open = corpus().set("open_segment");
  EXPECT_EQ(betti_at(open, 1), 1);
  EXPECT_EQ(betti_at(open, 0), 0);
  auto half = corpus().set("half_open");
  EXPECT_EQ(betti_at(half, 1), 0);
  EXPECT_EQ(betti_at(half, 0), 0);
  // Open triangle plus one corner: the frontier contains the two open edges
  // at that corner but not the corner, so it is not closed.
  auto tri = GeomComplex::create({QPoint{Rational(0), Rational(0)}, QPoint{Rational(1), Rational(0)},
                                  QPoint{Rational(0), Rational(1)}},
                                 {{0, 1, 2}});
  EXPECT_THROW(bm_chain_complex(CellSet::from_ids(tri, {0, 6})), ContractError);
}

TEST(Homology, RepresentativesAreIndependentCycles) {
  auto c = bm_chain_complex(corpus().set("nested_3"));
  auto h = homology(c);
  ASSERT_EQ(h.representatives[1].size(), 3u);
  for (const auto& z : h.representatives[1]) EXPECT_TRUE(is_cycle(c, 1, z));
  EXPECT_EQ(class_rank(c, 1, h.representatives[1]), 3);
}

TEST(Homology, ChainComplexRejectsNonZeroSquare) {
  // One 2-generator whose boundary is a single edge with nonzero boundary.
  Bits e(1);
  e.set(0);
  Bits v(2);
  v.set(0);
  EXPECT_THROW(ChainComplexZ2({{{}, {}}, {{}}, {{}}}, {{}, {v}, {e}}), ContractError);
}

TEST(Homology, EulerPoincareAndDenseOracleOnRandomSets) {
  std::mt19937 g(21);
  for (int iter = 0; iter < 200; ++iter) {
    auto k = fx::random_complex(g);
    auto a = fx::random_locally_closed(k, g);
    auto c = bm_chain_complex(a);
    auto h = homology(c);
    ASSERT_EQ(h.euler_characteristic(), chi_c(a));
    for (int d = 1; d <= c.top_degree(); ++d)
      for (std::size_t j = 0; j < c.size(d); ++j) ASSERT_TRUE(c.boundary_of(d - 1, c.boundary(d, j)).none());
    auto closed = a.closure();
    auto hb = homology(bm_chain_complex(closed)).betti;
    auto db = dense_betti(closed);
    hb.resize(db.size());
    ASSERT_EQ(hb, db);
  }
}

TEST(LocalHomology, Examples) {
  auto circle = local_homology(corpus().set("circle"), 0);
  EXPECT_EQ(circle.betti_at(0), 0);
  EXPECT_EQ(circle.betti_at(1), 1);
  auto tripod = local_homology(corpus().set("tripod"), 0);
  EXPECT_EQ(tripod.betti_at(0), 0);
  EXPECT_EQ(tripod.betti_at(1), 2);
  auto end = local_homology(corpus().set("segment"), 0);
  EXPECT_EQ(end.betti_at(0), 0);
  EXPECT_EQ(end.betti_at(1), 0);
  EXPECT_THROW(local_homology(corpus().set("half_open"), 1), ContractError);
}

TEST(Restriction, Examples) {
  auto circle = corpus().set("circle");
  auto id = restriction(circle, circle);
  EXPECT_TRUE(id.is_chain_map());
  EXPECT_EQ(id.induced_rank(1), 1);
  auto u = open_star(circle.ambient(), 0);
  auto r = restriction(circle, u);
  EXPECT_TRUE(r.is_chain_map());
  EXPECT_EQ(r.induced_rank(1), 1);
  // [X] = pq + qr + rp goes to pq + rp.
  Bits fundamental(r.source.size(1));
  fundamental.flip(0);
  fundamental.flip(1);
  fundamental.flip(2);
  auto image = r.apply(1, fundamental);
  EXPECT_EQ(image.count(), 2u);
  EXPECT_TRUE(is_cycle(r.target, 1, image));

  auto tripod = corpus().set("tripod");
  auto star = open_star(tripod.ambient(), 0);
  auto rt = restriction(tripod, star);
  EXPECT_EQ(homology(rt.target).betti_at(1), 2);
  EXPECT_EQ(rt.induced_rank(1), 0);
  EXPECT_THROW(restriction(tripod, corpus().set("tripod_ends")), ContractError);
}

TEST(Les, Examples) {
  auto circle = corpus().set("circle");
  auto trivial = verify_les(circle, circle);
  EXPECT_TRUE(trivial.exact);
  auto point = verify_les(circle, corpus().set("circle_p"));
  EXPECT_TRUE(point.exact);
  EXPECT_TRUE(point.compositions_vanish);
  for (const auto& n : point.nodes) {
    if (n.space == "U" && n.degree == 1) {
      EXPECT_EQ(n.dim, 1);
    }
    if (n.space == "Y" && n.degree == 0) {
      EXPECT_EQ(n.dim, 1);
      EXPECT_EQ(n.rank_in, 0);  // the connecting map from H1(U) is zero
    }
  }
  auto seg = verify_les(corpus().set("segment"), corpus().set("segment_ends"));
  EXPECT_TRUE(seg.exact);
  for (const auto& n : seg.nodes) {
    if (n.space == "U" && n.degree == 1) EXPECT_EQ(n.dim, 1);
    if (n.space == "Y" && n.degree == 0) {
      EXPECT_EQ(n.dim, 2);
      EXPECT_EQ(n.rank_in, 1);
    }
    if (n.space == "X" && n.degree == 0) EXPECT_EQ(n.dim, 1);
  }
  EXPECT_THROW(verify_les(circle, corpus().set("circle_open_pq")), ContractError);
}

TEST(Les, ExactOnRandomPairs) {
  std::mt19937 g(23);
  for (int iter = 0; iter < 100; ++iter) {
    auto k = fx::random_complex(g);
    auto x = fx::random_locally_closed(k, g);
    // A closed subset of x: x ∩ (a closed set of the ambient).
    auto y = x & fx::random_set(k, g, 0.3).closure();
    auto r = verify_les(x, y);
    ASSERT_TRUE(r.compositions_vanish) << iter;
    ASSERT_TRUE(r.exact) << iter;
  }
}

TEST(FundamentalClass, Examples) {
  auto circle = fundamental_class(corpus().set("circle"));
  EXPECT_TRUE(circle.exists);
  EXPECT_EQ(circle.simplices.size(), 3u);
  EXPECT_TRUE(circle.local_nonzero);
  auto seg = fundamental_class(corpus().set("segment"));
  EXPECT_FALSE(seg.exists);
  EXPECT_EQ(seg.witness, 0);
  auto half = fundamental_class(corpus().set("half_open"));
  EXPECT_FALSE(half.exists);
  EXPECT_EQ(half.witness, 0);
  auto sphere = fundamental_class(corpus().set("sphere"));
  EXPECT_TRUE(sphere.exists);
  EXPECT_TRUE(sphere.local_nonzero);
}

// [U] lies in the image of H^BM_d(X) -> H^BM_d(U) when X is Euler in
// codimension one and U is open in X of the same dimension d.
TEST(Restriction, TopClassOfAnOpenPartIsInTheImage) {
  std::mt19937 g(29);
  int tested = 0;
  for (int iter = 0; tested < 50 && iter < 5000; ++iter) {
    auto x = fx::random_euler_candidate(g);
    const auto& k = x.ambient();
    if (x.empty() || !x.is_locally_closed() || !euler_report(x).euler_in_codim1) continue;
    auto u = x & fx::random_set(k, g, 0.6).closure().complement();
    // Keep the open-in-x part of the same dimension.
    u = u - (x - u).closure();
    if (u.empty() || u.dimension() != x.dimension()) continue;
    auto r = restriction(x, u);
    int d = x.dimension();
    Bits top(r.target.size(d));
    for (std::size_t j = 0; j < r.target.size(d); ++j) top.set(j);
    ASSERT_TRUE(is_cycle(r.target, d, top));
    // Solvability: [U] ∈ image(H_d(X)) iff some cycle of X maps to U's class.
    auto hx = homology(r.source);
    std::vector<Bits> images;
    for (const auto& z : hx.representatives[d]) images.push_back(r.apply(d, z));
    int base = class_rank(r.target, d, images);
    images.push_back(top);
    ASSERT_EQ(class_rank(r.target, d, images), base) << "iteration " << iter;
    ++tested;
  }
  EXPECT_EQ(tested, 50);
}
