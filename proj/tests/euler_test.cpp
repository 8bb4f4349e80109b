#include <gtest/gtest.h>

#include <random>

#include "eulerlab/euler.hpp"
#include "fixtures.hpp"

using namespace eulerlab;
using eulerlab::fx::corpus;

namespace {

SimplicialMapData fold() {
  auto k = corpus().set("line").ambient();
  return SimplicialMapData{k, k, {2, 1, 2}};
}

// Local Euler characteristic through local homology at the subdivision vertex
// of each member, for comparison with the star-sum count in euler_report.
long local_chi_by_homology(const CellSet& a, int member) {
  auto sd = barycentric_subdivide(a.ambient());
  return local_homology(sd.transport(a), member).euler_characteristic();
}

}  // namespace

TEST(Chi, Examples) {
  auto k = corpus().set("segment").ambient();
  EXPECT_EQ(chi_c(CellSet::from_ids(k, {2})), -1);
  EXPECT_EQ(chi_c(CellSet::from_ids(k, {0})), 1);
  EXPECT_EQ(chi(corpus().set("circle")), 0);
  EXPECT_EQ(chi_c(corpus().set("circle")), 0);
  EXPECT_EQ(chi_c(corpus().set("half_open")), 0);
  EXPECT_EQ(chi(corpus().set("half_open")), 1);
}

TEST(Chi, HomotopyModelCrossChecks) {
  // Circle minus a point is an open arc, the open star of a vertex is
  // contractible, an open segment is contractible.
  EXPECT_EQ(chi(corpus().set("circle_minus_p")), 1);
  EXPECT_EQ(chi(open_star(corpus().set("tripod").ambient(), 0)), 1);
  EXPECT_EQ(chi(corpus().set("open_segment")), 1);
  auto arc = model_homology(corpus().set("circle_minus_p"));
  EXPECT_EQ(arc.betti_at(0), 1);
  EXPECT_EQ(arc.betti_at(1), 0);
  EXPECT_EQ(chi(corpus().set("whitney")), 1);
}

TEST(Chi, CompactSupportIsAdditive) {
  std::mt19937 g(31);
  for (int iter = 0; iter < 200; ++iter) {
    auto k = fx::random_complex(g);
    auto a = fx::random_set(k, g);
    auto b = fx::random_set(k, g) - a;
    ASSERT_EQ(chi_c(a | b), chi_c(a) + chi_c(b));
  }
}

TEST(EulerReport, Examples) {
  auto circle = euler_report(corpus().set("circle"));
  EXPECT_TRUE(circle.euler);
  for (int v = 0; v < 3; ++v) EXPECT_EQ(circle.link_chi[v], 2);
  auto tripod = euler_report(corpus().set("tripod"));
  EXPECT_FALSE(tripod.euler);
  EXPECT_FALSE(tripod.euler_in_codim1);
  EXPECT_EQ(tripod.locus, CellSet::from_ids(corpus().set("tripod").ambient(), {0, 1, 2, 3}));
  EXPECT_EQ(tripod.link_chi[0], 3);
  EXPECT_TRUE(euler_report(corpus().set("whitney")).euler);
  EXPECT_TRUE(euler_report(corpus().set("cartan")).euler);
  EXPECT_TRUE(euler_report(corpus().set("sphere")).euler);
  auto half = euler_report(corpus().set("half_open"));
  EXPECT_EQ(half.locus, CellSet::from_ids(corpus().set("half_open").ambient(), {0}));
  auto seg = euler_report(corpus().set("segment"));
  EXPECT_EQ(seg.locus, corpus().set("segment_ends"));
  auto tri = GeomComplex::create({QPoint{Rational(0), Rational(0)}, QPoint{Rational(1), Rational(0)},
                                  QPoint{Rational(0), Rational(1)}},
                                 {{0, 1, 2}});
  EXPECT_THROW(euler_report(CellSet::from_ids(tri, {0, 6})), ContractError);
}

TEST(EulerReport, AgreesWithLocalHomologyOnCorpus) {
  for (const auto& name : corpus().set_names()) {
    auto a = corpus().set(name);
    if (!a.is_locally_closed()) continue;
    auto r = euler_report(a);
    for (int s : a.ids()) {
      long by_homology = local_chi_by_homology(a, s);
      ASSERT_EQ(by_homology, r.local_chi[s]) << name << " simplex " << s;
    }
  }
}

TEST(EulerReport, AgreesWithLocalHomologyOnRandomSets) {
  std::mt19937 g(37);
  for (int iter = 0; iter < 40; ++iter) {
    auto k = fx::random_complex(g);
    auto a = fx::random_locally_closed(k, g);
    auto r = euler_report(a);
    auto sd = barycentric_subdivide(k);
    auto a2 = sd.transport(a);
    for (int s : a.ids()) ASSERT_EQ(local_homology(a2, s).euler_characteristic(), r.local_chi[s]);
  }
}

TEST(EulerReport, CompactificationParity) {
  std::mt19937 g(41);
  int found = 0;
  for (int iter = 0; found < 200 && iter < 5000; ++iter) {
    auto a = fx::random_euler_candidate(g);
    if (a.empty() || !a.is_locally_closed()) continue;
    auto r = euler_report(a);
    if (!r.euler) continue;
    ASSERT_EQ((r.chi_c - r.chi) % 2, 0);
    ASSERT_TRUE(r.euler_at_infinity);
    ++found;
  }
  EXPECT_EQ(found, 200);
}

TEST(Integrate, Examples) {
  EXPECT_EQ(integrate(ConstructibleFn::indicator(corpus().set("circle_p"))), 1);
  EXPECT_EQ(integrate(ConstructibleFn::indicator(corpus().set("circle"))), 0);
  auto t = GeomComplex::create({QPoint{Rational(0), Rational(0)}, QPoint{Rational(1), Rational(0)},
                                QPoint{Rational(0), Rational(1)}},
                               {{0, 1, 2}});
  EXPECT_EQ(integrate(ConstructibleFn::indicator(CellSet::full(t))), 1);
}

TEST(Pushforward, Examples) {
  auto circle = corpus().set("circle");
  auto pt = GeomComplex::create({QPoint{Rational(0)}}, {{0}});
  SimplicialMapData collapse{circle.ambient(), pt, {0, 0, 0}};
  EXPECT_EQ(pushforward(ConstructibleFn::indicator(circle), collapse).at(0), 0);
  SimplicialMapData id{circle.ambient(), circle.ambient(), {0, 1, 2}};
  auto phi = ConstructibleFn::indicator(corpus().set("circle_minus_p"));
  EXPECT_EQ(pushforward(phi, id).values, phi.values);
  auto f = fold();
  auto one = ConstructibleFn::indicator(corpus().set("line_closed"));
  auto out = pushforward(one, f);
  const auto& k = f.target;
  EXPECT_EQ(out.at(k->vertex_simplex(1)), 1);      // over 0
  EXPECT_EQ(out.at(*k->find({1, 2})), 2);          // over the open edge (0,1)
  EXPECT_EQ(out.at(k->vertex_simplex(2)), 2);      // over 1: {-1, 1}
  EXPECT_EQ(out.at(k->vertex_simplex(0)), 0);
  EXPECT_EQ(out.at(*k->find({0, 1})), 0);
}

TEST(Pushforward, RejectsNonSimplicialVertexMaps) {
  auto circle = corpus().set("circle");
  auto seg = corpus().set("segment").ambient();
  // Three circle vertices to two segment vertices is simplicial; the reverse
  // direction from a triangle boundary into two disjoint points is not.
  auto two = GeomComplex::create({QPoint{Rational(0)}, QPoint{Rational(1)}}, {{0}, {1}});
  SimplicialMapData bad{circle.ambient(), two, {0, 1, 1}};
  EXPECT_THROW(pushforward(ConstructibleFn::indicator(circle), bad), ContractError);
  SimplicialMapData ok{circle.ambient(), seg, {0, 1, 1}};
  EXPECT_NO_THROW(pushforward(ConstructibleFn::indicator(circle), ok));
}

TEST(Pullback, OfOneIsOne) {
  auto f = fold();
  auto one = ConstructibleFn::indicator(CellSet::full(f.target));
  auto p = pullback(one, f);
  for (long v : p.values) EXPECT_EQ(v, 1);
}

TEST(LinkOp, Examples) {
  auto circle = link_op(ConstructibleFn::indicator(corpus().set("circle")));
  for (long v : circle.values) EXPECT_EQ(v, 2);
  auto tripod = link_op(ConstructibleFn::indicator(corpus().set("tripod")));
  EXPECT_EQ(tripod.at(0), 3);
  EXPECT_EQ(tripod.at(4), 2);
}

TEST(LinkOp, EvenExactlyOnEulerSets) {
  std::mt19937 g(43);
  for (int iter = 0; iter < 100; ++iter) {
    auto k = fx::random_complex(g);
    auto a = fx::random_locally_closed(k, g);
    auto r = euler_report(a);
    auto lam = link_op(ConstructibleFn::indicator(a));
    bool even = true;
    for (int s : a.ids()) {
      ASSERT_EQ(lam.at(s), r.link_chi[s]);
      even = even && lam.at(s) % 2 == 0;
    }
    ASSERT_EQ(even, r.euler);
  }
}

TEST(SignSum, Examples) {
  auto xy = Polynomial::monomial(Rational(1), {1, 1});
  std::vector<QPoint> quadrants{QPoint{Rational(1), Rational(1)}, QPoint{Rational(-1), Rational(1)},
                                QPoint{Rational(-1), Rational(-1)}, QPoint{Rational(1), Rational(-1)}};
  EXPECT_EQ(signsum_eval({xy}, quadrants), (std::vector<long>{1, -1, 1, -1}));
  EXPECT_EQ(signsum_eval({Polynomial::constant(Rational(1))}, {QPoint{make_rational(3, 7)}}), (std::vector<long>{1}));
}

TEST(SignSum, ParityObstruction) {
  std::vector<Sample> half_line{{QPoint{Rational(-1)}, 0, true}, {QPoint{Rational(0)}, 1, false},
                                {QPoint{Rational(1)}, 1, true}};
  auto v = parity_obstruction(half_line);
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.witness_a, 0);
  EXPECT_EQ(v.witness_b, 2);
  auto xy = Polynomial::monomial(Rational(1), {1, 1});
  std::vector<Sample> quad;
  for (auto [x, y] : {std::pair{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}) {
    QPoint p{Rational(x), Rational(y)};
    quad.push_back({p, signsum_eval({xy}, {p})[0], true});
  }
  EXPECT_TRUE(parity_obstruction(quad).pass);
}
