#include <gtest/gtest.h>

#include <random>
#include <set>

#include "eulerlab/dynamics.hpp"
#include "eulerlab/homology.hpp"
#include "fixtures.hpp"

using namespace eulerlab;
using eulerlab::fx::corpus;

namespace {

PLMap corpus_map(const std::string& name) { return map_from_corpus(corpus(), name); }

QPoint q1(long n, long d) { return QPoint{make_rational(n, d)}; }

// Random interior point of a random member of a.
QPoint random_point(const CellSet& a, std::mt19937& g) {
  auto ids = a.ids();
  std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
  std::uniform_int_distribution<long> w(1, 97);
  const auto& k = *a.ambient();
  const auto& verts = k.simplex(ids[pick(g)]);
  std::vector<long> ws;
  long total = 0;
  for (std::size_t i = 0; i < verts.size(); ++i) total += ws.emplace_back(w(g));
  QPoint p(k.ambient_dim());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t c = 0; c < p.dim(); ++c) p.coords[c] += k.vertex(verts[i]).coords[c] * make_rational(ws[i], total);
  return p;
}

bool contains_point(const CellSet& a, const QPoint& p) {
  auto loc = locate(p, *a.ambient());
  return !loc.outside() && a.contains(loc.simplex);
}

// t ↦ t/2 on the open unit segment: the image (0, 1/2) is open in X.
PLMap halving() {
  auto x = corpus().set("open_segment");
  return PLMap{"halving", x, x, Refinement::identity(x.ambient()), {q1(0, 1), q1(1, 2)}};
}

const std::vector<std::string> kMaps{"rotation", "sphere_rotation", "shift",        "segment_shrink",
                                     "fold",     "shrink",          "whitney_flip", "cartan_flip"};

}  // namespace

TEST(VerifyInjective, Examples) {
  EXPECT_TRUE(verify_injective(corpus_map("rotation")).injective);
  auto fold = verify_injective(corpus_map("fold"));
  ASSERT_FALSE(fold.injective);
  std::set<QPoint> pair{*fold.witness_a, *fold.witness_b};
  EXPECT_EQ(pair, (std::set<QPoint>{q1(-1, 2), q1(1, 2)}));
  EXPECT_TRUE(verify_injective(corpus_map("shift")).injective);
  EXPECT_TRUE(verify_injective(corpus_map("shrink")).injective);
  EXPECT_TRUE(verify_injective(corpus_map("whitney_flip")).injective);
}

TEST(VerifyInjective, AgreesWithSampling) {
  std::mt19937 g(61);
  for (const auto& name : kMaps) {
    auto f = corpus_map(name);
    auto v = verify_injective(f);
    if (v.injective) {
      for (int i = 0; i < 500; ++i) {
        auto p = random_point(f.domain, g);
        auto q = random_point(f.domain, g);
        if (p == q) continue;
        ASSERT_NE(f(p), f(q)) << name << " " << p << " " << q;
      }
    } else {
      ASSERT_TRUE(v.witness_a && v.witness_b);
      EXPECT_NE(*v.witness_a, *v.witness_b);
      EXPECT_TRUE(contains_point(f.domain, *v.witness_a));
      EXPECT_TRUE(contains_point(f.domain, *v.witness_b));
      EXPECT_EQ(f(*v.witness_a), f(*v.witness_b)) << name;
    }
  }
}

TEST(VerifyInjective, CollapsedSimplexWitness) {
  // Triangle onto a segment through a middle image point.
  auto tri = GeomComplex::create({QPoint{Rational(0), Rational(0)}, QPoint{Rational(1), Rational(0)},
                                  QPoint{Rational(0), Rational(1)}},
                                 {{0, 1, 2}});
  auto seg = corpus().set("segment");
  PLMap f{"squash", CellSet::full(tri), seg, Refinement::identity(tri), {q1(0, 1), q1(1, 1), q1(1, 3)}};
  auto v = verify_injective(f);
  ASSERT_FALSE(v.injective);
  EXPECT_EQ(f(*v.witness_a), f(*v.witness_b));
  auto img = image(f);
  EXPECT_EQ(img.coarse(), seg);
}

TEST(Image, Examples) {
  auto circle = corpus().set("circle");
  auto id = image(PLMap::identity(circle));
  EXPECT_EQ(id.coarse(), circle);

  auto shift = image(corpus_map("shift"));
  EXPECT_FALSE(shift.coarse());
  const auto& r = shift.image;
  EXPECT_TRUE(contains_point(r, q1(1, 2)));
  EXPECT_TRUE(contains_point(r, q1(3, 4)));
  EXPECT_FALSE(contains_point(r, q1(1, 4)));
  EXPECT_FALSE(contains_point(r, q1(1, 1)));
  EXPECT_EQ(r.count(), 2u);  // the vertex 1/2 and the open edge (1/2, 1)

  auto pt = GeomComplex::create({QPoint{Rational(0)}}, {{0}});
  auto one = CellSet::full(pt);
  PLMap collapse{"collapse", circle, one, Refinement::identity(circle.ambient()),
                 {QPoint{Rational(0)}, QPoint{Rational(0)}, QPoint{Rational(0)}}};
  EXPECT_EQ(preimage(collapse, one).coarse(), circle);
}

TEST(Image, RejectsMapsLeavingTheTarget) {
  auto seg = corpus().set("segment");
  PLMap out{"out", seg, seg, Refinement::identity(seg.ambient()), {q1(0, 1), q1(2, 1)}};
  EXPECT_THROW(simplicial_form(out), ContractError);
  auto half = corpus().set("half_open");
  PLMap leave{"leave", half, half, Refinement::identity(half.ambient()), {q1(1, 1), q1(0, 1)}};
  EXPECT_THROW(simplicial_form(leave), ContractError);
}

TEST(Iterate, Examples) {
  auto circle = corpus().set("circle");
  auto id = PLMap::identity(circle);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(image(iterate(id, k)).coarse(), circle);

  auto shift2 = iterate(corpus_map("shift"), 2);
  EXPECT_EQ(shift2(q1(0, 1)), q1(3, 4));
  EXPECT_EQ(shift2(q1(1, 2)), q1(7, 8));
  EXPECT_EQ(shift2(q1(1, 3)), q1(5, 6));
  auto img = image(shift2).image;
  EXPECT_TRUE(contains_point(img, q1(3, 4)));
  EXPECT_TRUE(contains_point(img, q1(9, 10)));
  EXPECT_FALSE(contains_point(img, q1(2, 3)));

  auto shrink2 = iterate(corpus_map("shrink"), 2);
  EXPECT_EQ(shrink2(QPoint{Rational(1), Rational(0)}), (QPoint{make_rational(1, 4), Rational(0)}));
  EXPECT_EQ(shrink2(QPoint{Rational(-1), Rational(-1)}), (QPoint{make_rational(-1, 4), make_rational(-1, 4)}));
  auto timg = image(shrink2).image;
  EXPECT_TRUE(contains_point(timg, QPoint{make_rational(1, 8), Rational(0)}));
  EXPECT_FALSE(contains_point(timg, QPoint{make_rational(1, 2), Rational(0)}));

  EXPECT_THROW(iterate(corpus_map("fold"), -1), ContractError);
}

TEST(Iterate, AgreesWithPointwiseComposition) {
  std::mt19937 g(67);
  for (const auto* name : {"shift", "segment_shrink", "shrink", "rotation", "fold"}) {
    auto f = corpus_map(name);
    auto f3 = iterate(f, 3);
    for (int i = 0; i < 50; ++i) {
      auto p = random_point(f.domain, g);
      ASSERT_EQ(f3(p), f(f(f(p)))) << name;
    }
  }
}

TEST(Pushforward, OfOneIsTheImageIndicator) {
  for (const auto* name : {"rotation", "shift", "segment_shrink", "shrink", "whitney_flip"}) {
    auto f = corpus_map(name);
    auto sf = simplicial_form(f);
    ASSERT_TRUE(verify_injective(sf).injective);
    auto push = pushforward(ConstructibleFn::indicator(sf.domain), sf.data());
    auto img = sf.image(sf.domain);
    for (std::size_t t = 0; t < sf.target.fine->size(); ++t)
      ASSERT_EQ(push.at(static_cast<int>(t)), img.contains(static_cast<int>(t)) ? 1 : 0) << name << " " << t;
  }
}

namespace {

ConstructibleFn random_fn(const CellSet& a, std::mt19937& g) {
  std::uniform_int_distribution<long> v(-3, 3);
  auto phi = ConstructibleFn::zero(a.ambient());
  for (int s : a.ids()) phi.set(s, v(g));
  return phi;
}

// f_*φ by locating f at the barycenter of every domain cell: the open cell σ
// lands in one open cell t, with fibers of dimension dim σ − dim f(σ).
std::vector<long> located_fibers(const PLMap& f, const SimplicialForm& sf, const ConstructibleFn& phi) {
  const auto& src = *sf.source.fine;
  const auto& dst = *sf.target.fine;
  std::vector<long> out(dst.size(), 0);
  for (int s : sf.domain.ids()) {
    if (phi.at(s) == 0) continue;
    auto loc = locate(f(src.barycenter(s)), dst);
    EXPECT_FALSE(loc.outside());
    std::vector<QPoint> pts;
    for (int v : src.simplex(s)) pts.push_back(f(src.vertex(v)));
    int fiber = src.dim(s) - linalg::affine_rank(pts);
    out[loc.simplex] += (fiber % 2 ? -1 : 1) * phi.at(s);
  }
  return out;
}

}  // namespace

TEST(Pushforward, FubiniOnCorpusMaps) {
  std::mt19937 g(51);
  for (const auto& name : corpus().map_names()) {
    auto f = corpus_map(name);
    auto sf = simplicial_form(f);
    for (int i = 0; i < 20; ++i) {
      auto phi = random_fn(sf.domain, g);
      ASSERT_EQ(integrate(pushforward(phi, sf.data())), integrate(phi)) << name;
    }
  }
}

TEST(Pushforward, MatchesLocatedFibersOnCorpusMaps) {
  std::mt19937 g(53);
  for (const auto& name : corpus().map_names()) {
    auto f = corpus_map(name);
    auto sf = simplicial_form(f);
    for (int i = 0; i < 5; ++i) {
      auto phi = i == 0 ? ConstructibleFn::indicator(sf.domain) : random_fn(sf.domain, g);
      ASSERT_EQ(pushforward(phi, sf.data()).values, located_fibers(f, sf, phi)) << name;
    }
  }
}

TEST(Borel, SurjectiveMapHasEmptyY) {
  auto r = borel_analysis(corpus_map("rotation"), 3);
  EXPECT_EQ(r.d, -1);
  for (const auto& st : r.steps) EXPECT_TRUE(st.y.empty());
  EXPECT_FALSE(r.first_codim1_failure);
}

TEST(Borel, HalfLineShift) {
  auto r = borel_analysis(corpus_map("shift"), 3);
  ASSERT_EQ(r.steps.size(), 3u);
  EXPECT_EQ(r.d, 1);
  EXPECT_TRUE(r.increasing);
  for (int k = 1; k <= 3; ++k) {
    const auto& st = r.steps[k - 1];
    Rational end = Rational(1) - make_rational(1, 1L << k);
    EXPECT_TRUE(contains_point(st.y, q1(0, 1)));
    EXPECT_TRUE(contains_point(st.y, QPoint{end / 2}));
    EXPECT_FALSE(contains_point(st.y, QPoint{end}));
    EXPECT_FALSE(contains_point(st.y, QPoint{(end + 1) / 2}));
    EXPECT_EQ(st.bm_rank, 0);
    EXPECT_FALSE(st.euler_codim1);
    EXPECT_EQ(st.independence_rank, 0);
  }
  EXPECT_EQ(r.first_codim1_failure, 1);
}

TEST(Borel, YIsClosedAndIncreasingWhenTheImageIsOpen) {
  auto r = borel_analysis(halving(), 3);
  EXPECT_TRUE(r.increasing);
  for (std::size_t k = 0; k < r.steps.size(); ++k) {
    EXPECT_TRUE(r.steps[k].closed_in_x) << k;
    if (k > 0) EXPECT_NE(r.steps[k].y, r.steps[k - 1].y);
  }
  // Y_k = [1/2^k, 1) has H^BM_1 = 0 and its bad point 1/2^k in codimension 1.
  EXPECT_EQ(r.steps[2].bm_rank, 0);
  EXPECT_EQ(r.first_codim1_failure, 1);
}

TEST(Borel, NestedCirclesAreIndependent) {
  const auto& ch = corpus().chain("nested_circles");
  std::vector<CellSet> ys;
  for (const auto& s : ch.sets) ys.push_back(corpus().set(s));
  auto r = borel_chain_analysis(corpus().set(ch.space), ys);
  EXPECT_EQ(r.d, 1);
  ASSERT_EQ(r.steps.size(), 3u);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(r.steps[k - 1].independence_rank, k);
    EXPECT_EQ(r.steps[k - 1].bm_rank, k);
    EXPECT_TRUE(r.steps[k - 1].euler_codim1);
  }
  EXPECT_THROW(borel_chain_analysis(corpus().set("nested_1"), ys), ContractError);
}

TEST(TheoremLab, Rotation) {
  auto lab = theorem_lab(corpus_map("rotation"));
  EXPECT_TRUE(lab.injective);
  EXPECT_TRUE(lab.surjective);
  EXPECT_TRUE(lab.homeomorphism);
  EXPECT_FALSE(lab.alarm);
  EXPECT_TRUE(lab.sing.sigma.empty());
}

TEST(TheoremLab, TripodShrinkIsConsistent) {
  auto lab = theorem_lab(corpus_map("shrink"));
  EXPECT_TRUE(lab.injective);
  EXPECT_FALSE(lab.surjective);
  EXPECT_FALSE(lab.euler);
  EXPECT_FALSE(lab.alarm);
  // The ends are singular but go to regular points of the legs.
  EXPECT_FALSE(lab.s_invariant);
  EXPECT_EQ(lab.sing.s, corpus().set("tripod_center") | corpus().set("tripod_ends"));
}

TEST(TheoremLab, WhitneyFlip) {
  auto fam = corpus().family_model("whitney_family");
  auto lab = theorem_lab(corpus_map("whitney_flip"), &fam);
  EXPECT_TRUE(lab.injective);
  EXPECT_TRUE(lab.surjective);
  EXPECT_TRUE(lab.homeomorphism);
  EXPECT_TRUE(lab.euler);
  EXPECT_FALSE(lab.alarm);
  EXPECT_EQ(lab.sing.sigma, corpus().set("whitney_axis"));
  EXPECT_EQ(lab.sing.a, corpus().set("whitney_handle") - CellSet::from_ids(fam.ambient(), {0}));
  EXPECT_TRUE(lab.s_invariant);
  ASSERT_TRUE(lab.cc_sigma_invariant);
  EXPECT_TRUE(*lab.cc_sigma_invariant);
  EXPECT_EQ(*lab.cc_sigma, corpus().set("whitney_axis"));
}

TEST(TheoremLab, CartanFlip) {
  auto fam = corpus().family_model("cartan_family");
  auto lab = theorem_lab(corpus_map("cartan_flip"), &fam);
  EXPECT_TRUE(lab.homeomorphism);
  EXPECT_TRUE(lab.s_invariant);
  EXPECT_TRUE(*lab.cc_sigma_invariant);
}

TEST(TheoremLab, HalfOpenShiftIsNotSurjective) {
  auto lab = theorem_lab(corpus_map("shift"));
  EXPECT_TRUE(lab.injective);
  EXPECT_FALSE(lab.surjective);
  EXPECT_FALSE(lab.euler);
  EXPECT_FALSE(lab.alarm);
}

TEST(SingularSets, Examples) {
  auto circle = singular_sets(corpus().set("circle"));
  EXPECT_TRUE(circle.sigma.empty());
  auto seg = singular_sets(corpus().set("segment"));
  EXPECT_EQ(seg.s, corpus().set("segment_ends"));
  auto sphere = singular_sets(corpus().set("sphere"));
  EXPECT_TRUE(sphere.sigma.empty());
  EXPECT_FALSE(sphere.proxy);
  auto cartan = singular_sets(corpus().set("cartan"));
  EXPECT_EQ(cartan.sigma, corpus().set("cartan_axis"));
}

TEST(Search, Circle) {
  auto r = search_selfmaps(corpus().set("circle"), 1);
  EXPECT_FALSE(r.exhausted);
  EXPECT_GT(r.injective, 0u);
  EXPECT_EQ(r.injective, r.surjective);
  EXPECT_EQ(r.surjective, r.homeomorphisms);
}

TEST(Search, NonEulerSetsHaveInjectiveNonSurjectiveMaps) {
  for (const auto* name : {"tripod", "segment"}) {
    auto r = search_selfmaps(corpus().set(name), 1);
    EXPECT_FALSE(r.exhausted) << name;
    EXPECT_FALSE(r.injective_non_surjective.empty()) << name;
  }
}

TEST(Search, BudgetIsReported) {
  auto r = search_selfmaps(corpus().set("circle"), 1, 100);
  EXPECT_TRUE(r.exhausted);
  EXPECT_GT(r.explored, 100u);
}

// Injective self-maps of a closed Euler set of pure dimension are surjective
// homeomorphisms. On a non-closed one the search also reaches PL maps like
// t -> t/2 on an open arc; those must show a Y_k that is not Euler in
// codimension one, so the theorem lab raises no alarm.
TEST(Search, InjectiveSelfMapsOfEulerSetsAreHomeomorphisms) {
  int sets = 0, closed = 0, explained = 0;
  for (const auto& name : corpus().set_names()) {
    auto x = corpus().set(name);
    if (x.empty() || !x.is_locally_closed()) continue;
    auto rep = euler_report(x);
    if (!rep.euler || pure_part(x, x.dimension()) != x) continue;
    int depth = x.ambient()->size() <= 12 ? 1 : 0;
    auto r = search_selfmaps(x, depth, 3000000);
    ASSERT_FALSE(r.exhausted) << name;
    EXPECT_EQ(r.surjective, r.homeomorphisms) << name;
    if (x.is_closed()) {
      EXPECT_EQ(r.injective, r.surjective) << name;
      ++closed;
    }
    for (const auto& f : r.injective_non_surjective) {
      auto lab = theorem_lab(f);
      EXPECT_TRUE(lab.hypothesis_failure.has_value()) << name;
      EXPECT_FALSE(lab.alarm) << name;
      ++explained;
    }
    ++sets;
  }
  EXPECT_GE(sets, 8);
  EXPECT_GE(closed, 4);
  EXPECT_GT(explained, 0);
}

TEST(Search, OpenArcShrinkFailsTheCodimOneCondition) {
  auto r = search_selfmaps(corpus().set("open_segment"), 1);
  ASSERT_FALSE(r.injective_non_surjective.empty());
  for (const auto& f : r.injective_non_surjective) {
    auto lab = theorem_lab(f);
    EXPECT_TRUE(lab.euler);
    EXPECT_FALSE(lab.surjective);
    EXPECT_EQ(lab.hypothesis_failure, std::optional<int>(1));
    EXPECT_FALSE(lab.alarm);
  }
}

// Closed subsets of a manifold component that are Euler in codimension one
// are the whole component or of lower dimension.
TEST(Invariance, ClosedEulerSubsetsOfManifoldComponents) {
  int checked = 0;
  for (const auto* name : {"circle", "circle_minus_p", "open_segment", "sphere", "whitney", "cartan"}) {
    auto x = corpus().set(name);
    auto sing = singular_sets(x);
    for (const auto& u : components(x - sing.s)) {
      auto ids = u.ids();
      if (ids.size() > 16) continue;
      for (std::size_t mask = 1; mask < (std::size_t{1} << ids.size()); ++mask) {
        std::vector<int> sel;
        for (std::size_t i = 0; i < ids.size(); ++i)
          if (mask >> i & 1) sel.push_back(ids[i]);
        auto y = CellSet::from_ids(x.ambient(), sel);
        if (!y.is_closed_in(u) || !y.is_locally_closed() || !euler_report(y).euler_in_codim1) continue;
        ASSERT_TRUE(y == u || y.dimension() < u.dimension()) << name << " " << y.str();
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Invariance, ComplementOfTheImageInAManifoldComponent) {
  int checked = 0;
  for (const auto* name : {"circle", "open_segment", "circle_minus_p"}) {
    auto x = corpus().set(name);
    auto r = search_selfmaps(x, 1);
    ASSERT_FALSE(r.injective_maps.empty()) << name;
    auto sing = singular_sets(x);
    for (const auto& f : r.injective_maps) {
      auto sf = simplicial_form(f);
      for (const auto& u : components(x - sing.s)) {
        auto ur = sf.target.transport(u);
        auto y = ur - sf.image(sf.source.transport(u));
        if (!y.is_closed_in(ur) || !y.is_locally_closed()) continue;
        if (!y.empty() && !euler_report(y).euler_in_codim1) continue;
        ASSERT_TRUE(y == ur || y.dimension() < ur.dimension()) << name;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0);
}
