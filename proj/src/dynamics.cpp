#include "eulerlab/dynamics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>

#include "eulerlab/homology.hpp"

namespace eulerlab {

namespace {

std::map<QPoint, int> vertex_index(const GeomComplex& k) {
  std::map<QPoint, int> out;
  for (std::size_t v = 0; v < k.num_vertices(); ++v) out.emplace(k.vertex(static_cast<int>(v)), static_cast<int>(v));
  return out;
}

std::optional<int> span(const GeomComplex& k, std::vector<int> verts) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return k.find(verts);
}

void require_self_map(const PLMap& f) {
  if (f.domain != f.target) throw ContractError("map '" + f.name + "' is not a self-map (target differs from domain)");
}

// Throws with the offending cell unless img is locally closed.
void require_locally_closed_image(const CellSet& img, const std::string& name) {
  if (img.is_locally_closed()) return;
  CellSet bad = (img.closure() - img).closure() & img;
  throw ContractError("image of '" + name + "' is not locally closed: frontier cell " +
                      std::to_string(bad.ids().front()) + " of the refined target lies in the image");
}

bool open_onto_image(const SimplicialForm& sf) {
  const auto& src = *sf.source.fine;
  const auto& tgt = *sf.target.fine;
  std::vector<int> back(tgt.size(), -1);
  for (int s : sf.domain.ids()) back[sf.image_of(s)] = s;
  for (int t : sf.domain.ids()) {
    for (int face : tgt.faces(sf.image_of(t))) {
      int s = back[face];
      if (s >= 0 && !src.is_face(s, t)) return false;
    }
  }
  return true;
}

}  // namespace

PLMap PLMap::identity(const CellSet& a) {
  auto k = a.ambient();
  return PLMap{"identity", a, a, Refinement::identity(k), k->vertices()};
}

PLMap map_from_corpus(const Workspace& ws, const std::string& name) {
  const auto& m = ws.map(name);
  auto k = ws.complex_of(ws.file_of_map(name));
  return PLMap{name, ws.set(m.domain), ws.set(m.target), iterated_subdivision(k, m.depth), m.images};
}

int SimplicialForm::image_of(int s) const {
  std::vector<int> v;
  for (int x : source.fine->simplex(s)) {
    if (vertex_map[x] < 0) throw ContractError("simplex " + std::to_string(s) + " is off the map's domain");
    v.push_back(vertex_map[x]);
  }
  auto t = span(*target.fine, v);
  if (!t) throw ContractError("simplex " + std::to_string(s) + " does not map onto a simplex");
  return *t;
}

CellSet SimplicialForm::image(const CellSet& a_fine) const {
  if (a_fine.ambient() != source.fine) throw ContractError("image: set is not on the refined source");
  Bits m(target.fine->size());
  for (int s : a_fine.ids()) m.set(image_of(s));
  return CellSet(target.fine, m);
}

CellSet SimplicialForm::preimage(const CellSet& b_fine) const {
  if (b_fine.ambient() != target.fine) throw ContractError("preimage: set is not on the refined target");
  Bits m(source.fine->size());
  for (int s : domain.ids())
    if (b_fine.contains(image_of(s))) m.set(s);
  return CellSet(source.fine, m);
}

SimplicialForm simplicial_form(const PLMap& f, std::size_t budget) {
  const auto& kf = f.refinement.fine;
  const auto& l = f.target_complex();
  if (f.refinement.coarse != f.source_complex()) throw ContractError("map refinement is not of the domain complex");
  if (f.images.size() != kf->num_vertices()) throw ContractError("map has the wrong number of vertex images");
  CellSet closed = f.refinement.transport(f.domain).closure();

  SimplicialForm sf;
  // Already simplicial: every image vertex is a target vertex and every
  // simplex spans a target simplex.
  auto lv = vertex_index(*l);
  std::vector<int> vmap(kf->num_vertices(), -1);
  bool simplicial = true;
  for (std::size_t v = 0; v < kf->num_vertices(); ++v) {
    auto it = lv.find(f.images[v]);
    if (it != lv.end()) vmap[v] = it->second;
  }
  for (int s : closed.ids()) {
    std::vector<int> img;
    for (int v : kf->simplex(s)) img.push_back(vmap[v]);
    if (std::count(img.begin(), img.end(), -1) || !span(*l, img)) {
      simplicial = false;
      break;
    }
  }
  if (simplicial) {
    sf.source = f.refinement;
    sf.target = Refinement::identity(l);
    sf.vertex_map = std::move(vmap);
  } else {
    // Cut the target along the affine hulls and facet hyperplanes of every
    // nondegenerate image face, then pull the cut target back.
    std::vector<AffineForm> hs;
    for (int s : closed.ids()) {
      std::vector<QPoint> pts;
      for (int v : kf->simplex(s)) pts.push_back(f.images[v]);
      if (linalg::affine_rank(pts) != kf->dim(s)) continue;
      SimplexFrame fr(GeomSimplex{pts});
      hs.insert(hs.end(), fr.equations.begin(), fr.equations.end());
      hs.insert(hs.end(), fr.bary.begin(), fr.bary.end());
    }
    sf.target = refine_by_hyperplanes(l, std::move(hs));
    auto pb = pullback_refinement(f.pieces(), sf.target.fine, &closed, budget);
    sf.source = f.refinement.then(pb.refinement);
    auto rv = vertex_index(*sf.target.fine);
    sf.vertex_map.assign(sf.source.fine->num_vertices(), -1);
    for (std::size_t v = 0; v < pb.images.size(); ++v) {
      auto it = rv.find(pb.images[v]);
      if (it == rv.end())
        throw ContractError("map '" + f.name + "': refinement failed to make the map simplicial at " +
                            pb.images[v].str());
      sf.vertex_map[v] = it->second;
    }
  }
  sf.domain = sf.source.transport(f.domain);
  sf.codomain = sf.target.transport(f.target);
  for (int s : sf.domain.ids()) {
    int t = sf.image_of(s);
    if (!sf.codomain.contains(t))
      throw ContractError("map '" + f.name + "' sends a point of " + sf.source.fine->barycenter(s).str() +
                          " outside its target set");
  }
  return sf;
}

InjectivityVerdict verify_injective(const SimplicialForm& sf) {
  const auto& k = *sf.source.fine;
  InjectivityVerdict out;
  std::map<int, int> seen;  // image simplex -> domain simplex
  auto cells = sf.domain.ids();
  std::stable_sort(cells.begin(), cells.end(), [&](int a, int b) { return k.dim(a) > k.dim(b); });
  for (int s : cells) {
    const auto& verts = k.simplex(s);
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        if (sf.vertex_map[verts[i]] != sf.vertex_map[verts[j]]) continue;
        // Two interior points differing along the collapsed edge.
        QPoint b = k.barycenter(s);
        Rational t = make_rational(1, 2 * static_cast<long>(verts.size()));
        QPoint p = b, q = b;
        for (std::size_t c = 0; c < b.dim(); ++c) {
          Rational delta = (k.vertex(verts[i]).coords[c] - k.vertex(verts[j]).coords[c]) * t;
          p.coords[c] += delta;
          q.coords[c] -= delta;
        }
        out.injective = false;
        out.reason = "simplex " + std::to_string(s) + " collapses";
        out.witness_a = p;
        out.witness_b = q;
        return out;
      }
    auto [it, fresh] = seen.emplace(sf.image_of(s), s);
    if (!fresh) {
      out.injective = false;
      out.reason = "simplices " + std::to_string(it->second) + " and " + std::to_string(s) + " have the same image";
      out.witness_a = k.barycenter(it->second);
      out.witness_b = k.barycenter(s);
      return out;
    }
  }
  return out;
}

InjectivityVerdict verify_injective(const PLMap& f, std::size_t budget) {
  return verify_injective(simplicial_form(f, budget));
}

ImageResult image(const PLMap& f, std::size_t budget) {
  auto sf = simplicial_form(f, budget);
  return {sf.target, sf.image(sf.domain)};
}

ImageResult image_of_set(const PLMap& f, const CellSet& a, std::size_t budget) {
  if (!a.subset_of(f.domain)) throw ContractError("image: set is not inside the domain of '" + f.name + "'");
  auto sf = simplicial_form(f, budget);
  return {sf.target, sf.image(sf.source.transport(a))};
}

PreimageResult preimage(const PLMap& f, const CellSet& b, std::size_t budget) {
  if (b.ambient() != f.target_complex()) throw ContractError("preimage: set is not on the target complex");
  auto sf = simplicial_form(f, budget);
  return {sf.source, sf.preimage(sf.target.transport(b))};
}

PLMap compose(const PLMap& g, const PLMap& f, std::size_t budget) {
  if (f.target_complex() != g.source_complex()) throw ContractError("compose: complexes do not match");
  if (!f.target.subset_of(g.domain)) throw ContractError("compose: target of '" + f.name + "' is not in the domain of '" + g.name + "'");
  CellSet closed = f.refinement.transport(f.domain).closure();
  auto pb = pullback_refinement(f.pieces(), g.refinement.fine, &closed, budget);
  auto gp = g.pieces();
  PLMap out{g.name + "∘" + f.name, f.domain, g.target, f.refinement.then(pb.refinement), {}};
  for (const auto& p : pb.images) out.images.push_back(gp(p));
  return out;
}

PLMap iterate(const PLMap& f, int k, std::size_t budget) {
  require_self_map(f);
  if (k < 0) throw ContractError("iterate: negative exponent");
  if (k == 0) return PLMap::identity(f.domain);
  PLMap acc = f;
  for (int i = 1; i < k; ++i) acc = compose(f, acc, budget);
  acc.name = f.name + "^" + std::to_string(k);
  return acc;
}

MapTransport transport_of(const PLMap& f, std::size_t budget) {
  auto sf = std::make_shared<SimplicialForm>(simplicial_form(f, budget));
  MapTransport t;
  t.name = f.name;
  t.injective = verify_injective(*sf).injective;
  auto dom = f.domain;
  t.image = [sf, dom](const CellSet& a) -> std::optional<CellSet> {
    if (a.ambient() != dom.ambient()) return std::nullopt;
    return sf->target.coarsen(sf->image(sf->source.transport(a & dom)));
  };
  t.preimage = [sf](const CellSet& b) -> std::optional<CellSet> {
    if (b.ambient() != sf->target.coarse) return std::nullopt;
    return sf->source.coarsen(sf->preimage(sf->target.transport(b)));
  };
  return t;
}

namespace {

BorelReport analyse_chain(const CellSet& x, const std::vector<CellSet>& ys) {
  BorelReport r;
  r.x = x;
  r.d = ys.empty() ? -1 : ys.front().dimension();
  CellSet prev(x.ambient());
  std::vector<CellSet> pieces;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    BorelStep st;
    st.k = static_cast<int>(i) + 1;
    st.y = ys[i];
    if (!prev.subset_of(st.y)) r.increasing = false;
    pieces.push_back(st.y - prev);
    prev = st.y;
    st.closed_in_x = st.y.is_closed_in(x);
    st.locally_closed = st.y.is_locally_closed();
    if (st.y.empty()) {
      st.euler_codim1 = true;
    } else if (st.locally_closed) {
      st.euler_codim1 = euler_report(st.y).euler_in_codim1;
    }
    if (!st.euler_codim1 && !r.first_codim1_failure) r.first_codim1_failure = st.k;
    if (st.locally_closed && r.d >= 0 && !st.y.empty()) {
      auto c = bm_chain_complex(st.y);
      st.bm_rank = homology(c).betti_at(r.d);
      std::vector<Bits> cycles;
      if (r.d <= c.top_degree()) {
        std::map<int, std::size_t> index;
        for (std::size_t j = 0; j < c.size(r.d); ++j) index[c.generator(r.d, j).simplex] = j;
        for (const auto& p : pieces) {
          Bits chain = c.zero(r.d);
          for (int s : p.ids())
            if (x.ambient()->dim(s) == r.d) chain.set(index.at(s));
          bool cyc = chain.any() && is_cycle(c, r.d, chain);
          st.piece_is_cycle.push_back(cyc);
          if (cyc) cycles.push_back(chain);
        }
        st.independence_rank = class_rank(c, r.d, cycles);
      } else {
        st.piece_is_cycle.assign(pieces.size(), false);
      }
    } else {
      st.piece_is_cycle.assign(pieces.size(), false);
    }
    r.steps.push_back(std::move(st));
  }
  return r;
}

}  // namespace

BorelReport borel_analysis(const PLMap& f, int max_k, std::size_t budget) {
  require_self_map(f);
  if (max_k < 1) throw ContractError("borel: need at least one iteration");
  // Images of f^k on their own target refinements, then one overlay of all.
  std::vector<ImageResult> imgs;
  for (int k = 1; k <= max_k; ++k) {
    auto img = image(iterate(f, k, budget), budget);
    require_locally_closed_image(img.image, f.name + "^" + std::to_string(k));
    imgs.push_back(std::move(img));
  }
  std::vector<Refinement> to_common{Refinement::identity(imgs[0].target.fine)};
  ComplexPtr common = imgs[0].target.fine;
  for (std::size_t k = 1; k < imgs.size(); ++k) {
    auto ov = overlay(common, imgs[k].target.fine);
    for (auto& r : to_common) r = r.then(ov.to_k);
    to_common.push_back(ov.to_l);
    common = ov.complex;
    if (common->size() > budget) throw ContractError("borel: refinement budget exceeded");
  }
  CellSet x = imgs[0].target.then(to_common[0]).transport(f.domain);
  std::vector<CellSet> ys;
  for (std::size_t k = 0; k < imgs.size(); ++k) ys.push_back(x - to_common[k].transport(imgs[k].image));
  return analyse_chain(x, ys);
}

BorelReport borel_chain_analysis(const CellSet& x, const std::vector<CellSet>& ys) {
  for (const auto& y : ys)
    if (!y.subset_of(x)) throw ContractError("borel chain: a set of the chain is not inside the space");
  return analyse_chain(x, ys);
}

SingularSets singular_sets(const CellSet& x) {
  if (!x.is_locally_closed()) throw ContractError("singular sets: set is not locally closed");
  SingularSets out{CellSet(x.ambient()), CellSet(x.ambient()), CellSet(x.ambient()), false};
  const int n = x.dimension();
  auto sd = barycentric_subdivide(x.ambient());
  CellSet x2 = sd.transport(x);
  Bits s(x.ambient()->size()), a(x.ambient()->size());
  for (int c : x.ids()) {
    if (dim_at(x, c) < n) a.set(c);
    Link lk = link_of(c, x2);
    const auto& l = lk.set;
    bool manifold = false;
    if (n == 0) {
      manifold = l.empty();
    } else if (n == 1) {
      manifold = l.count() == 2 && l.dimension() == 0;
    } else if (n == 2) {
      manifold = !l.empty() && l.is_closed() && pure_part(l, 1) == l && components(l).size() == 1;
      for (int v : l.ids()) {
        if (!manifold) break;
        if (lk.complex->dim(v) != 0) continue;
        int degree = 0;
        for (int e : lk.complex->cofacets(v)) degree += l.contains(e) ? 1 : 0;
        manifold = degree == 2;
      }
    } else {
      out.proxy = true;
      auto h = local_homology(x2, c);
      manifold = h.betti_at(n) == 1;
      for (int d = 0; d < n; ++d) manifold = manifold && h.betti_at(d) == 0;
    }
    if (!manifold) s.set(c);
  }
  out.s = CellSet(x.ambient(), s);
  out.a = CellSet(x.ambient(), a);
  out.sigma = out.s | out.a;
  return out;
}

TheoremLab theorem_lab(const PLMap& f, const Family* fam, std::size_t budget) {
  require_self_map(f);
  const CellSet& x = f.domain;
  TheoremLab lab;
  auto sf = simplicial_form(f, budget);
  lab.injectivity = verify_injective(sf);
  lab.injective = lab.injectivity.injective;
  auto rep = euler_report(x);
  lab.euler = rep.euler;
  lab.pure = pure_part(x, x.dimension()) == x;
  CellSet img = sf.image(sf.domain);
  lab.surjective = img == sf.target.transport(x);
  lab.open_onto_image = lab.injective && open_onto_image(sf);
  lab.homeomorphism = lab.injective && lab.surjective && lab.open_onto_image;
  lab.sing = singular_sets(x);
  auto inside = [&](const CellSet& b) { return sf.image(sf.source.transport(b)).subset_of(sf.target.transport(b)); };
  lab.s_invariant = inside(lab.sing.s);
  if (lab.sing.proxy) lab.notes.push_back("PROXY: manifold points in dimension >= 3 detected by local homology");
  if (fam) {
    if (fam->ambient() != x.ambient()) throw ContractError("theorem lab: family lives on another complex");
    lab.cc_sigma = c_closure(lab.sing.sigma, *fam);
    lab.cc_sigma_invariant = inside(*lab.cc_sigma);
  }
  if (!lab.injective) lab.notes.push_back("not injective: " + lab.injectivity.reason);
  if (!lab.euler) lab.notes.push_back("not Euler: the surjectivity theorem does not apply");
  if (!lab.pure) lab.notes.push_back("not of pure dimension");
  if (lab.euler && lab.pure && lab.injective && !lab.surjective) {
    // Y_k lies in any category holding x and f; one that is not Euler in
    // codimension one means no constructible category contains f.
    auto borel = borel_analysis(f, x.dimension() + 1, budget);
    lab.hypothesis_failure = borel.first_codim1_failure;
    if (lab.hypothesis_failure)
      lab.notes.push_back("Y_" + std::to_string(*lab.hypothesis_failure) +
                          " is not Euler in codimension one: f is not a morphism of a constructible category");
    lab.alarm = !lab.hypothesis_failure;
  }
  if (lab.alarm) lab.notes.push_back("ALARM: injective self-map of an Euler set that is not surjective");
  if (lab.injective && !lab.surjective && !lab.euler) lab.notes.push_back("injective and not surjective, consistent with the failed hypothesis");
  return lab;
}

namespace {

std::vector<Rational> diff(const QPoint& a, const QPoint& b) {
  std::vector<Rational> d(a.dim());
  for (std::size_t c = 0; c < a.dim(); ++c) d[c] = a[c] - b[c];
  return d;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t c = 0; c < a.size(); ++c) s += a[c] * b[c];
  return s;
}

// Two simplices sharing the facet with images `shared`, with opposite vertex
// images a and b: true when both images lie in one flat and on the same side
// of the shared facet there, so their interiors overlap.
bool folds(const std::vector<QPoint>& shared, const QPoint& a, const QPoint& b) {
  std::vector<QPoint> all = shared;
  all.push_back(a);
  all.push_back(b);
  if (linalg::affine_rank(all) != static_cast<int>(shared.size())) return false;
  // Gram-Schmidt over the facet directions, then compare the normal parts.
  std::vector<std::vector<Rational>> basis;
  for (std::size_t i = 1; i < shared.size(); ++i) {
    auto u = diff(shared[i], shared[0]);
    for (const auto& e : basis) {
      Rational t = dot(u, e) / dot(e, e);
      for (std::size_t c = 0; c < u.size(); ++c) u[c] -= t * e[c];
    }
    basis.push_back(std::move(u));
  }
  auto normal = [&](const QPoint& p) {
    auto w = diff(p, shared[0]);
    for (const auto& e : basis) {
      Rational t = dot(w, e) / dot(e, e);
      for (std::size_t c = 0; c < w.size(); ++c) w[c] -= t * e[c];
    }
    return w;
  };
  return dot(normal(a), normal(b)) > 0;
}

}  // namespace

SearchReport search_selfmaps(const CellSet& x, int depth, std::size_t budget) {
  constexpr std::size_t kMaxVertices = 40;
  if (depth < 0) throw ContractError("search: negative depth");
  SearchReport rep;
  rep.depth = depth;
  const auto& k = x.ambient();
  const CellSet closed = x.closure();
  std::vector<Refinement> subs;
  for (int i = 0; i <= depth; ++i) subs.push_back(iterated_subdivision(k, i));
  if (subs.back().fine->num_vertices() > kMaxVertices)
    throw ContractError("search: " + std::to_string(subs.back().fine->num_vertices()) + " vertices; the bound is " +
                        std::to_string(kMaxVertices));
  auto inside = [&](const QPoint& p, const CellSet& s) {
    auto loc = locate(p, *k);
    return !loc.outside() && s.contains(loc.simplex);
  };
  // A PL map is identified by its values at the vertices of the finest
  // subdivision, so the same map found for several (i, j) counts once.
  std::set<std::vector<QPoint>> seen;
  std::vector<QPoint> probes;
  {
    const auto& fine = subs.back();
    for (int s : fine.transport(closed).ids())
      if (fine.fine->dim(s) == 0) probes.push_back(fine.fine->vertex(fine.fine->simplex(s)[0]));
  }

  for (int i = 0; i <= depth && !rep.exhausted; ++i) {
    const auto& src = *subs[i].fine;
    CellSet xs = subs[i].transport(x);
    CellSet cs = xs.closure();
    // Breadth-first vertex order over the closed domain so each simplex is
    // checked as soon as its last vertex is assigned.
    std::vector<int> order;
    std::vector<int> pos(src.num_vertices(), -1);
    for (int s0 : cs.ids()) {
      if (src.dim(s0) != 0) continue;
      int start = src.simplex(s0)[0];
      if (pos[start] >= 0) continue;
      std::vector<int> queue{start};
      pos[start] = 0;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        int v = queue[q];
        order.push_back(v);
        for (int e : src.vertex_star(v)) {
          if (!cs.contains(e)) continue;
          for (int w : src.simplex(e))
            if (pos[w] < 0) {
              pos[w] = 0;
              queue.push_back(w);
            }
        }
      }
    }
    for (std::size_t n = 0; n < order.size(); ++n) pos[order[n]] = static_cast<int>(n);
    std::vector<std::vector<int>> closes(src.num_vertices());
    for (int s : cs.ids()) {
      int last = 0;
      for (int v : src.simplex(s)) last = std::max(last, pos[v]);
      closes[order[last]].push_back(s);
    }

    for (int j = i; j <= depth && !rep.exhausted; ++j) {
      std::vector<QPoint> targets;
      for (const auto& p : subs[j].fine->vertices())
        if (inside(p, closed)) targets.push_back(p);
      std::vector<QPoint> images = src.vertices();
      // The image of a simplex's barycenter is the centroid of its vertex
      // images; it has to land in x (or the closure of x for frontier cells).
      auto ok = [&](int v) {
        // Points of x must keep distinct images.
        if (xs.contains(src.vertex_simplex(v)))
          for (std::size_t n = 0; n < static_cast<std::size_t>(pos[v]); ++n) {
            int w = order[n];
            if (xs.contains(src.vertex_simplex(w)) && images[w] == images[v]) return false;
          }
        for (int s : closes[v]) {
          std::vector<QPoint> pts;
          for (int w : src.simplex(s)) pts.push_back(images[w]);
          if (!inside(centroid(pts), xs.contains(s) ? x : closed)) return false;
          if (!xs.contains(s)) continue;
          // A collapsed cell of x rules out injectivity.
          if (linalg::affine_rank(pts) != src.dim(s)) return false;
          // So does folding s onto an assigned neighbour of x across a facet.
          for (int e : src.facets(s))
            for (int t : src.cofacets(e)) {
              if (t == s || !xs.contains(t)) continue;
              bool assigned = true;
              for (int w : src.simplex(t)) assigned = assigned && pos[w] <= pos[v];
              if (!assigned) continue;
              std::vector<QPoint> shared;
              for (int w : src.simplex(e)) shared.push_back(images[w]);
              auto opposite = [&](int c) {
                for (int w : src.simplex(c))
                  if (!std::binary_search(src.simplex(e).begin(), src.simplex(e).end(), w)) return images[w];
                return images[src.simplex(c)[0]];
              };
              if (folds(shared, opposite(s), opposite(t))) return false;
            }
        }
        return true;
      };
      std::function<void(std::size_t)> dfs = [&](std::size_t n) {
        if (n == order.size()) {
          PLMap f{"search" + std::to_string(i) + "_" + std::to_string(j), x, x, subs[i], images};
          std::vector<QPoint> key;
          auto pieces = f.pieces();
          for (const auto& p : probes) key.push_back(pieces(p));
          if (!seen.insert(key).second) return;
          SimplicialForm sf;
          try {
            sf = simplicial_form(f);
          } catch (const ContractError&) {
            return;  // leaves x or its ambient
          }
          ++rep.maps;
          if (!verify_injective(sf).injective) return;
          ++rep.injective;
          if (sf.image(sf.domain) == sf.codomain) {
            ++rep.surjective;
            if (open_onto_image(sf)) ++rep.homeomorphisms;
          } else if (rep.injective_non_surjective.size() < 16) {
            rep.injective_non_surjective.push_back(f);
          }
          if (rep.injective_maps.size() < 64) rep.injective_maps.push_back(std::move(f));
          return;
        }
        int v = order[n];
        for (const auto& t : targets) {
          if (++rep.explored > budget) {
            rep.exhausted = true;
            return;
          }
          images[v] = t;
          if (ok(v)) dfs(n + 1);
          if (rep.exhausted) return;
        }
        images[v] = src.vertex(v);
      };
      dfs(0);
    }
  }
  return rep;
}

}  // namespace eulerlab
