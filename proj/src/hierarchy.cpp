#include "eulerlab/hierarchy.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "eulerlab/euler.hpp"
#include "eulerlab/homology.hpp"

namespace eulerlab {

namespace {

std::vector<int> trimmed(std::vector<int> b) {
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

std::string list(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

void require_base(const CellSet& a, int v, const char* what) {
  const auto& k = a.ambient();
  if (!k) throw ContractError(std::string(what) + ": empty germ");
  if (v < 0 || static_cast<std::size_t>(v) >= k->num_vertices())
    throw ContractError(std::string(what) + ": base " + std::to_string(v) + " is not a vertex");
  if (!a.contains(k->vertex_simplex(v)))
    throw ContractError(std::string(what) + ": base " + std::to_string(v) + " is not in the set");
}

int germ_dim(const Germ& g) { return dim_at(g.set, g.ambient()->vertex_simplex(g.base)); }

// Domain simplices whose last vertex in `order` is order[i].
std::vector<std::vector<int>> closing_simplices(const GeomComplex& k, const std::vector<int>& order) {
  std::vector<int> pos(k.num_vertices());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> out(order.size());
  for (std::size_t s = 0; s < k.size(); ++s) {
    int last = 0;
    for (int v : k.simplex(s)) last = std::max(last, pos[v]);
    out[last].push_back(static_cast<int>(s));
  }
  return out;
}

std::vector<int> bfs_order(const GeomComplex& k, int root) {
  std::vector<std::vector<int>> adj(k.num_vertices());
  for (std::size_t s = 0; s < k.size(); ++s)
    if (k.dim(s) == 1) {
      adj[k.simplex(s)[0]].push_back(k.simplex(s)[1]);
      adj[k.simplex(s)[1]].push_back(k.simplex(s)[0]);
    }
  std::vector<int> order{root};
  std::vector<bool> seen(k.num_vertices(), false);
  seen[root] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : adj[order[i]])
      if (!seen[w]) {
        seen[w] = true;
        order.push_back(w);
      }
  for (std::size_t v = 0; v < k.num_vertices(); ++v)
    if (!seen[v]) order.push_back(static_cast<int>(v));
  return order;
}

// Image simplex of domain simplex s in the target cone, checked against the
// germ sets. Returns -1 when the images do not span a target simplex.
int image_simplex(const GermCone& dom, const GermCone& tgt, const std::vector<int>& img, int s) {
  std::vector<int> verts;
  for (int v : dom.complex->simplex(s)) verts.push_back(img[v]);
  std::sort(verts.begin(), verts.end());
  auto id = tgt.complex->find(verts);
  if (!id) return -1;
  if (dom.set.contains(s) && !tgt.set.contains(*id)) return -1;
  return *id;
}

class EmbeddingSearch {
 public:
  EmbeddingSearch(const GermCone& dom, const GermCone& tgt, std::size_t budget)
      : dom_(dom), tgt_(tgt), budget_(budget) {
    order_ = bfs_order(*dom.complex, dom.apex);
    closing_ = closing_simplices(*dom.complex, order_);
    img_.assign(dom.complex->num_vertices(), -1);
    used_.assign(tgt.complex->num_vertices(), false);
  }

  bool run() { return step(0); }
  const std::vector<int>& images() const { return img_; }
  std::size_t explored() const { return explored_; }
  bool budget_hit() const { return hit_; }

 private:
  bool step(std::size_t i) {
    if (i == order_.size()) return true;
    int v = order_[i];
    for (int c = 0; c < static_cast<int>(used_.size()); ++c) {
      if (used_[c] || (i == 0) != (c == tgt_.apex)) continue;
      if (++explored_ > budget_) {
        hit_ = true;
        return false;
      }
      img_[v] = c;
      bool ok = true;
      for (int s : closing_[i])
        if (image_simplex(dom_, tgt_, img_, s) < 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used_[c] = true;
      if (step(i + 1)) return true;
      used_[c] = false;
      if (hit_) return false;
    }
    img_[v] = -1;
    return false;
  }

  const GermCone& dom_;
  const GermCone& tgt_;
  std::size_t budget_;
  std::vector<int> order_;
  std::vector<std::vector<int>> closing_;
  std::vector<int> img_;
  std::vector<bool> used_;
  std::size_t explored_ = 0;
  bool hit_ = false;
};

}  // namespace

int LocalTypeInvariant::top_degree() const { return static_cast<int>(local_homology.size()) - 1; }

std::string LocalTypeInvariant::str() const {
  return "local " + list(local_homology) + " link " + list(link_homology) + " components " +
         std::to_string(link_components) + " chi " + std::to_string(link_chi);
}

LocalTypeInvariant local_type(const Germ& g) { return local_type(g.set, g.base); }

LocalTypeInvariant local_type(const CellSet& a, int vertex) {
  require_base(a, vertex, "local_type");
  LocalTypeInvariant t;
  t.local_homology = trimmed(local_homology(a, vertex).betti);
  auto lk = link_of(vertex, a);
  if (!lk.set.empty()) {
    t.link_homology = trimmed(model_homology(lk.set).betti);
    t.link_components = static_cast<int>(components(lk.set).size());
    t.link_chi = chi(lk.set);
  }
  return t;
}

GermCone germ_cone(const Germ& g, int depth) {
  require_base(g.set, g.base, "germ_cone");
  if (depth < 0) throw ContractError("germ_cone: negative depth");
  const auto& k = g.ambient();
  CellSet star = g.set & open_star(k, k->vertex_simplex(g.base));
  auto sub = subcomplex(star.closure());
  auto r = iterated_subdivision(sub.complex, depth);
  GermCone out;
  out.complex = r.fine;
  out.set = r.transport(sub.restrict(star));
  const auto& base = k->vertex(g.base);
  for (std::size_t v = 0; v < r.fine->num_vertices(); ++v)
    if (r.fine->vertex(v) == base) out.apex = static_cast<int>(v);
  if (out.apex < 0) throw ContractError("germ_cone: base vertex lost in subdivision");
  return out;
}

std::string PrecedenceVerdict::kind_name() const {
  switch (kind) {
    case Kind::Found:
      return "FOUND";
    case Kind::Obstructed:
      return "OBSTRUCTED";
    default:
      return "NOT_FOUND_UP_TO";
  }
}

PrecedenceVerdict precedes(const Germ& gy, const Germ& gx, int depth, std::size_t budget) {
  if (depth < 0) throw ContractError("precedes: negative depth");
  require_base(gy.set, gy.base, "precedes");
  require_base(gx.set, gx.base, "precedes");
  PrecedenceVerdict v;
  int dy = germ_dim(gy), dx = germ_dim(gx);
  if (dy > dx) {
    v.kind = PrecedenceVerdict::Kind::Obstructed;
    v.obstruction = "germ dimension " + std::to_string(dy) + " > " + std::to_string(dx);
    return v;
  }
  if (dy == dx && gy.set.is_locally_closed() && gx.set.is_locally_closed()) {
    // Top-degree local homology of a closed subset injects.
    int hy = local_homology(gy.set, gy.base).betti_at(dy);
    int hx = local_homology(gx.set, gx.base).betti_at(dx);
    if (hy > hx) {
      v.kind = PrecedenceVerdict::Kind::Obstructed;
      v.obstruction = "dim H_" + std::to_string(dy) + " of the local homology " + std::to_string(hy) + " > " +
                      std::to_string(hx);
      return v;
    }
  }
  GermCone tgt = germ_cone(gx, 0);
  for (int d = 0; d <= depth; ++d) {
    v.depth = d;
    GermCone dom = germ_cone(gy, d);
    if (dom.complex->num_vertices() > tgt.complex->num_vertices()) continue;
    EmbeddingSearch search(dom, tgt, budget - std::min(budget, v.explored));
    bool ok = search.run();
    v.explored += search.explored();
    if (ok) {
      v.kind = PrecedenceVerdict::Kind::Found;
      v.vertex_map = search.images();
      v.domain = std::move(dom);
      return v;
    }
    if (search.budget_hit()) {
      v.budget_hit = true;
      break;
    }
  }
  v.kind = PrecedenceVerdict::Kind::NotFoundUpTo;
  return v;
}

std::string verify_embedding(const PrecedenceVerdict& v, const Germ& gy, const Germ& gx) {
  if (!v.found()) return "verdict is not FOUND";
  GermCone dom = germ_cone(gy, v.depth);
  GermCone tgt = germ_cone(gx, 0);
  if (dom.complex->num_vertices() != v.vertex_map.size()) return "vertex map has the wrong size";
  if (v.vertex_map[dom.apex] != tgt.apex) return "apex does not go to the base";
  std::vector<bool> used(tgt.complex->num_vertices(), false);
  for (int c : v.vertex_map) {
    if (c < 0 || static_cast<std::size_t>(c) >= used.size()) return "vertex image out of range";
    if (used[c]) return "vertex map is not injective";
    used[c] = true;
  }
  for (std::size_t s = 0; s < dom.complex->size(); ++s)
    if (image_simplex(dom, tgt, v.vertex_map, static_cast<int>(s)) < 0)
      return "simplex " + std::to_string(s) + " does not map onto a target simplex of the right kind";
  return "";
}

std::optional<PrecedenceVerdict> compose_embeddings(const PrecedenceVerdict& yx, const PrecedenceVerdict& xz) {
  if (!yx.found() || !xz.found() || xz.depth != 0) return std::nullopt;
  PrecedenceVerdict out = yx;
  for (int& c : out.vertex_map) c = xz.vertex_map[c];
  return out;
}

AntisymmetryReport check_antisymmetry(const Germ& gy, const Germ& gx, int depth, std::size_t budget) {
  AntisymmetryReport r;
  r.forward = precedes(gy, gx, depth, budget);
  r.backward = precedes(gx, gy, depth, budget);
  r.both_found = r.forward.found() && r.backward.found();
  if (!r.both_found) {
    r.notes.push_back("one direction is not FOUND; antisymmetry is vacuous");
    return r;
  }
  r.invariants_equal = local_type(gy) == local_type(gx);
  if (!*r.invariants_equal) {
    r.alarm = true;
    r.notes.push_back("ALARM: mutual embeddings between germs of different local type");
  }
  if (auto c = compose_embeddings(r.forward, r.backward); c && r.forward.depth == 0) {
    // A vertex-injective simplicial self-map of a finite cone is a bijection
    // on vertices; it is a local homeomorphism iff it permutes the germ set.
    const auto& dom = c->domain;
    bool ok = true;
    for (int s : dom.set.ids()) {
      int t = image_simplex(dom, dom, c->vertex_map, s);
      ok = ok && t >= 0 && dom.set.contains(t);
    }
    r.composite_local_homeomorphism = ok;
    if (!ok) {
      r.alarm = true;
      r.notes.push_back("ALARM: the composite self-embedding is not a local homeomorphism at the base");
    }
  } else {
    r.notes.push_back("an embedding needed subdivision; the composite was not checked");
  }
  r.notes.push_back("local type equality is a PL invariant proxy for homeomorphism");
  return r;
}

Stratification stratify(const CellSet& x) {
  if (!x.is_locally_closed()) throw ContractError("stratify: set is not locally closed");
  const auto& k = x.ambient();
  Stratification st;
  st.x = x;
  st.stratum_of.assign(k->size(), -1);
  auto sd = barycentric_subdivide(k);
  CellSet xs = sd.transport(x);
  std::map<LocalTypeInvariant, std::vector<int>> classes;
  for (int c : x.ids()) classes[local_type(xs, c)].push_back(c);
  for (auto& [type, cells] : classes) {
    Stratum t;
    t.type = type;
    t.cells = CellSet::from_ids(k, cells);
    t.dimension = t.cells.dimension();
    t.pure = pure_part(t.cells, t.dimension) == t.cells;
    t.locally_closed = t.cells.is_locally_closed();
    if (t.locally_closed) {
      CellSet ts = sd.transport(t.cells);
      t.homology_manifold = true;
      for (int c : cells) {
        auto h = local_homology(ts, c);
        for (int d = 0; d <= std::max(t.dimension, h.betti.empty() ? 0 : static_cast<int>(h.betti.size()) - 1); ++d)
          t.homology_manifold = t.homology_manifold && h.betti_at(d) == (d == t.dimension ? 1 : 0);
        if (!t.homology_manifold) break;
      }
    }
    st.all_homology_manifolds = st.all_homology_manifolds && t.pure && t.homology_manifold;
    for (int c : cells) st.stratum_of[c] = static_cast<int>(st.strata.size());
    st.strata.push_back(std::move(t));
  }
  return st;
}

StrataMapCheck check_strata_preserved(const Stratification& st, const PLMap& f, std::size_t budget) {
  if (f.domain != st.x || f.target != st.x) throw ContractError("strata check: map is not a self-map of the set");
  auto sf = simplicial_form(f, budget);
  StrataMapCheck r;
  for (std::size_t i = 0; i < st.strata.size(); ++i) {
    CellSet img = sf.image(sf.source.transport(st.strata[i].cells));
    CellSet own = sf.target.transport(st.strata[i].cells);
    bool into = img.subset_of(own);
    bool onto = into && img == own;
    if ((!into || !onto) && !r.first_failure) r.first_failure = static_cast<int>(i);
    r.into = r.into && into;
    r.onto = r.onto && onto;
  }
  return r;
}

FiltrationReport build_filtration(const CellSet& x, const PLMap& f, const Family& fam, std::size_t budget) {
  if (f.domain != x || f.target != x) throw ContractError("filtration: map is not a self-map of the set");
  if (fam.ambient() != x.ambient()) throw ContractError("filtration: family lives on another complex");
  if (!x.subset_of(fam.universe())) throw ContractError("filtration: set is not inside the family's universe");
  auto sf = simplicial_form(f, budget);
  if (!verify_injective(sf).injective) throw ContractError("filtration: map is not injective");

  FiltrationReport r;
  auto stable = [&](const CellSet& a) {
    return sf.image(sf.source.transport(a)).subset_of(sf.target.transport(a));
  };
  auto level = [&](int index, const CellSet& a) {
    FiltrationLevel l;
    l.index = index;
    l.set = a;
    l.closed = a.is_closed_in(x);
    l.member = fam.contains(a);
    l.f_stable = stable(a);
    return l;
  };
  CellSet cur = x;
  int k = x.dimension();
  r.levels.push_back(level(k, cur));
  bool ok = true;
  while (k >= 0) {
    CellSet sigma = cur;
    if (cur.dimension() == k) {
      auto sing = singular_sets(cur);
      r.proxy = r.proxy || sing.proxy;
      sigma = sing.sigma;
    }
    CellSet next = c_closure(sigma, fam);
    if (!next.subset_of(cur) || (!next.empty() && next.dimension() >= k)) {
      r.failure = "the family cannot separate the singular set of X^" + std::to_string(k) +
                  ": its closure is not smaller";
      r.offending = next;
      ok = false;
      break;
    }
    CellSet diff = cur - next;
    auto& prev = r.levels.back();
    prev.difference_is_manifold =
        diff.empty() || (diff.dimension() == k && pure_part(diff, k) == diff && singular_sets(diff).sigma.empty());
    r.levels.push_back(level(k - 1, next));
    cur = next;
    --k;
  }
  if (ok) r.levels.back().difference_is_manifold = true;  // X^-1 = ∅
  r.certified = ok;
  for (const auto& l : r.levels) r.certified = r.certified && l.closed && l.member && l.f_stable && l.difference_is_manifold;
  if (ok && !r.certified) r.failure = "some level is not closed, not a member, not f-stable or not a manifold difference";
  return r;
}

}  // namespace eulerlab
