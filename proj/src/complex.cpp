#include "eulerlab/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace eulerlab {

namespace {

bool canonical_less(const std::vector<int>& a, const std::vector<int>& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

void add_faces(const std::vector<int>& s, std::set<std::vector<int>>& out) {
  if (s.empty() || !out.insert(s).second) return;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<int> f = s;
    f.erase(f.begin() + static_cast<long>(i));
    add_faces(f, out);
  }
}

}  // namespace

ComplexPtr GeomComplex::create(std::vector<QPoint> vertices, std::vector<std::vector<int>> simplices,
                               bool close_faces) {
  std::shared_ptr<GeomComplex> k(new GeomComplex());
  k->ambient_dim_ = vertices.empty() ? 0 : vertices[0].dim();
  for (const auto& v : vertices)
    if (v.dim() != k->ambient_dim_) throw ContractError("vertices of mixed dimension");
  const int nv = static_cast<int>(vertices.size());
  std::set<std::vector<int>> all;
  for (auto& s : simplices) {
    std::sort(s.begin(), s.end());
    if (s.empty()) throw ContractError("empty simplex");
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw ContractError("repeated vertex in simplex");
    for (int v : s)
      if (v < 0 || v >= nv) throw ContractError("vertex id out of range: " + std::to_string(v));
    if (close_faces) add_faces(s, all);
    else all.insert(s);
  }
  if (close_faces)
    for (int v = 0; v < nv; ++v) all.insert({v});
  k->vertices_ = std::move(vertices);
  k->simplices_.assign(all.begin(), all.end());
  std::sort(k->simplices_.begin(), k->simplices_.end(), canonical_less);
  for (std::size_t i = 0; i < k->simplices_.size(); ++i)
    k->index_.emplace(k->simplices_[i], static_cast<int>(i));

  const std::size_t n = k->simplices_.size();
  k->vertex_simplex_.assign(nv, -1);
  k->facets_.resize(n);
  k->cofacets_.resize(n);
  k->vertex_star_.resize(nv);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = k->simplices_[i];
    k->dimension_ = std::max(k->dimension_, static_cast<int>(s.size()) - 1);
    if (s.size() == 1) k->vertex_simplex_[s[0]] = static_cast<int>(i);
    for (int v : s) k->vertex_star_[v].push_back(static_cast<int>(i));
    if (s.size() < 2) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      std::vector<int> f = s;
      f.erase(f.begin() + static_cast<long>(j));
      auto it = k->index_.find(f);
      if (it == k->index_.end()) throw ContractError("complex is not closed under faces");
      k->facets_[i].push_back(it->second);
      k->cofacets_[it->second].push_back(static_cast<int>(i));
    }
    std::sort(k->facets_[i].begin(), k->facets_[i].end());
  }
  for (int v = 0; v < nv; ++v)
    if (k->vertex_simplex_[v] < 0) throw ContractError("vertex " + std::to_string(v) + " missing");
  for (int m : k->maximal())
    if (!k->geom(m).is_nondegenerate()) throw ContractError("degenerate simplex");
  k->frames_.resize(n);
  return k;
}

std::optional<int> GeomComplex::find(const std::vector<int>& verts) const {
  auto it = index_.find(verts);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> GeomComplex::faces(int id) const {
  std::set<int> seen{id};
  std::vector<int> stack{id};
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int f : facets_[s])
      if (seen.insert(f).second) stack.push_back(f);
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> GeomComplex::cofaces(int id) const {
  std::set<int> seen{id};
  std::vector<int> stack{id};
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int f : cofacets_[s])
      if (seen.insert(f).second) stack.push_back(f);
  }
  return {seen.begin(), seen.end()};
}

bool GeomComplex::is_face(int sigma, int tau) const {
  const auto& a = simplices_[sigma];
  const auto& b = simplices_[tau];
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> GeomComplex::maximal() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < simplices_.size(); ++i)
    if (cofacets_[i].empty()) out.push_back(static_cast<int>(i));
  return out;
}

GeomSimplex GeomComplex::geom(int id) const {
  GeomSimplex g;
  for (int v : simplices_[id]) g.vertices.push_back(vertices_[v]);
  return g;
}

QPoint GeomComplex::barycenter(int id) const { return centroid(geom(id).vertices); }

const SimplexFrame& GeomComplex::frame(int id) const {
  std::lock_guard<std::mutex> lock(frame_mu_);
  if (!frames_[id]) frames_[id] = std::make_shared<const SimplexFrame>(geom(id));
  return *frames_[id];
}

bool GeomComplex::check_disjoint(std::string* why) const {
  auto max = maximal();
  for (std::size_t i = 0; i < max.size(); ++i) {
    for (std::size_t j = i + 1; j < max.size(); ++j) {
      const auto& a = simplices_[max[i]];
      const auto& b = simplices_[max[j]];
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      std::vector<QPoint> expect;
      for (int v : common) expect.push_back(vertices_[v]);
      std::sort(expect.begin(), expect.end());
      ConvexCell c = clip(geom(max[i]), geom(max[j]));
      if (c.vertices != expect) {
        if (why) *why = "simplices " + std::to_string(max[i]) + " and " + std::to_string(max[j]) +
                        " overlap beyond their common face";
        return false;
      }
    }
  }
  return true;
}

CellSet::CellSet(ComplexPtr k, Bits members) : k_(std::move(k)), m_(std::move(members)) {
  if (m_.size() != k_->size()) throw ContractError("member mask size does not match complex");
}

CellSet CellSet::from_ids(ComplexPtr k, const std::vector<int>& ids) {
  CellSet c(std::move(k));
  for (int i : ids) {
    if (i < 0 || static_cast<std::size_t>(i) >= c.k_->size())
      throw ContractError("simplex id out of range: " + std::to_string(i));
    c.m_.set(i);
  }
  return c;
}

CellSet CellSet::full(ComplexPtr k) {
  CellSet c(std::move(k));
  c.m_ = c.m_.complement();
  return c;
}

int CellSet::dimension() const {
  long h = m_.highest();
  return h < 0 ? -1 : k_->dim(static_cast<int>(h));
}

void CellSet::same_ambient(const CellSet& o) const {
  if (k_ != o.k_) throw ContractError("cell sets live on different ambient complexes");
}

CellSet CellSet::operator&(const CellSet& o) const {
  same_ambient(o);
  return CellSet(k_, m_ & o.m_);
}
CellSet CellSet::operator|(const CellSet& o) const {
  same_ambient(o);
  return CellSet(k_, m_ | o.m_);
}
CellSet CellSet::operator-(const CellSet& o) const {
  same_ambient(o);
  Bits r = m_;
  r.subtract(o.m_);
  return CellSet(k_, r);
}
CellSet CellSet::complement() const { return CellSet(k_, m_.complement()); }
bool CellSet::subset_of(const CellSet& o) const {
  same_ambient(o);
  return m_.is_subset_of(o.m_);
}

CellSet CellSet::closure() const {
  Bits r = m_;
  for (std::size_t i = k_->size(); i-- > 0;)
    if (r.test(i))
      for (int f : k_->facets(static_cast<int>(i))) r.set(f);
  return CellSet(k_, r);
}

CellSet CellSet::interior() const { return *this - complement().closure(); }
CellSet CellSet::frontier() const { return closure() - *this; }
bool CellSet::is_closed() const { return closure() == *this; }
bool CellSet::is_open() const { return complement().is_closed(); }
bool CellSet::is_locally_closed() const { return frontier().is_closed(); }

bool CellSet::is_closed_in(const CellSet& x) const {
  return subset_of(x) && (closure() & x) == *this;
}
bool CellSet::is_open_in(const CellSet& x) const {
  return subset_of(x) && (x - *this).is_closed_in(x);
}

std::string CellSet::str() const {
  std::string out = "{";
  bool first = true;
  m_.for_each([&](std::size_t i) {
    if (!first) out += " ";
    first = false;
    out += std::to_string(i);
  });
  return out + "}";
}

CellSet open_star(const ComplexPtr& k, int id) { return CellSet::from_ids(k, k->cofaces(id)); }

std::vector<CellSet> components(const CellSet& a) {
  const auto& k = a.ambient();
  std::vector<int> parent(k->size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto ids = a.ids();
  for (int s : ids)
    for (int f : k->faces(s))
      if (a.contains(f)) {
        int rs = root(s), rf = root(f);
        if (rs != rf) parent[std::max(rs, rf)] = std::min(rs, rf);
      }
  std::map<int, CellSet> by_root;
  for (int s : ids) {
    auto [it, _] = by_root.try_emplace(root(s), CellSet(k));
    it->second = it->second | CellSet::from_ids(k, {s});
  }
  std::vector<CellSet> out;
  for (auto& [r, c] : by_root) out.push_back(c);
  return out;
}

int dim_at(const CellSet& a, int id) {
  int d = -1;
  for (int c : a.ambient()->cofaces(id))
    if (a.contains(c)) d = std::max(d, a.ambient()->dim(c));
  return d;
}

CellSet pure_part(const CellSet& a, int d) {
  CellSet top(a.ambient());
  for (int s : a.ids())
    if (a.ambient()->dim(s) == d) top = top | CellSet::from_ids(a.ambient(), {s});
  return top.closure() & a;
}

Refinement Refinement::identity(ComplexPtr k) {
  Refinement r{k, k, {}};
  r.carrier.resize(k->size());
  std::iota(r.carrier.begin(), r.carrier.end(), 0);
  return r;
}

CellSet Refinement::transport(const CellSet& a) const {
  if (a.ambient() != coarse) throw ContractError("transport: set is not on the coarse complex");
  Bits m(fine->size());
  for (std::size_t i = 0; i < carrier.size(); ++i)
    if (a.contains(carrier[i])) m.set(i);
  return CellSet(fine, m);
}

std::optional<CellSet> Refinement::coarsen(const CellSet& a) const {
  if (a.ambient() != fine) throw ContractError("coarsen: set is not on the fine complex");
  std::vector<int> state(coarse->size(), -1);  // -1 unseen, 0 out, 1 in
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    int in = a.contains(static_cast<int>(i)) ? 1 : 0;
    int& st = state[carrier[i]];
    if (st >= 0 && st != in) return std::nullopt;
    st = in;
  }
  Bits m(coarse->size());
  for (std::size_t c = 0; c < state.size(); ++c)
    if (state[c] == 1) m.set(c);
  return CellSet(coarse, m);
}

Refinement Refinement::then(const Refinement& next) const {
  if (next.coarse != fine) throw ContractError("refinement chain mismatch");
  Refinement r{coarse, next.fine, {}};
  for (int c : next.carrier) r.carrier.push_back(carrier[c]);
  return r;
}

Refinement barycentric_subdivide(const ComplexPtr& k) {
  std::vector<QPoint> pts;
  for (std::size_t i = 0; i < k->size(); ++i) pts.push_back(k->barycenter(static_cast<int>(i)));
  // Maximal chains: start at vertices and climb through cofacets until a
  // maximal simplex; every chain is a face of one of these.
  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  std::function<void(int)> climb = [&](int s) {
    cur.push_back(s);
    if (k->cofacets(s).empty()) chains.push_back(cur);
    for (int c : k->cofacets(s)) climb(c);
    cur.pop_back();
  };
  for (std::size_t v = 0; v < k->num_vertices(); ++v) climb(k->vertex_simplex(static_cast<int>(v)));
  auto fine = GeomComplex::create(std::move(pts), std::move(chains), true);
  Refinement r{k, fine, {}};
  for (std::size_t i = 0; i < fine->size(); ++i) r.carrier.push_back(fine->simplex(static_cast<int>(i)).back());
  return r;
}

Refinement iterated_subdivision(const ComplexPtr& k, int depth) {
  Refinement r = Refinement::identity(k);
  for (int i = 0; i < depth; ++i) r = r.then(barycentric_subdivide(r.fine));
  return r;
}

CellSet Subcomplex::restrict(const CellSet& a) const {
  Bits m(complex->size());
  for (std::size_t i = 0; i < simplex_to_ambient.size(); ++i)
    if (a.contains(simplex_to_ambient[i])) m.set(i);
  return CellSet(complex, m);
}

CellSet Subcomplex::extend(const CellSet& a) const {
  Bits m(ambient->size());
  for (int i : a.ids()) m.set(simplex_to_ambient[i]);
  return CellSet(ambient, m);
}

Subcomplex subcomplex(const CellSet& closed) {
  if (!closed.is_closed()) throw ContractError("subcomplex: set is not closed");
  const auto& k = closed.ambient();
  Subcomplex out;
  out.ambient = k;
  std::vector<int> vmap(k->num_vertices(), -1);
  std::vector<QPoint> pts;
  for (int s : closed.ids()) {
    if (k->dim(s) != 0) continue;
    int v = k->simplex(s)[0];
    vmap[v] = static_cast<int>(pts.size());
    out.vertex_to_ambient.push_back(v);
    pts.push_back(k->vertex(v));
  }
  std::vector<std::vector<int>> simp;
  for (int s : closed.ids()) {
    std::vector<int> t;
    for (int v : k->simplex(s)) t.push_back(vmap[v]);
    simp.push_back(t);
  }
  out.complex = GeomComplex::create(std::move(pts), std::move(simp), false);
  out.ambient_to_simplex.assign(k->size(), -1);
  for (std::size_t i = 0; i < out.complex->size(); ++i) {
    std::vector<int> t;
    for (int v : out.complex->simplex(static_cast<int>(i))) t.push_back(out.vertex_to_ambient[v]);
    int a = *k->find(t);
    out.simplex_to_ambient.push_back(a);
    out.ambient_to_simplex[a] = static_cast<int>(i);
  }
  return out;
}

Link link_of(int x, const CellSet& a) {
  const auto& k = a.ambient();
  if (!a.contains(k->vertex_simplex(x)))
    throw ContractError("link_of: vertex " + std::to_string(x) + " is not in the set");
  std::vector<int> vmap(k->num_vertices(), -1);
  Link out;
  std::vector<QPoint> pts;
  std::vector<std::vector<int>> simp;
  std::vector<int> source;
  for (int s : k->vertex_star(x)) {
    if (k->dim(s) == 0) continue;
    std::vector<int> t;
    for (int v : k->simplex(s)) {
      if (v == x) continue;
      if (vmap[v] < 0) {
        vmap[v] = static_cast<int>(pts.size());
        out.vertex_to_ambient.push_back(v);
        pts.push_back(k->vertex(v));
      }
      t.push_back(vmap[v]);
    }
    simp.push_back(t);
    source.push_back(s);
  }
  out.complex = GeomComplex::create(std::move(pts), simp, false);
  out.set = CellSet(out.complex);
  Bits m(out.complex->size());
  for (std::size_t i = 0; i < simp.size(); ++i) {
    std::sort(simp[i].begin(), simp[i].end());
    if (a.contains(source[i])) m.set(*out.complex->find(simp[i]));
  }
  out.set = CellSet(out.complex, m);
  return out;
}

Location locate(const QPoint& p, const GeomComplex& k) {
  if (p.dim() != k.ambient_dim()) return {};
  for (int m : k.maximal()) {
    const auto& f = k.frame(m);
    if (!f.in_affine_hull(p)) continue;
    auto lam = f.coordinates(p);
    if (std::any_of(lam.begin(), lam.end(), [](const Rational& x) { return x < 0; })) continue;
    std::vector<int> verts;
    Location loc;
    for (std::size_t i = 0; i < lam.size(); ++i) {
      if (lam[i] > 0) {
        verts.push_back(k.simplex(m)[i]);
        loc.bary.push_back(lam[i]);
      }
    }
    loc.simplex = *k.find(verts);
    return loc;
  }
  return {};
}

}  // namespace eulerlab
