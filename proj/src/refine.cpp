#include "eulerlab/refine.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace eulerlab {

namespace {

struct Box {
  std::vector<Rational> lo, hi;
};

Box bbox(std::span<const QPoint> pts) {
  Box b{pts[0].coords, pts[0].coords};
  for (const auto& p : pts)
    for (std::size_t k = 0; k < p.dim(); ++k) {
      if (p[k] < b.lo[k]) b.lo[k] = p[k];
      if (p[k] > b.hi[k]) b.hi[k] = p[k];
    }
  return b;
}

bool boxes_meet(const Box& a, const Box& b) {
  for (std::size_t k = 0; k < a.lo.size(); ++k)
    if (a.hi[k] < b.lo[k] || b.hi[k] < a.lo[k]) return false;
  return true;
}

Rational cell_volume(const ConvexCell& c, const std::vector<std::size_t>& coords) {
  Rational v = 0;
  for (const auto& s : triangulate_cell(c)) v += projected_volume(s, coords);
  return v;
}

}  // namespace

ComplexPtr complex_from_cells(const std::vector<ConvexCell>& cells) {
  std::vector<std::vector<QPoint>> simplices;
  std::set<QPoint> points;
  for (const auto& c : cells) {
    if (c.empty()) continue;
    for (auto& s : triangulate_cell(c)) {
      for (const auto& p : s.vertices) points.insert(p);
      simplices.push_back(std::move(s.vertices));
    }
  }
  std::vector<QPoint> pts(points.begin(), points.end());
  std::map<QPoint, int> id;
  for (std::size_t i = 0; i < pts.size(); ++i) id.emplace(pts[i], static_cast<int>(i));
  std::vector<std::vector<int>> simp;
  for (const auto& s : simplices) {
    std::vector<int> t;
    for (const auto& p : s) t.push_back(id.at(p));
    simp.push_back(std::move(t));
  }
  return GeomComplex::create(std::move(pts), std::move(simp), true);
}

std::vector<int> carriers(const GeomComplex& fine, const GeomComplex& coarse) {
  std::vector<int> out;
  out.reserve(fine.size());
  for (std::size_t i = 0; i < fine.size(); ++i) {
    auto loc = locate(fine.barycenter(static_cast<int>(i)), coarse);
    if (loc.outside())
      throw ContractError("refined simplex " + std::to_string(i) + " lies outside the coarse complex");
    out.push_back(loc.simplex);
  }
  return out;
}

Overlay overlay(const ComplexPtr& k, const ComplexPtr& l) {
  if (k->ambient_dim() != l->ambient_dim()) throw ContractError("overlay: ambient dimension mismatch");
  auto samples = [](const GeomComplex& c) {
    std::vector<QPoint> pts = c.vertices();
    for (int m : c.maximal()) pts.push_back(c.barycenter(m));
    return pts;
  };
  for (const auto& p : samples(*k))
    if (locate(p, *l).outside())
      throw ContractError("overlay: supports differ (" + p.str() + " of the first complex is outside the second)");
  for (const auto& p : samples(*l))
    if (locate(p, *k).outside())
      throw ContractError("overlay: supports differ (" + p.str() + " of the second complex is outside the first)");
  std::vector<ConvexCell> cells;
  auto km = k->maximal();
  auto lm = l->maximal();
  std::vector<Box> lbox;
  for (int t : lm) lbox.push_back(bbox(l->geom(t).vertices));
  for (int s : km) {
    auto gs = k->geom(s);
    Box bs = bbox(gs.vertices);
    for (std::size_t j = 0; j < lm.size(); ++j) {
      if (!boxes_meet(bs, lbox[j])) continue;
      ConvexCell c = clip(gs, l->geom(lm[j]));
      if (!c.empty()) cells.push_back(std::move(c));
    }
  }
  Overlay o;
  o.complex = complex_from_cells(cells);
  o.to_k = Refinement{k, o.complex, carriers(*o.complex, *k)};
  o.to_l = Refinement{l, o.complex, carriers(*o.complex, *l)};
  return o;
}

Refinement refine_by_hyperplanes(const ComplexPtr& k, std::vector<AffineForm> hs) {
  std::set<AffineForm> uniq;
  for (const auto& h : hs)
    if (!h.is_constant()) uniq.insert(h.normalized());
  hs.assign(uniq.begin(), uniq.end());
  std::vector<ConvexCell> cells;
  for (int m : k->maximal()) {
    const int d = k->dim(m);
    std::vector<ClipPolytope> work{ClipPolytope(k->geom(m))};
    for (const auto& h : hs) {
      std::vector<ClipPolytope> next;
      for (auto& p : work) {
        auto c = p.cell();
        bool pos = false, neg = false;
        for (const auto& v : c.vertices) {
          Rational x = h(v);
          if (x > 0) pos = true;
          if (x < 0) neg = true;
        }
        if (!(pos && neg)) {
          next.push_back(std::move(p));
          continue;
        }
        ClipPolytope a = p, b = p;
        a.clip(h);
        b.clip(h * Rational(-1));
        if (a.dimension() == d) next.push_back(std::move(a));
        if (b.dimension() == d) next.push_back(std::move(b));
      }
      work = std::move(next);
    }
    for (const auto& p : work) cells.push_back(p.cell());
  }
  auto fine = complex_from_cells(cells);
  return Refinement{k, fine, carriers(*fine, *k)};
}

QPoint AffinePieces::operator()(const QPoint& p) const {
  auto loc = locate(p, *domain);
  if (loc.outside()) throw ContractError("point " + p.str() + " is outside the map's domain");
  const auto& verts = domain->simplex(loc.simplex);
  QPoint out(images.at(verts[0]).dim());
  for (std::size_t i = 0; i < verts.size(); ++i) out += images[verts[i]] * loc.bary[i];
  return out;
}

AffineForm AffinePieces::pull(int id, const AffineForm& h) const {
  const auto& verts = domain->simplex(id);
  std::vector<Rational> vals;
  for (int v : verts) vals.push_back(h(images[v]));
  if (verts.size() == 1) {
    AffineForm c;
    c.a.assign(domain->ambient_dim(), 0);
    c.c = vals[0];
    return c;
  }
  return combine(domain->frame(id).bary, vals);
}

Pullback pullback_refinement(const AffinePieces& f, const ComplexPtr& target, const CellSet* restrict_to,
                             std::size_t budget) {
  const auto& d = f.domain;
  std::vector<int> sources;
  if (restrict_to) {
    CellSet closed = restrict_to->closure();
    for (int s : closed.ids()) {
      bool maximal = true;
      for (int c : d->cofacets(s))
        if (closed.contains(c)) maximal = false;
      if (maximal) sources.push_back(s);
    }
  } else {
    sources = d->maximal();
  }
  auto tm = target->maximal();
  std::vector<Box> tbox;
  for (int t : tm) tbox.push_back(bbox(target->geom(t).vertices));
  std::vector<ConvexCell> cells;
  for (int s : sources) {
    auto gs = d->geom(s);
    std::vector<QPoint> img;
    for (int v : d->simplex(s)) img.push_back(f.images.at(v));
    Box bs = bbox(img);
    auto coords = projection_coords(gs.vertices);
    Rational want = projected_volume(gs, coords);
    Rational got = 0;
    const int dim = d->dim(s);
    // A full-dimensional overlap of two cells means they coincide (their
    // intersection is a face of each), so dedupe before summing volumes.
    std::set<std::vector<QPoint>> seen;
    for (std::size_t j = 0; j < tm.size(); ++j) {
      if (!boxes_meet(bs, tbox[j])) continue;
      const auto& fr = target->frame(tm[j]);
      ClipPolytope p(gs);
      for (const auto& e : fr.equations) {
        p.restrict_to(f.pull(s, e));
        if (p.empty()) break;
      }
      for (const auto& b : fr.bary) {
        if (p.empty()) break;
        p.clip(f.pull(s, b));
      }
      if (p.empty()) continue;
      ConvexCell c = p.cell();
      if (!seen.insert(c.vertices).second) continue;
      if (c.dimension == dim) got += dim == 0 ? Rational(1) : cell_volume(c, coords);
      cells.push_back(std::move(c));
      if (cells.size() > budget)
        throw ContractError("refinement budget exceeded (" + std::to_string(budget) + " cells)");
    }
    if (got != want)
      throw ContractError("image of simplex " + std::to_string(s) + " leaves the target complex");
  }
  Pullback out;
  auto fine = complex_from_cells(cells);
  out.refinement = Refinement{d, fine, carriers(*fine, *d)};
  for (const auto& p : fine->vertices()) out.images.push_back(f(p));
  return out;
}

}  // namespace eulerlab
