#include "eulerlab/euler.hpp"

#include <algorithm>
#include <functional>

namespace eulerlab {

long chi_c(const CellSet& a) {
  long s = 0;
  for (int id : a.ids()) s += a.ambient()->dim(id) % 2 ? -1 : 1;
  return s;
}

HomologyResult model_homology(const CellSet& a) {
  if (a.is_closed()) return homology(bm_chain_complex(a));
  // Order complex of the member poset: chains σ0 < σ1 < ... of members.
  const auto& k = a.ambient();
  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  std::function<void(int)> grow = [&](int s) {
    cur.push_back(s);
    chains.push_back(cur);
    for (int c : k->cofaces(s))
      if (c != s && a.contains(c)) grow(c);
    cur.pop_back();
  };
  for (int s : a.ids()) grow(s);
  if (chains.empty()) return {};
  return homology(abstract_chain_complex(chains));
}

long chi(const CellSet& a) {
  if (!a.is_locally_closed()) throw ContractError("chi needs a locally closed set");
  return model_homology(a).euler_characteristic();
}

EulerReport euler_report(const CellSet& a) {
  if (!a.is_locally_closed()) throw ContractError("euler_report needs a locally closed set");
  const auto& k = a.ambient();
  auto sd = barycentric_subdivide(k);
  CellSet a2 = sd.transport(a);
  EulerReport r;
  r.link_chi.assign(k->size(), 0);
  r.local_chi.assign(k->size(), 0);
  r.locus = CellSet(k);
  Bits locus(k->size());
  for (int s : a.ids()) {
    // Vertex s of the subdivision is the barycenter of s.
    long lk = 0;
    for (int rho : sd.fine->vertex_star(s)) {
      if (sd.fine->dim(rho) == 0 || !a2.contains(rho)) continue;
      lk += (sd.fine->dim(rho) - 1) % 2 ? -1 : 1;
    }
    r.link_chi[s] = lk;
    r.local_chi[s] = 1 - lk;
    if (lk % 2) locus.set(s);
  }
  r.locus = CellSet(k, locus);
  r.locus_dim = r.locus.dimension();
  r.dim = a.dimension();
  r.chi = chi(a);
  r.chi_c = chi_c(a);
  r.euler = r.locus.empty();
  r.euler_in_codim1 = r.locus.empty() || r.locus_dim <= r.dim - 2;
  r.euler_at_infinity = (r.chi_c + 1 - r.chi) % 2 != 0;
  return r;
}

ConstructibleFn ConstructibleFn::indicator(const CellSet& a) {
  ConstructibleFn f{a, std::vector<long>(a.ambient()->size(), 0)};
  for (int s : a.ids()) f.values[s] = 1;
  return f;
}

ConstructibleFn ConstructibleFn::zero(const ComplexPtr& k) {
  return ConstructibleFn{CellSet(k), std::vector<long>(k->size(), 0)};
}

void ConstructibleFn::set(int id, long v) {
  values[id] = v;
  if (v != 0 && !domain.contains(id)) domain = domain | CellSet::from_ids(domain.ambient(), {id});
}

long integrate(const ConstructibleFn& phi) {
  long s = 0;
  const auto& k = phi.domain.ambient();
  for (std::size_t i = 0; i < phi.values.size(); ++i)
    s += k->dim(static_cast<int>(i)) % 2 ? -phi.values[i] : phi.values[i];
  return s;
}

int SimplicialMapData::image(int simplex) const {
  std::vector<int> img;
  for (int v : source->simplex(simplex)) img.push_back(vertex_map.at(v));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  auto id = target->find(img);
  if (!id) throw ContractError("map is not simplicial: image of simplex " + std::to_string(simplex) +
                              " is not a simplex of the target");
  return *id;
}

void SimplicialMapData::validate() const {
  if (vertex_map.size() != source->num_vertices()) throw ContractError("vertex map has the wrong size");
  for (std::size_t i = 0; i < source->size(); ++i) image(static_cast<int>(i));
}

ConstructibleFn pushforward(const ConstructibleFn& phi, const SimplicialMapData& f) {
  if (phi.domain.ambient() != f.source) throw ContractError("pushforward: function is not on the map's source");
  f.validate();
  auto out = ConstructibleFn::zero(f.target);
  Bits dom(f.target->size());
  for (std::size_t s = 0; s < f.source->size(); ++s) {
    int t = f.image(static_cast<int>(s));
    if (phi.domain.contains(static_cast<int>(s))) dom.set(t);
    long v = phi.values[s];
    if (v == 0) continue;
    int sign = (f.source->dim(static_cast<int>(s)) - f.target->dim(t)) % 2 ? -1 : 1;
    out.values[t] += sign * v;
  }
  out.domain = CellSet(f.target, dom);
  return out;
}

ConstructibleFn pullback(const ConstructibleFn& psi, const SimplicialMapData& f) {
  if (psi.domain.ambient() != f.target) throw ContractError("pullback: function is not on the map's target");
  f.validate();
  auto out = ConstructibleFn::zero(f.source);
  Bits dom(f.source->size());
  for (std::size_t s = 0; s < f.source->size(); ++s) {
    int t = f.image(static_cast<int>(s));
    out.values[s] = psi.values[t];
    if (psi.domain.contains(t)) dom.set(s);
  }
  out.domain = CellSet(f.source, dom);
  return out;
}

ConstructibleFn link_op(const ConstructibleFn& phi) {
  const auto& k = phi.domain.ambient();
  auto sd = barycentric_subdivide(k);
  auto out = ConstructibleFn::zero(k);
  for (std::size_t s = 0; s < k->size(); ++s) {
    long v = 0;
    for (int rho : sd.fine->vertex_star(static_cast<int>(s))) {
      int d = sd.fine->dim(rho);
      if (d == 0) continue;
      long val = phi.values[sd.carrier[rho]];
      v += (d - 1) % 2 ? -val : val;
    }
    out.values[s] = v;
  }
  out.domain = CellSet::full(k);
  return out;
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial{{Term{c, {}}}}; }

Polynomial Polynomial::monomial(const Rational& coeff, std::vector<int> exponents) {
  return Polynomial{{Term{coeff, std::move(exponents)}}};
}

Rational Polynomial::operator()(const QPoint& p) const {
  Rational s = 0;
  for (const auto& t : terms) {
    Rational m = t.coeff;
    for (std::size_t i = 0; i < t.exponents.size(); ++i)
      for (int e = 0; e < t.exponents[i]; ++e) m *= p.coords.at(i);
    s += m;
  }
  return s;
}

std::vector<long> signsum_eval(const std::vector<Polynomial>& polys, const std::vector<QPoint>& points) {
  std::vector<long> out;
  for (const auto& p : points) {
    long s = 0;
    for (const auto& g : polys) s += sgn(g(p));
    out.push_back(s);
  }
  return out;
}

ParityVerdict parity_obstruction(const std::vector<Sample>& samples) {
  ParityVerdict v;
  int first = -1;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!samples[i].generic) continue;
    if (first < 0) {
      first = static_cast<int>(i);
      continue;
    }
    long a = samples[first].value, b = samples[i].value;
    if ((a - b) % 2 != 0) {
      v.pass = false;
      v.witness_a = first;
      v.witness_b = static_cast<int>(i);
      v.reason = "generic samples " + std::to_string(first) + " and " + std::to_string(i) + " take values " +
                 std::to_string(a) + " and " + std::to_string(b) + " of different parity";
      return v;
    }
  }
  v.reason = first < 0 ? "no generic samples" : "generic values share one parity";
  return v;
}

}  // namespace eulerlab
