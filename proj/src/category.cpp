#include "eulerlab/category.hpp"

#include <map>

#include "eulerlab/euler.hpp"

namespace eulerlab {

namespace {

constexpr std::size_t kMaxEnumeratedAtoms = 20;

// Closure taken inside the universe.
CellSet closure_in(const CellSet& a, const CellSet& universe) { return a.closure() & universe; }

}  // namespace

Family::Family(std::vector<FamilyGenerator> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw ContractError("family has no generators");
  if (gens_.size() > kMaxGenerators)
    throw ContractError("family has " + std::to_string(gens_.size()) + " generators; the bound is " +
                        std::to_string(kMaxGenerators));
  const auto& k = gens_[0].set.ambient();
  universe_ = CellSet(k);
  for (const auto& g : gens_) {
    if (g.set.ambient() != k) throw ContractError("generator '" + g.name + "' lives on another complex");
    universe_ = universe_ | g.set;
  }
  bool has_universe = false;
  for (const auto& g : gens_) has_universe = has_universe || g.set == universe_;
  if (!has_universe) throw ContractError("no generator equals the union of all generators");
  for (const auto& g : gens_)
    if (g.algebraic && !g.set.is_closed_in(universe_))
      throw ContractError("algebraic generator '" + g.name + "' is not closed in the universe");

  // Sign vector of each cell; cells with equal vectors form an atom.
  std::map<std::vector<bool>, int> index;
  atom_of_.assign(k->size(), -1);
  std::vector<Bits> members;
  for (int s : universe_.ids()) {
    std::vector<bool> sign;
    for (const auto& g : gens_) sign.push_back(g.set.contains(s));
    auto [it, fresh] = index.emplace(sign, static_cast<int>(members.size()));
    if (fresh) members.emplace_back(k->size());
    members[it->second].set(s);
    atom_of_[s] = it->second;
  }
  // Ids are visited in ascending order, so atoms come out ordered by their
  // lowest member.
  for (auto& m : members) atoms_.emplace_back(k, std::move(m));
}

Family Family::all_cellsets(const CellSet& universe) {
  std::vector<FamilyGenerator> g{{"universe", universe, true}};
  for (int s : universe.ids())
    g.push_back({"cell_" + std::to_string(s), CellSet::from_ids(universe.ambient(), {s}), false});
  if (g.size() > kMaxGenerators) {
    // One generator per cell would exceed the bound; a binary encoding of the
    // cell index separates all cells with log2(n) generators.
    g.resize(1);
    auto ids = universe.ids();
    for (int bit = 0; (std::size_t{1} << bit) < ids.size() + 1; ++bit) {
      std::vector<int> sel;
      for (std::size_t i = 0; i < ids.size(); ++i)
        if (((i + 1) >> bit) & 1) sel.push_back(ids[i]);
      g.push_back({"bit_" + std::to_string(bit), CellSet::from_ids(universe.ambient(), sel), false});
    }
  }
  return Family(std::move(g));
}

bool Family::contains(const CellSet& s) const { return hull(s) == s; }

CellSet Family::hull(const CellSet& s) const {
  if (s.ambient() != ambient()) throw ContractError("set and family live on different complexes");
  CellSet out(ambient());
  std::vector<bool> taken(atoms_.size(), false);
  for (int id : s.ids()) {
    int a = atom_of_[id];
    if (a < 0) throw ContractError("set leaves the family's universe at simplex " + std::to_string(id));
    if (!taken[a]) {
      taken[a] = true;
      out = out | atoms_[a];
    }
  }
  return out;
}

CellSet Family::zar(const CellSet& s) const {
  CellSet out(ambient());
  for (int id : s.ids()) {
    if (out.contains(id)) continue;
    if (atom_of_[id] < 0) throw ContractError("set leaves the family's universe at simplex " + std::to_string(id));
    CellSet meet = universe_;
    for (const auto& g : gens_)
      if (g.algebraic && g.set.contains(id)) meet = meet & g.set;
    out = out | meet;
  }
  return out;
}

std::vector<CellSet> generate_algebra(const Family& f) {
  const auto& atoms = f.atoms();
  if (atoms.size() > kMaxEnumeratedAtoms)
    throw ContractError("the algebra has " + std::to_string(atoms.size()) + " atoms; enumeration is bounded at " +
                        std::to_string(kMaxEnumeratedAtoms));
  std::vector<CellSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
    CellSet m(f.ambient());
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (mask >> i & 1) m = m | atoms[i];
    out.push_back(std::move(m));
  }
  return out;
}

CellSet c_closure(const CellSet& a, const Family& f) {
  const CellSet& u = f.universe();
  if (!a.subset_of(u)) throw ContractError("c_closure: set is not inside the family's universe");
  CellSet acc(f.ambient());
  CellSet x = u;
  CellSet cur = closure_in(a, u);
  while (!cur.empty()) {
    x = x & f.zar(cur);
    CellSet m = f.hull(cur) - acc;
    acc = acc | m;
    cur = (closure_in(m, x) - acc);
    if (!cur.empty()) cur = closure_in(cur, x);
  }
  return acc;
}

CellSet c_closure_brute(const CellSet& a, const Family& f) {
  const CellSet& u = f.universe();
  if (!a.subset_of(u)) throw ContractError("c_closure: set is not inside the family's universe");
  CellSet out = u;
  for (const auto& m : generate_algebra(f))
    if (a.subset_of(m) && m.is_closed_in(u)) out = out & m;
  return out;
}

ClosureGap closure_gap_report(const CellSet& a, const Family& f) {
  ClosureGap g;
  g.topological = closure_in(a, f.universe());
  g.c_closure = c_closure(a, f);
  g.flag_closure = f.zar(a);
  g.first_strict = g.topological != g.c_closure;
  g.second_strict = g.c_closure != g.flag_closure;
  return g;
}

AxiomReport check_axioms(const Family& f, const std::vector<MapTransport>& maps, std::size_t max_atoms_for_a4) {
  AxiomReport r;
  r.scope = "A3 is checked only against the " + std::to_string(maps.size()) +
            " supplied map(s); the axiom quantifies over all maps of the category";
  const auto& u = f.universe();
  const auto& atoms = f.atoms();
  auto add = [&](AxiomVerdict v) {
    r.all_pass = r.all_pass && v.pass;
    r.verdicts.push_back(std::move(v));
  };

  {
    AxiomVerdict v{"A1", true, "the universe and every algebraic generator are members", {}, {}};
    for (const auto& g : f.generators())
      if (g.algebraic && !g.set.is_closed_in(u)) {
        v.pass = false;
        v.detail = "algebraic generator '" + g.name + "' is not closed";
        v.witness = g.set;
      }
    add(v);
  }
  {
    // The members are the unions of atoms; check the atoms partition the
    // universe, which makes ∩, ∪, ∖ of members members again.
    AxiomVerdict v{"A2", true, std::to_string(atoms.size()) + " atoms partition the universe", {}, {}};
    CellSet seen(f.ambient());
    for (const auto& a : atoms) {
      if (!(a & seen).empty()) {
        v.pass = false;
        v.detail = "atoms overlap";
        v.witness = a & seen;
      }
      seen = seen | a;
    }
    if (seen != u) {
      v.pass = false;
      v.detail = "atoms do not cover the universe";
    }
    add(v);
  }
  for (const auto& m : maps) {
    AxiomVerdict pre{"A3a", true, "preimages of all atoms under '" + m.name + "' are members", {}, {}};
    for (const auto& a : atoms) {
      auto p = m.preimage(a);
      if (!p || p->ambient() != f.ambient() || !p->subset_of(u) || !f.contains(*p)) {
        pre.pass = false;
        pre.detail = "preimage under '" + m.name + "' of an atom is not a member";
        if (p) pre.witness = *p;
        pre.witness_extra = a;
        break;
      }
    }
    add(pre);
    AxiomVerdict img{"A3b", true, "", {}, {}};
    if (!m.injective) {
      img.detail = "'" + m.name + "' is not injective; A3b does not apply";
    } else {
      img.detail = "images of all atoms under '" + m.name + "' are members";
      for (const auto& a : atoms) {
        auto q = m.image(a);
        if (!q || q->ambient() != f.ambient() || !q->subset_of(u) || !f.contains(*q)) {
          img.pass = false;
          img.detail = "image under '" + m.name + "' of an atom is not a member";
          if (q) img.witness = *q;
          img.witness_extra = a;
          break;
        }
      }
    }
    add(img);
  }
  {
    std::vector<CellSet> candidates;
    if (atoms.size() <= max_atoms_for_a4) {
      candidates = generate_algebra(f);
    } else {
      candidates = atoms;
      for (const auto& g : f.generators()) candidates.push_back(g.set);
    }
    AxiomVerdict v{"A4", true, "", {}, {}};
    std::size_t checked = 0;
    for (const auto& x : candidates) {
      if (x.empty() || !x.is_locally_closed()) continue;
      ++checked;
      auto rep = euler_report(x);
      if (rep.euler) continue;
      CellSet y = f.hull(rep.locus);
      if (y.dimension() <= x.dimension() - 2) continue;
      v.pass = false;
      v.detail = "member " + x.str() + " of dimension " + std::to_string(x.dimension()) +
                 ": the smallest member containing its non-Euler locus has dimension " +
                 std::to_string(y.dimension());
      v.witness = y;
      v.witness_extra = x;
      break;
    }
    if (v.pass)
      v.detail = std::to_string(checked) + " locally closed member(s) are Euler off a member of codimension >= 2";
    if (atoms.size() > max_atoms_for_a4) v.detail += " (atoms and generators only)";
    add(v);
  }
  return r;
}

}  // namespace eulerlab
