#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eulerlab/complex.hpp"

namespace eulerlab {

struct FamilyGenerator {
  std::string name;
  CellSet set;
  bool algebraic = false;
};

/// A finite model of a constructible category: the Boolean algebra generated
/// by named CellSets inside a universe (the union of the generators, which
/// must itself be a generator). Algebraic generators must be closed in the
/// universe. Immutable; atoms are computed on construction.
class Family {
 public:
  static constexpr std::size_t kMaxGenerators = 20;

  /// Throws ContractError on an empty or oversized generator list, mixed
  /// ambients, a missing universe generator, or a non-closed algebraic
  /// generator.
  explicit Family(std::vector<FamilyGenerator> generators);

  /// Generators: the universe (algebraic) and every single open simplex of it
  /// (free): the algebra of all CellSets inside the universe.
  static Family all_cellsets(const CellSet& universe);

  const ComplexPtr& ambient() const { return universe_.ambient(); }
  const CellSet& universe() const { return universe_; }
  const std::vector<FamilyGenerator>& generators() const { return gens_; }

  /// Nonempty intersections of generators and their complements in the
  /// universe, ordered by lowest member id.
  const std::vector<CellSet>& atoms() const { return atoms_; }
  bool contains(const CellSet& s) const;
  /// Smallest member containing s: the union of atoms meeting s.
  CellSet hull(const CellSet& s) const;
  /// Smallest set containing s obtained from algebraic generators by finite
  /// ∩ and ∪ (the model of the Zariski closure); ∅ for ∅. The universe counts
  /// as algebraic.
  CellSet zar(const CellSet& s) const;

 private:
  std::vector<FamilyGenerator> gens_;
  CellSet universe_;
  std::vector<CellSet> atoms_;
  std::vector<int> atom_of_;  // per ambient simplex, -1 outside the universe
};

/// Every member of the algebra (all unions of atoms), in the order of their
/// atom bitmasks. Throws ContractError if there are more than 20 atoms.
std::vector<CellSet> generate_algebra(const Family& f);

/// Smallest member closed in the universe that contains a, following the
/// recursive construction: take the closure, pass to the smallest member M,
/// and recurse on the frontier F of M inside the current Zariski-closure
/// model, which has lower dimension. Atoms already taken are skipped so the
/// loop ends after at most one step per atom.
CellSet c_closure(const CellSet& a, const Family& f);
/// Intersection of all closed members containing a, by enumerating every
/// union of atoms. Throws ContractError above 20 atoms.
CellSet c_closure_brute(const CellSet& a, const Family& f);

struct ClosureGap {
  CellSet topological;  // closure of a in the universe
  CellSet c_closure;
  CellSet flag_closure;  // zar(a)
  bool first_strict = false;   // topological ⊊ c_closure
  bool second_strict = false;  // c_closure ⊊ flag_closure
};
ClosureGap closure_gap_report(const CellSet& a, const Family& f);

/// Image and preimage of a map transported onto the family's ambient. A result
/// of nullopt means the set is not a union of ambient cells (it only exists on
/// a refinement) and so cannot be a member.
struct MapTransport {
  std::string name;
  bool injective = false;
  std::function<std::optional<CellSet>(const CellSet&)> image;
  std::function<std::optional<CellSet>(const CellSet&)> preimage;
};

struct AxiomVerdict {
  std::string axiom;  // "A1", "A2", "A3a", "A3b", "A4"
  bool pass = true;
  std::string detail;
  std::optional<CellSet> witness;
  std::optional<CellSet> witness_extra;  // A4: the member X; A3: the offending atom
};

struct AxiomReport {
  std::vector<AxiomVerdict> verdicts;
  bool all_pass = true;
  /// A3 is only tested against the supplied maps.
  std::string scope;
};

/// A4 enumerates every locally closed member when there are at most
/// `max_atoms_for_a4` atoms, and otherwise checks the atoms and generators.
AxiomReport check_axioms(const Family& f, const std::vector<MapTransport>& maps, std::size_t max_atoms_for_a4 = 12);

}  // namespace eulerlab
