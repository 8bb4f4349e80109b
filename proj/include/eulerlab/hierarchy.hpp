#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulerlab/category.hpp"
#include "eulerlab/complex.hpp"
#include "eulerlab/dynamics.hpp"

namespace eulerlab {

/// PL invariant of a germ (a, x) at a vertex. A proxy for the semialgebraic
/// homeomorphism type: equal germs have equal invariants, not conversely.
struct LocalTypeInvariant {
  std::vector<int> local_homology;  // dims of H_d(a, a ∖ x; Z2)
  std::vector<int> link_homology;   // dims of H_d(lk_a(x); Z2)
  int link_components = 0;
  long link_chi = 0;

  /// Top degree with nonzero local homology, -1 if none.
  int top_degree() const;
  std::string str() const;
  friend bool operator==(const LocalTypeInvariant&, const LocalTypeInvariant&) = default;
  friend auto operator<=>(const LocalTypeInvariant&, const LocalTypeInvariant&) = default;
};

/// Requires the base to be a vertex of the set.
LocalTypeInvariant local_type(const Germ& g);
LocalTypeInvariant local_type(const CellSet& a, int vertex);

/// The cone on which a germ is embedded: the closure of a ∩ (open star of the
/// base), subdivided `depth` times.
struct GermCone {
  ComplexPtr complex;
  int apex = -1;
  CellSet set;  // the germ's set on `complex`
};
GermCone germ_cone(const Germ& g, int depth);

struct PrecedenceVerdict {
  enum class Kind { Found, NotFoundUpTo, Obstructed };
  Kind kind = Kind::NotFoundUpTo;
  /// Found: the subdivision depth of the domain cone. NotFoundUpTo: the
  /// largest depth searched.
  int depth = 0;
  /// Found: domain cone vertex -> vertex of the target germ's cone at depth 0.
  std::vector<int> vertex_map;
  GermCone domain;
  std::string obstruction;
  std::size_t explored = 0;
  bool budget_hit = false;

  bool found() const { return kind == Kind::Found; }
  std::string kind_name() const;
};

/// Searches for a vertex-injective simplicial map from a subdivided cone of gy
/// into the cone of gx, apex to apex, germ set into germ set. Invariant
/// obstructions are tried first.
PrecedenceVerdict precedes(const Germ& gy, const Germ& gx, int depth, std::size_t budget = 1000000);

/// Re-checks a Found verdict from scratch; returns an empty string when valid.
std::string verify_embedding(const PrecedenceVerdict& v, const Germ& gy, const Germ& gx);

/// Composite of two embeddings Y -> X -> Z. Defined when the second has depth
/// 0; the result embeds the first one's domain cone into Z.
std::optional<PrecedenceVerdict> compose_embeddings(const PrecedenceVerdict& yx, const PrecedenceVerdict& xz);

struct AntisymmetryReport {
  PrecedenceVerdict forward;   // gy ≺ gx
  PrecedenceVerdict backward;  // gx ≺ gy
  bool both_found = false;
  std::optional<bool> invariants_equal;
  /// Both depths 0: the composite gy -> gy maps the germ's open star onto
  /// itself.
  std::optional<bool> composite_local_homeomorphism;
  bool alarm = false;
  std::vector<std::string> notes;
};
AntisymmetryReport check_antisymmetry(const Germ& gy, const Germ& gx, int depth, std::size_t budget = 1000000);

struct Stratum {
  LocalTypeInvariant type;
  CellSet cells;  // members of x with this type
  int dimension = -1;
  bool pure = false;
  bool locally_closed = false;
  /// Every point has H(T, T ∖ p) = Z2 in degree dim T only.
  bool homology_manifold = false;
};

struct Stratification {
  CellSet x;
  std::vector<Stratum> strata;    // ordered by type
  std::vector<int> stratum_of;    // per ambient simplex, -1 off x
  bool all_homology_manifolds = true;
};

/// Partitions the members of x by the local type at their barycenters.
/// Requires x locally closed.
Stratification stratify(const CellSet& x);

struct StrataMapCheck {
  bool into = true;  // f(T) ⊆ T for every stratum T
  bool onto = true;  // f(T) = T for every stratum T
  std::optional<int> first_failure;  // stratum index
};
/// f must be a self-map of st.x.
StrataMapCheck check_strata_preserved(const Stratification& st, const PLMap& f, std::size_t budget = 200000);

struct FiltrationLevel {
  int index = 0;  // X^index
  CellSet set;
  bool closed = false;
  bool member = false;
  bool f_stable = false;
  /// X^index ∖ X^(index-1) is a manifold of pure dimension index (or empty).
  bool difference_is_manifold = false;
};

struct FiltrationReport {
  std::vector<FiltrationLevel> levels;  // from X^n down to X^-1 = ∅
  bool certified = false;
  bool proxy = false;
  std::string failure;
  std::optional<CellSet> offending;
};

/// X^n = x, X^(k-1) = c_closure(Σ(X^k)) where Σ is the singular set of X^k
/// in its own dimension. f must be an injective self-map of x and fam a family
/// on x's complex whose universe contains x.
FiltrationReport build_filtration(const CellSet& x, const PLMap& f, const Family& fam, std::size_t budget = 200000);

}  // namespace eulerlab
