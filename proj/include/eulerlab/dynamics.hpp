#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulerlab/category.hpp"
#include "eulerlab/corpus.hpp"
#include "eulerlab/euler.hpp"
#include "eulerlab/refine.hpp"

namespace eulerlab {

/// A PL map from the set `domain` (on complex K) to the set `target` (on
/// complex L), affine on every simplex of `refinement.fine`, a refinement of K.
/// The fine complex may cover only the closure of the domain.
struct PLMap {
  std::string name;
  CellSet domain;
  CellSet target;
  Refinement refinement;
  std::vector<QPoint> images;  // per vertex of refinement.fine

  const ComplexPtr& source_complex() const { return domain.ambient(); }
  const ComplexPtr& target_complex() const { return target.ambient(); }
  AffinePieces pieces() const { return {refinement.fine, images}; }
  QPoint operator()(const QPoint& p) const { return pieces()(p); }

  static PLMap identity(const CellSet& a);
};

/// The map from the corpus, on iterated_subdivision(K, depth).
PLMap map_from_corpus(const Workspace& ws, const std::string& name);

/// The same map made simplicial: source is a refinement K″ of K, target a
/// refinement R of L, and every simplex of K″ inside the closed domain maps
/// affinely onto the simplex of R spanned by its vertex images.
struct SimplicialForm {
  Refinement source;
  Refinement target;
  std::vector<int> vertex_map;  // K″ vertex -> R vertex, -1 off the closed domain
  CellSet domain;               // on K″
  CellSet codomain;             // the target set on R

  /// R simplex spanned by the images of the vertices of K″ simplex s.
  int image_of(int s) const;
  CellSet image(const CellSet& a_fine) const;
  CellSet preimage(const CellSet& b_fine) const;
  SimplicialMapData data() const { return {source.fine, target.fine, vertex_map}; }
};

/// Throws ContractError when the budget is exceeded, when an image point leaves
/// the target complex or target set, or if the refinement fails to make the map
/// simplicial.
SimplicialForm simplicial_form(const PLMap& f, std::size_t budget = 200000);

struct InjectivityVerdict {
  bool injective = true;
  std::string reason;
  std::optional<QPoint> witness_a;  // two domain points with equal images
  std::optional<QPoint> witness_b;
};

/// Injective iff no domain simplex of K″ collapses and distinct domain
/// simplices have distinct image simplices.
InjectivityVerdict verify_injective(const PLMap& f, std::size_t budget = 200000);
InjectivityVerdict verify_injective(const SimplicialForm& sf);

/// f(domain) on the target refinement R.
struct ImageResult {
  Refinement target;  // L -> R
  CellSet image;      // on R
  /// The image as a set of L, when it is a union of L cells.
  std::optional<CellSet> coarse() const { return target.coarsen(image); }
};
ImageResult image(const PLMap& f, std::size_t budget = 200000);
/// Image of a subset of the domain given on K.
ImageResult image_of_set(const PLMap& f, const CellSet& a, std::size_t budget = 200000);

struct PreimageResult {
  Refinement source;  // K -> K″
  CellSet preimage;   // on K″
  std::optional<CellSet> coarse() const { return source.coarsen(preimage); }
};
/// Preimage of a set of L (inside the target).
PreimageResult preimage(const PLMap& f, const CellSet& b, std::size_t budget = 200000);

/// g ∘ f for a self-map chain: f's target must lie in g's domain ambient.
PLMap compose(const PLMap& g, const PLMap& f, std::size_t budget = 200000);
/// f^k; f^0 is the identity of f's domain. Requires a self-map.
PLMap iterate(const PLMap& f, int k, std::size_t budget = 200000);

/// Image and preimage of f as maps of K-sets, for check_axioms. Sets that are
/// not unions of K cells after the map come back as nullopt.
MapTransport transport_of(const PLMap& f, std::size_t budget = 200000);

struct BorelStep {
  int k = 0;
  CellSet y;  // Y_k on the common refinement
  bool closed_in_x = false;
  bool locally_closed = false;
  int bm_rank = 0;  // dim H^BM_d(Y_k; Z2), 0 when Y_k is not locally closed
  bool euler_codim1 = false;
  /// Which [Y_l ∖ Y_{l-1}], l ≤ k, are d-cycles in Y_k, and the rank of the
  /// classes of those that are.
  std::vector<bool> piece_is_cycle;
  int independence_rank = 0;
};

struct BorelReport {
  CellSet x;  // X on the common refinement
  int d = -1;  // dim Y_1, -1 when f is surjective
  std::vector<BorelStep> steps;
  bool increasing = true;
  /// First k whose Y_k is not Euler in codimension one.
  std::optional<int> first_codim1_failure;
};

/// Y_k = X ∖ f^k(X) for k = 1..max_k, all on one overlay refinement.
BorelReport borel_analysis(const PLMap& f, int max_k, std::size_t budget = 200000);
/// Same analysis for a supplied increasing chain Y_1 ⊆ … ⊆ Y_n inside x.
BorelReport borel_chain_analysis(const CellSet& x, const std::vector<CellSet>& ys);

/// Points of x not locally homeomorphic to ℝⁿ (n = dim x), per cell. Exact by
/// link tests up to dimension 2; `proxy` is set when a local homology proxy
/// was used for some cell in dimension ≥ 3.
struct SingularSets {
  CellSet s;      // manifold failure locus
  CellSet a;      // dimension drop locus
  CellSet sigma;  // s ∪ a
  bool proxy = false;
};
SingularSets singular_sets(const CellSet& x);

struct TheoremLab {
  bool injective = false;
  InjectivityVerdict injectivity;
  bool euler = false;
  bool pure = false;
  bool surjective = false;
  bool open_onto_image = false;
  bool homeomorphism = false;
  SingularSets sing;
  bool s_invariant = false;  // f(S) ⊆ S
  std::optional<CellSet> cc_sigma;
  std::optional<bool> cc_sigma_invariant;  // f(cc Σ) ⊆ cc Σ
  /// For an injective, non-surjective map of an Euler set: the first k with
  /// Y_k = X ∖ f^k(X) not Euler in codimension one, if any.
  std::optional<int> hypothesis_failure;
  /// Set when an Euler input of pure dimension gives an injective,
  /// non-surjective map and no Y_k explains it.
  bool alarm = false;
  std::vector<std::string> notes;
};

/// x must be f's domain, and f a self-map. fam, when given, lives on x's
/// complex.
TheoremLab theorem_lab(const PLMap& f, const Family* fam = nullptr, std::size_t budget = 200000);

struct SearchReport {
  int depth = 0;
  std::size_t explored = 0;  // partial vertex assignments tried
  /// Distinct self-maps of x that pass the necessary conditions for
  /// injectivity: distinct images at the vertices of x, no collapsed cell of x
  /// and no fold of two cells of x across a shared facet.
  std::size_t maps = 0;
  std::size_t injective = 0;
  std::size_t surjective = 0;
  std::size_t homeomorphisms = 0;
  bool exhausted = false;  // hit the budget before finishing
  std::vector<PLMap> injective_non_surjective;  // at most 16 kept
  std::vector<PLMap> injective_maps;            // at most 64 kept
};

/// PL maps of x into itself that are affine on the simplices of
/// iterated_subdivision(K, i) and send its vertices to vertices of
/// iterated_subdivision(K, j), for 0 ≤ i ≤ j ≤ depth. Injective simplicial
/// self-maps of one complex permute its cells, so coarser sources are what
/// make non-surjective injective maps reachable.
SearchReport search_selfmaps(const CellSet& x, int depth, std::size_t budget = 2000000);

}  // namespace eulerlab
