#pragma once

#include <vector>

#include "eulerlab/complex.hpp"

namespace eulerlab {

/// Triangulates cells that form a polyhedral complex (any two meet in a common
/// face) and glues the pieces into one simplicial complex. Vertex ids follow
/// the lexicographic order of the points.
ComplexPtr complex_from_cells(const std::vector<ConvexCell>& cells);

/// For each simplex of fine, the simplex of coarse whose relative interior
/// contains its barycenter. Throws ContractError if a barycenter is outside.
std::vector<int> carriers(const GeomComplex& fine, const GeomComplex& coarse);

struct Overlay {
  ComplexPtr complex;
  Refinement to_k;
  Refinement to_l;
};

/// Common refinement of two complexes with the same support.
Overlay overlay(const ComplexPtr& k, const ComplexPtr& l);

/// Cuts every simplex of k by the hyperplanes {h = 0}.
Refinement refine_by_hyperplanes(const ComplexPtr& k, std::vector<AffineForm> hs);

/// A map that is affine on every simplex of `domain`, given by the images of
/// the domain vertices.
struct AffinePieces {
  ComplexPtr domain;
  std::vector<QPoint> images;

  /// Image of a point of |domain|; throws ContractError outside.
  QPoint operator()(const QPoint& p) const;
  /// Affine form h∘f on aff(simplex id).
  AffineForm pull(int id, const AffineForm& h) const;
};

/// Refinement of f.domain whose every simplex maps into a single closed
/// simplex of `target` (the cells σ ∩ f⁻¹(ρ)). Only simplices of
/// `restrict_to` (a closed set on f.domain, or all when null) are refined; the
/// result covers exactly that set. Throws ContractError if the image of some
/// simplex leaves |target| or the cell count exceeds `budget`.
struct Pullback {
  Refinement refinement;
  /// Images of the vertices of refinement.fine.
  std::vector<QPoint> images;
};
Pullback pullback_refinement(const AffinePieces& f, const ComplexPtr& target,
                             const CellSet* restrict_to = nullptr, std::size_t budget = 200000);

}  // namespace eulerlab
