#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "eulerlab/bits.hpp"
#include "eulerlab/geom.hpp"

namespace eulerlab {

class GeomComplex;
using ComplexPtr = std::shared_ptr<const GeomComplex>;

/// Finite simplicial complex with exact rational vertex coordinates.
///
/// Simplices are sorted vertex-id lists, stored in canonical order (by
/// dimension, then lexicographically); a simplex id is its index in that order.
class GeomComplex {
 public:
  /// Builds a complex from the listed simplices. With close_faces the face
  /// closure is added; otherwise a missing face is an error. Throws
  /// ContractError on degenerate simplices or bad vertex ids.
  static ComplexPtr create(std::vector<QPoint> vertices, std::vector<std::vector<int>> simplices,
                           bool close_faces = true);

  std::size_t ambient_dim() const { return ambient_dim_; }
  int dimension() const { return dimension_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t size() const { return simplices_.size(); }

  const std::vector<QPoint>& vertices() const { return vertices_; }
  const QPoint& vertex(int v) const { return vertices_[v]; }
  const std::vector<int>& simplex(int id) const { return simplices_[id]; }
  int dim(int id) const { return static_cast<int>(simplices_[id].size()) - 1; }
  /// Id of the simplex with the given (sorted) vertex list.
  std::optional<int> find(const std::vector<int>& verts) const;
  /// Id of the 0-simplex {v}.
  int vertex_simplex(int v) const { return vertex_simplex_[v]; }

  /// Codimension-one faces.
  const std::vector<int>& facets(int id) const { return facets_[id]; }
  /// Simplices having `id` as a codimension-one face.
  const std::vector<int>& cofacets(int id) const { return cofacets_[id]; }
  /// All simplices containing vertex v (the closed-star generators).
  const std::vector<int>& vertex_star(int v) const { return vertex_star_[v]; }
  /// All faces of `id`, including itself, in canonical order.
  std::vector<int> faces(int id) const;
  /// All simplices having `id` as a face, including itself.
  std::vector<int> cofaces(int id) const;
  bool is_face(int sigma, int tau) const;
  std::vector<int> maximal() const;

  GeomSimplex geom(int id) const;
  QPoint barycenter(int id) const;
  const SimplexFrame& frame(int id) const;

  /// Verifies that open simplices are pairwise disjoint (a geometric
  /// realization, not just an abstract complex). Quadratic; used by loaders
  /// and tests.
  bool check_disjoint(std::string* why = nullptr) const;

 private:
  GeomComplex() = default;

  std::size_t ambient_dim_ = 0;
  int dimension_ = -1;
  std::vector<QPoint> vertices_;
  std::vector<std::vector<int>> simplices_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> vertex_simplex_;
  std::vector<std::vector<int>> facets_;
  std::vector<std::vector<int>> cofacets_;
  std::vector<std::vector<int>> vertex_star_;
  mutable std::mutex frame_mu_;
  mutable std::vector<std::shared_ptr<const SimplexFrame>> frames_;
};

/// A union of open simplices of an ambient complex.
class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(ComplexPtr k) : k_(std::move(k)), m_(k_->size()) {}
  CellSet(ComplexPtr k, Bits members);
  static CellSet from_ids(ComplexPtr k, const std::vector<int>& ids);
  static CellSet full(ComplexPtr k);

  const ComplexPtr& ambient() const { return k_; }
  const Bits& members() const { return m_; }
  bool contains(int id) const { return m_.test(id); }
  std::size_t count() const { return m_.count(); }
  bool empty() const { return m_.none(); }
  std::vector<int> ids() const { return m_.indices(); }
  /// Largest member dimension, -1 when empty.
  int dimension() const;

  CellSet operator&(const CellSet& o) const;
  CellSet operator|(const CellSet& o) const;
  CellSet operator-(const CellSet& o) const;
  CellSet complement() const;
  bool subset_of(const CellSet& o) const;
  friend bool operator==(const CellSet& a, const CellSet& b) {
    return a.k_ == b.k_ && a.m_ == b.m_;
  }

  CellSet closure() const;
  /// Members whose whole open star (all cofaces) lies in the set.
  CellSet interior() const;
  CellSet frontier() const;

  bool is_closed() const;
  bool is_open() const;
  /// Locally closed: open in its closure, equivalently the frontier is closed.
  bool is_locally_closed() const;
  /// this ⊆ x and closed in the subspace topology of x.
  bool is_closed_in(const CellSet& x) const;
  /// this ⊆ x and open in the subspace topology of x.
  bool is_open_in(const CellSet& x) const;

  std::string str() const;

 private:
  void same_ambient(const CellSet& o) const;

  ComplexPtr k_;
  Bits m_;
};

/// All cofaces of simplex `id`.
CellSet open_star(const ComplexPtr& k, int id);
/// Connected components of a. Two members are adjacent when one is a face of
/// the other.
std::vector<CellSet> components(const CellSet& a);
/// Local dimension of a at (a point in the relative interior of) simplex id:
/// the largest dimension of a member having id as a face; -1 if none.
int dim_at(const CellSet& a, int id);
/// Members of a that are faces of d-dimensional members.
CellSet pure_part(const CellSet& a, int d);

/// A complex refining `coarse`: every open fine simplex lies in the open coarse
/// simplex carrier[i].
struct Refinement {
  ComplexPtr coarse;
  ComplexPtr fine;
  std::vector<int> carrier;

  static Refinement identity(ComplexPtr k);
  CellSet transport(const CellSet& a) const;
  /// The coarse set with the same point set, if a is a union of full carriers.
  std::optional<CellSet> coarsen(const CellSet& a) const;
  /// This followed by `next` (next.coarse must be this->fine).
  Refinement then(const Refinement& next) const;
};

/// Vertex i of the subdivision is the barycenter of simplex i of k; the
/// subdivision simplices are the chains of the face poset, carried by their top
/// element.
Refinement barycentric_subdivide(const ComplexPtr& k);
Refinement iterated_subdivision(const ComplexPtr& k, int depth);

/// A closed subset viewed as a complex of its own.
struct Subcomplex {
  ComplexPtr ambient;
  ComplexPtr complex;
  std::vector<int> vertex_to_ambient;
  std::vector<int> simplex_to_ambient;
  std::vector<int> ambient_to_simplex;  // -1 where absent

  /// Transport a set living in the ambient (restricted to the subcomplex).
  CellSet restrict(const CellSet& a) const;
  /// Push a set of the subcomplex back to the ambient.
  CellSet extend(const CellSet& a) const;
};
Subcomplex subcomplex(const CellSet& closed);

/// Link of a vertex. `complex` is lk(x) in the ambient, with the original
/// coordinates; `set` holds the link simplices t with t ∪ {x} in a.
struct Link {
  ComplexPtr complex;
  CellSet set;
  std::vector<int> vertex_to_ambient;
};
Link link_of(int x, const CellSet& a);

/// Germ of a set at a vertex; represented by the closed star of the base.
struct Germ {
  std::string name;
  int base = -1;
  CellSet set;

  const ComplexPtr& ambient() const { return set.ambient(); }
};

/// Result of point location: the open simplex containing the point and the
/// barycentric coordinates with respect to that simplex (all positive).
struct Location {
  int simplex = -1;
  std::vector<Rational> bary;
  bool outside() const { return simplex < 0; }
};
Location locate(const QPoint& p, const GeomComplex& k);

}  // namespace eulerlab
