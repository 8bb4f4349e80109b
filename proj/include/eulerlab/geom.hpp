#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulerlab {

using Rational = mpq_class;

/// Thrown when an operation's precondition on its inputs is violated. The CLI
/// maps these to exit code 2.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical "p/q" text with gcd(p,q) = 1 and q > 0.
std::string to_string(const Rational& r);
/// num/den in canonical form (mpq_class's two-argument constructor does not
/// canonicalize).
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}
/// Accepts "p/q" or an integer; throws std::invalid_argument otherwise.
Rational parse_rational(const std::string& text);

/// A point of Q^N. Ordering is lexicographic on coordinates.
struct QPoint {
  std::vector<Rational> coords;

  QPoint() = default;
  explicit QPoint(std::size_t n) : coords(n) {}
  explicit QPoint(std::vector<Rational> c) : coords(std::move(c)) {}
  QPoint(std::initializer_list<Rational> c) : coords(c) {}

  std::size_t dim() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  QPoint& operator+=(const QPoint& o);
  QPoint& operator-=(const QPoint& o);
  QPoint& operator*=(const Rational& s);

  friend QPoint operator+(QPoint a, const QPoint& b) { return a += b; }
  friend QPoint operator-(QPoint a, const QPoint& b) { return a -= b; }
  friend QPoint operator*(QPoint a, const Rational& s) { return a *= s; }
  friend bool operator==(const QPoint& a, const QPoint& b) { return a.coords == b.coords; }
  friend bool operator<(const QPoint& a, const QPoint& b) { return a.coords < b.coords; }

  std::string str() const;
};

inline std::ostream& operator<<(std::ostream& os, const QPoint& p) { return os << p.str(); }

/// Centroid of a nonempty point list.
QPoint centroid(std::span<const QPoint> pts);

/// x -> <a, x> + c on Q^N.
struct AffineForm {
  std::vector<Rational> a;
  Rational c;

  Rational operator()(const QPoint& p) const;
  AffineForm& operator+=(const AffineForm& o);
  AffineForm operator*(const Rational& s) const;
  bool is_constant() const;
  /// Scales so the first nonzero linear coefficient is 1; used to deduplicate
  /// hyperplanes.
  AffineForm normalized() const;
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
  friend bool operator<(const AffineForm& x, const AffineForm& y) {
    return x.a != y.a ? x.a < y.a : x.c < y.c;
  }
};

namespace linalg {

using Matrix = std::vector<std::vector<Rational>>;

/// Rank of a rational matrix given as rows.
int rank(Matrix m);
/// Affine rank (dimension of the affine hull) of a point set; -1 if empty.
int affine_rank(std::span<const QPoint> pts);
/// Some solution of m x = b, or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b);
/// Basis of {x : m x = 0}, where m has `cols` columns.
std::vector<std::vector<Rational>> nullspace(const Matrix& m, std::size_t cols);

}  // namespace linalg

/// A simplex given by its (affinely independent) vertices.
struct GeomSimplex {
  std::vector<QPoint> vertices;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  std::size_t ambient_dim() const { return vertices.empty() ? 0 : vertices[0].dim(); }
  bool is_nondegenerate() const;
};

/// Affine data describing aff(s) and barycentric coordinates of s, extended to
/// all of Q^N.
struct SimplexFrame {
  /// Affine forms vanishing exactly on aff(s); empty if s is full-dimensional.
  std::vector<AffineForm> equations;
  /// bary[i](x) is the i-th barycentric coordinate for x in aff(s).
  std::vector<AffineForm> bary;

  explicit SimplexFrame(const GeomSimplex& s);

  bool in_affine_hull(const QPoint& p) const;
  std::vector<Rational> coordinates(const QPoint& p) const;
};

/// The affine form sum_i values[i] * forms[i]. With forms the barycentric forms
/// of a simplex and values = h(f(v_i)), this is h composed with the affine map
/// f determined by the vertex images.
AffineForm combine(const std::vector<AffineForm>& forms, const std::vector<Rational>& values);

/// Barycentric coordinates of p relative to s, or nullopt when p is off aff(s).
std::optional<std::vector<Rational>> barycentric(const GeomSimplex& s, const QPoint& p);

/// Convex polytope carried as its extreme points.
struct ConvexCell {
  std::vector<QPoint> vertices;
  int dimension = -1;

  bool empty() const { return vertices.empty(); }
};

/// Convex polytope under successive halfspace clipping. Each vertex carries the
/// set of constraints it is tight on, which gives edge adjacency without a
/// facet lattice.
class ClipPolytope {
 public:
  explicit ClipPolytope(const GeomSimplex& s);

  /// Intersects with {h >= 0}.
  void clip(const AffineForm& h);
  /// Intersects with {h == 0}.
  void restrict_to(const AffineForm& h);
  /// Current dimension (affine rank of the vertices), -1 if empty.
  int dimension() const;

  bool empty() const { return verts_.empty(); }
  ConvexCell cell() const;

 private:
  bool adjacent(std::size_t u, std::size_t v) const;

  std::vector<QPoint> verts_;
  std::vector<std::vector<int>> tight_;  // sorted constraint ids
  int next_id_ = 0;
};

/// Exact convex intersection s ∩ t, or an empty cell.
ConvexCell clip(const GeomSimplex& s, const GeomSimplex& t);

enum class Apex { LexMin, LexMax };

/// Pulling triangulation: cone from the lexicographically smallest vertex over
/// the triangulated facets that miss it. Returns the maximal simplices with
/// vertices in lexicographic order. A global vertex order makes the
/// triangulations of two cells agree on a shared face.
std::vector<GeomSimplex> triangulate_cell(const ConvexCell& c, Apex apex = Apex::LexMin);

/// Facets of a cell (as vertex subsets), found by checking supporting
/// hyperplanes through vertex subsets in a coordinate projection.
std::vector<ConvexCell> facets(const ConvexCell& c);

/// d-volume of a d-simplex after projecting onto the coordinates `coords`
/// (|coords| == d). Volumes inside one affine subspace are comparable when the
/// same coordinates are used.
Rational projected_volume(const GeomSimplex& s, const std::vector<std::size_t>& coords);
/// Coordinate indices onto which the affine hull of pts projects injectively.
std::vector<std::size_t> projection_coords(std::span<const QPoint> pts);

}  // namespace eulerlab
