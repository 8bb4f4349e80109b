#pragma once

#include <string>
#include <vector>

#include "eulerlab/complex.hpp"
#include "eulerlab/homology.hpp"

namespace eulerlab {

/// Σ over members of (-1)^dim.
long chi_c(const CellSet& a);
/// Homology of a homotopy model of a: the set itself when closed, otherwise
/// the order complex of the member poset (the full subcomplex of the
/// barycentric subdivision spanned by member barycenters).
HomologyResult model_homology(const CellSet& a);
long chi(const CellSet& a);

struct EulerReport {
  /// Indexed by simplex id of the ambient; meaningful on members only.
  std::vector<long> link_chi;
  std::vector<long> local_chi;
  CellSet locus;
  int locus_dim = -1;
  int dim = -1;
  long chi = 0;
  long chi_c = 0;
  bool euler = false;
  bool euler_in_codim1 = false;
  /// χ_c + 1 − χ is odd: the added point of the one-point compactification
  /// passes the parity test.
  bool euler_at_infinity = false;
};

/// Local Euler data at the barycenter of every member (one subdivision).
/// Requires a locally closed.
EulerReport euler_report(const CellSet& a);

/// Integer value per open simplex of the ambient; zero outside `domain`.
struct ConstructibleFn {
  CellSet domain;
  std::vector<long> values;

  static ConstructibleFn indicator(const CellSet& a);
  static ConstructibleFn zero(const ComplexPtr& k);
  long at(int id) const { return values[id]; }
  void set(int id, long v);
};

/// ∫ φ dχ_c.
long integrate(const ConstructibleFn& phi);

/// A simplicial map given by a vertex map.
struct SimplicialMapData {
  ComplexPtr source;
  ComplexPtr target;
  std::vector<int> vertex_map;

  /// Target simplex spanned by the image vertices of a source simplex.
  int image(int simplex) const;
  /// Throws ContractError unless every simplex maps onto a simplex.
  void validate() const;
};

/// (f_*φ)(τ) = Σ_{f(σ) = τ} φ(σ)(-1)^{dim σ - dim τ}.
ConstructibleFn pushforward(const ConstructibleFn& phi, const SimplicialMapData& f);
/// (f^*ψ)(σ) = ψ(f(σ)).
ConstructibleFn pullback(const ConstructibleFn& psi, const SimplicialMapData& f);
/// Λφ at a point of each open simplex: the χ_c-integral of φ over the link,
/// evaluated at the barycenter after one subdivision. For φ = 1_X with X
/// locally closed this is the Euler characteristic of the link of X.
ConstructibleFn link_op(const ConstructibleFn& phi);

/// Polynomial with rational coefficients in variables x0, x1, ...
struct Polynomial {
  struct Term {
    Rational coeff;
    std::vector<int> exponents;
  };
  std::vector<Term> terms;

  static Polynomial constant(const Rational& c);
  /// coeff * x_i^e_i ...
  static Polynomial monomial(const Rational& coeff, std::vector<int> exponents);
  Rational operator()(const QPoint& p) const;
};

/// Σ_i sgn g_i(p) for each point.
std::vector<long> signsum_eval(const std::vector<Polynomial>& polys, const std::vector<QPoint>& points);

struct Sample {
  QPoint point;
  long value = 0;
  /// The sample stands for an open set of points.
  bool generic = false;
};

struct ParityVerdict {
  bool pass = true;
  std::string reason;
  /// Two generic samples with values of different parity, when failing.
  int witness_a = -1;
  int witness_b = -1;
};

/// A sign sum Σ sgn g_i has constant parity on generic points (it is ≡ the
/// number of summands mod 2 there). Fails when generic samples disagree.
ParityVerdict parity_obstruction(const std::vector<Sample>& samples);

}  // namespace eulerlab
