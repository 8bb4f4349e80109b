#pragma once

#include <string>
#include <vector>

#include "eulerlab/bits.hpp"
#include "eulerlab/complex.hpp"

namespace eulerlab {

/// Incremental GF(2) row echelon basis; the pivot of a vector is its highest
/// set bit.
class Echelon {
 public:
  explicit Echelon(std::size_t n) : n_(n), row_of_pivot_(n, -1) {}

  /// Adds v if it is independent of the basis; returns whether it was.
  bool add(const Bits& v);
  bool in_span(const Bits& v) const { return reduce(v).none(); }
  Bits reduce(Bits v) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t n_;
  std::vector<Bits> rows_;
  std::vector<int> row_of_pivot_;
};

/// A chain generator: a simplex id of some complex, or a symbolic label.
struct Generator {
  int simplex = -1;
  std::string label;
};

/// Graded Z2 chain complex. boundary(d, j) is the boundary of generator j of
/// degree d, as a vector over the degree d-1 generators.
class ChainComplexZ2 {
 public:
  ChainComplexZ2() = default;
  /// Throws ContractError unless ∂∘∂ = 0 and the sizes are consistent.
  ChainComplexZ2(std::vector<std::vector<Generator>> gens, std::vector<std::vector<Bits>> boundary);

  int top_degree() const { return static_cast<int>(gens_.size()) - 1; }
  std::size_t size(int d) const {
    return d < 0 || d > top_degree() ? 0 : gens_[d].size();
  }
  const Generator& generator(int d, std::size_t j) const { return gens_[d][j]; }
  const Bits& boundary(int d, std::size_t j) const { return bd_[d][j]; }
  Bits boundary_of(int d, const Bits& chain) const;
  Bits zero(int d) const { return Bits(size(d)); }

 private:
  std::vector<std::vector<Generator>> gens_;
  std::vector<std::vector<Bits>> bd_;
};

struct HomologyResult {
  std::vector<int> betti;
  /// Per degree, cycles whose classes form a basis of homology.
  std::vector<std::vector<Bits>> representatives;
  int euler_characteristic() const;
  int betti_at(int d) const { return d >= 0 && d < static_cast<int>(betti.size()) ? betti[d] : 0; }
};

HomologyResult homology(const ChainComplexZ2& c);

/// Rank of the span of the classes of `cycles` in H_d (cycles are not
/// checked).
int class_rank(const ChainComplexZ2& c, int d, const std::vector<Bits>& cycles);
bool is_cycle(const ChainComplexZ2& c, int d, const Bits& chain);
bool is_boundary(const ChainComplexZ2& c, int d, const Bits& chain);

/// Simplicial chain complex of an abstract, face-closed list of simplices
/// (vertex lists); generators keep the list index as provenance.
ChainComplexZ2 abstract_chain_complex(const std::vector<std::vector<int>>& simplices);

/// Borel–Moore chain complex: generators are the members of a, boundaries are
/// truncated to members. Requires a locally closed.
ChainComplexZ2 bm_chain_complex(const CellSet& a);

/// H(a, a∖x) for a vertex x, computed as the Borel–Moore homology of
/// a ∩ (open star of x).
HomologyResult local_homology(const CellSet& a, int x);

/// Chain map with one image vector per source generator.
struct Z2Map {
  ChainComplexZ2 source;
  ChainComplexZ2 target;
  std::vector<std::vector<Bits>> matrix;

  Bits apply(int d, const Bits& chain) const;
  /// Rank of the induced map on H_d.
  int induced_rank(int d) const;
  bool is_chain_map() const;
};

/// Restriction H^BM(x) -> H^BM(u) for u open in x: drops generators outside u.
Z2Map restriction(const CellSet& x, const CellSet& u);

struct LesNode {
  std::string space;  // "Y", "X" or "U"
  int degree = 0;
  int dim = 0;
  int rank_in = 0;   // rank of the map into this node
  int rank_out = 0;  // rank of the map out of this node
  bool exact = false;
};

struct LesReport {
  std::vector<LesNode> nodes;  // ... H_d(Y) -> H_d(X) -> H_d(U) -> H_{d-1}(Y) ...
  bool compositions_vanish = true;
  bool exact = true;
};

/// Long exact sequence of (x, y) with u = x ∖ y; y must be closed in x.
LesReport verify_les(const CellSet& x, const CellSet& y);

struct FundamentalClass {
  bool exists = false;
  int dimension = -1;
  std::vector<int> simplices;  // the top simplices summed (on success)
  int witness = -1;            // a codim-1 simplex with odd incidence (on failure)
  /// On success: the class restricts nonzero to local homology at the
  /// barycenter of the first top simplex (checked after one subdivision).
  bool local_nonzero = false;
  int checked_simplex = -1;
};

FundamentalClass fundamental_class(const CellSet& a);

}  // namespace eulerlab
