#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tiltlab/matrix.hpp"

namespace tiltlab {

/// Sparse linear combination of basis elements, sorted by index.
using LinComb = std::vector<std::pair<int, Rat>>;

LinComb lc_single(int idx, Rat c = Rat(1));
LinComb lc_add(const LinComb& a, const LinComb& b);
LinComb lc_scale(const LinComb& a, const Rat& c);
bool lc_is_zero(const LinComb& a);
bool lc_equal(const LinComb& a, const LinComb& b);

/// Finite quiver; arrows are (source, target, label).
struct Quiver {
  int vertex_count = 0;
  struct Arrow {
    int source;
    int target;
    std::string label;
  };
  std::vector<Arrow> arrows;

  void validate() const;
  bool is_acyclic() const;
  bool operator==(const Quiver& o) const;
};

/// Basic finite-dimensional associative unital algebra, given by a labeled
/// basis, structure constants, and a complete set of orthogonal primitive
/// idempotents.  The basis is directed: every basis element b satisfies
/// e_x b e_y = b for exactly one pair of idempotents (x, y).
class Algebra {
 public:
  Algebra() = default;
  /// Validates associativity, the unit, idempotent axioms and directedness.
  Algebra(std::vector<std::string> basis_labels, std::vector<std::vector<LinComb>> mult, LinComb unit,
          std::vector<std::vector<int>> idempotents);

  int dim() const { return static_cast<int>(labels_.size()); }
  int vertex_count() const { return static_cast<int>(idempotents_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const LinComb& unit() const { return unit_; }
  const std::vector<std::vector<int>>& idempotents() const { return idempotents_; }

  /// Vertex indices with e_src b e_tgt = b.
  int src(int basis_idx) const { return src_[basis_idx]; }
  int tgt(int basis_idx) const { return tgt_[basis_idx]; }

  const LinComb& mult(int a, int b) const { return mult_[a][b]; }
  LinComb mul(const LinComb& a, const LinComb& b) const;

  /// Basis indices of e_x A e_y in increasing order.
  std::vector<int> cell_basis(int x, int y) const;
  /// Basis indices of e_x A (the projective at x) in increasing order.
  std::vector<int> row_basis(int x) const;
  std::vector<int> col_basis(int y) const;

  /// Indices of the non-idempotent-part basis elements; checks nilpotency.
  /// Equals the Jacobson radical for directed algebras.
  std::vector<int> radical() const;
  std::vector<int> radical_squared() const;
  /// Smallest k with rad^k = 0.
  int radical_nilpotency() const;

  Quiver gabriel_quiver() const;

  bool structurally_equal(const Algebra& o) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<LinComb>> mult_;
  LinComb unit_;
  std::vector<std::vector<int>> idempotents_;
  std::vector<int> src_, tgt_;

  void validate();
};

/// Path algebra of an acyclic quiver.  Basis: all directed paths including
/// the length-0 path at each vertex; product is concatenation (left factor
/// first) or zero.  Path p from x to y lies in e_x A e_y.
Algebra path_algebra(const Quiver& q);

/// Linear A_n quiver 1 -> 2 -> ... -> n (vertices 0-based internally).
Quiver linear_quiver(int n);
/// Path algebra of linear A_n; basis element for the path i -> j (1-based,
/// i <= j) is at a deterministic index, see line_basis_index.
Algebra kAn(int n);
/// Index of the path i -> j (1-based) in the basis of kAn(n).
int kAn_basis_index(int n, int i, int j);

/// A(n, ell): kA_n modulo all paths of length ell (= m+1).  Basis eps_{ij}
/// for i <= j <= min(n, i+m), with eps_{ij} eps_{pq} = eps_{iq} when p = j
/// and q <= i+m, else 0.
Algebra truncated_line_algebra(int n, int ell);
int truncated_line_index(int n, int ell, int i, int j);

/// Tensor product algebra; basis pairs (a, b) at index a*dimB + b, vertex
/// pairs (x, y) at index x*nB + y.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);

/// T_n(L) = L tensor kA_n, upper triangular n x n matrices over L.
Algebra triangular_matrix_algebra(const Algebra& l, int n);

/// Opposite algebra: same basis and idempotents, reversed multiplication.
Algebra opposite_algebra(const Algebra& a);

/// One-dimensional algebra k.
Algebra base_field_algebra();

/// Generalized matrix ring input: n x n grid of bimodule cells over the
/// diagonal algebras, with explicit composition maps.
struct GmrInput {
  /// Diagonal algebras Lambda_1..Lambda_n.
  std::vector<Algebra> diagonal;
  /// cell_dim[i][j]: dimension of M_ij for i != j (diagonal read from
  /// `diagonal`); zero-size cells omitted from products.
  std::vector<std::vector<int>> cell_dim;
  /// compose[{i,j,l}][u][v]: expansion of m_u * m_v in the basis of cell
  /// (i,l), for m_u in cell (i,j), m_v in cell (j,l).  Pairs with i==j==l
  /// come from `diagonal` and must not appear here.  Missing entries mean
  /// the composition is zero.
  std::map<std::tuple<int, int, int>, std::vector<std::vector<LinComb>>> compose;
  /// cell_src[i][j][u] / cell_tgt[i][j][u]: idempotent (within Lambda_i,
  /// Lambda_j) supporting basis element u of cell (i,j), for directedness.
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> cell_vertices;
};

/// Assembles the grid into an Algebra.  Cells across incompatible indices
/// multiply to zero.  Throws (reporting a witness triple) if the composition
/// data is not associative.
Algebra generalized_matrix_ring(const GmrInput& in);

/// Offsets of cell bases within the assembled generalized matrix ring.
struct GmrLayout {
  std::vector<std::vector<int>> offset;  // offset[i][j]
  std::vector<std::vector<int>> dim;     // dim[i][j]
};
GmrLayout gmr_layout(const GmrInput& in);

/// Dual bimodule D(L) = Hom_k(L, k) with (a phi b)(x) = phi(b x a); basis
/// phi_b dual to the basis of L.  Returned as cell data for grid builders:
/// phi_b sits in e_{tgt(b)} DL e_{src(b)}.
struct DualBimodule {
  int dim;
  /// left[a][u]: expansion of a . phi_u in the phi basis; right[u][a]: phi_u . a.
  std::vector<std::vector<LinComb>> left;
  std::vector<std::vector<LinComb>> right;
  std::vector<std::pair<int, int>> vertices;  // (left idempotent, right idempotent) per phi_u
};
DualBimodule dual_bimodule(const Algebra& l);

/// The (n-1)-replicated algebra: n diagonal copies of L with D(L) on the
/// first superdiagonal.
Algebra replicated_algebra(const Algebra& l, int n);

/// Layout of replicated_algebra: basis index of e^{(s)}_b (copy s, basis b
/// of L) and phi^{(s)}_b (copy s, dual basis b).
struct ReplicatedLayout {
  int lambda_dim = 0;
  int copies = 0;
  int lambda_index(int s, int b) const;  // s in [0, copies)
  int phi_index(int s, int b) const;     // s in [0, copies-1)
};
ReplicatedLayout replicated_layout(const Algebra& l, int n);

}  // namespace tiltlab
