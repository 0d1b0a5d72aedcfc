#pragma once

#include "tiltlab/module.hpp"

namespace tiltlab {

/// Matrix with entries in the algebra, representing a map
/// (+)_j e_{x_j} A -> (+)_i e_{y_i} A by left multiplication: entry (i, j)
/// lies in e_{y_i} A e_{x_j}.
struct AlgMatrix {
  int rows = 0, cols = 0;
  std::vector<LinComb> e;

  AlgMatrix() = default;
  AlgMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}
  LinComb& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
  const LinComb& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
  bool is_zero() const;
  bool operator==(const AlgMatrix& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
};

AlgMatrix alg_mul(const Algebra& a, const AlgMatrix& lhs, const AlgMatrix& rhs);
AlgMatrix alg_add(const AlgMatrix& lhs, const AlgMatrix& rhs);
AlgMatrix alg_scale(const AlgMatrix& m, const Rat& c);

/// Realize an AlgMatrix as the module-map matrix between the realized
/// projective sums (basis: concatenated row bases of the vertices).
Matrix alg_to_module_map(const Algebra& a, const std::vector<int>& src_vertices,
                         const std::vector<int>& tgt_vertices, const AlgMatrix& m);
/// Inverse: read an AlgMatrix off a module map between realized projectives.
AlgMatrix module_map_to_alg(const Algebra& a, const std::vector<int>& src_vertices,
                            const std::vector<int>& tgt_vertices, const Matrix& f);

/// Bounded complex of finite direct sums of indecomposable projectives
/// e_x A, with differentials as AlgMatrices.  Cohomological convention:
/// d^n : X^n -> X^{n+1}.
class ProjComplex {
 public:
  ProjComplex() = default;
  ProjComplex(const Algebra* a, int lo, std::vector<std::vector<int>> terms, std::vector<AlgMatrix> diffs);

  static ProjComplex stalk(const Algebra& a, std::vector<int> vertices, int degree);
  /// The regular module A as a stalk in degree 0.
  static ProjComplex regular_stalk(const Algebra& a);
  static ProjComplex zero(const Algebra& a);

  const Algebra& algebra() const { return *alg_; }
  const Algebra* algebra_ptr() const { return alg_; }
  bool is_zero() const { return terms_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }

  /// Summand vertex list at the given absolute degree (empty when absent).
  std::vector<int> term(int degree) const;
  /// Differential X^degree -> X^{degree+1} (zero-shaped when absent).
  AlgMatrix diff(int degree) const;

  int term_module_dim(int degree) const;

  bool operator==(const ProjComplex& o) const;

 private:
  const Algebra* alg_ = nullptr;
  int lo_ = 0;
  std::vector<std::vector<int>> terms_;
  std::vector<AlgMatrix> diffs_;

  void validate() const;
  void normalize();
};

/// shift(X, r)^n = X^{n+r}; the differential picks up (-1)^r.
ProjComplex shift(const ProjComplex& x, int r);
ProjComplex direct_sum_complex(const ProjComplex& x, const ProjComplex& y);

/// Bounded complex of k-vector spaces.
struct VectComplex {
  int lo = 0;
  std::vector<int> dims;
  std::vector<Matrix> diffs;  // diffs[k]: dims[k] x dims[k+1], row convention

  int hi() const { return lo + static_cast<int>(dims.size()) - 1; }
  int dim_at(int degree) const;
  Matrix diff_at(int degree) const;
  void validate() const;
  int cohomology_dim(int degree) const;
};

/// Tensor product of vector-space complexes with the Koszul sign.
VectComplex vect_tensor(const VectComplex& k, const VectComplex& l);

/// Bounded complex of explicit modules.
struct ModComplex {
  const Algebra* alg = nullptr;
  int lo = 0;
  std::vector<Module> terms;
  std::vector<Matrix> diffs;  // diffs[k]: terms[k] -> terms[k+1]

  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  void validate() const;
  std::vector<int> cohomology_dims() const;  // aligned with terms
  int cohomology_dim(int degree) const;
};

ModComplex realize(const ProjComplex& x);
std::vector<int> cohomology_dims(const ProjComplex& x);

/// Layout bookkeeping for tensor products of complexes.
struct TensorLayout {
  struct Block {
    int p, q;        // bidegree, p + q = degree
    int offset;      // first summand index inside the product term
    int na, nb;      // summand counts of X^p and Y^q
  };
  int lo = 0;
  std::vector<std::vector<Block>> blocks;  // per degree index
};

/// X (over A) tensor Y (over B) as a complex over ab = tensor_algebra(A, B).
/// d(x tensor y) = dx tensor y + (-1)^p x tensor dy.
ProjComplex tensor_complex(const ProjComplex& x, const ProjComplex& y, const Algebra& ab,
                           TensorLayout* layout = nullptr);

/// Total Hom complex Hom*(P, X): degree n collects Hom(P^p, X^{n+p}) with
/// differential (df)^p = d_X f^p - (-1)^n f^{p+1} d_P^p.
struct HomBlock {
  int p;                  // source degree
  int j;                  // source summand (of P^p)
  int i;                  // target summand (of X^{n+p})
  std::vector<int> cell;  // algebra basis of Hom(e_{x_j} A, e_{y_i} A) = e_{y_i} A e_{x_j}
  int offset;             // coordinate offset inside the degree
};

struct HomComplex {
  ProjComplex source, target;
  VectComplex vc;
  std::vector<std::vector<HomBlock>> blocks;  // per degree index of vc

  int block_degree_index(int degree) const { return degree - vc.lo; }
};

HomComplex hom_complex(const ProjComplex& p, const ProjComplex& x);

/// Degree-0 chain map f : P -> X, components stored per degree of P.
struct ChainMap {
  ProjComplex source, target;
  std::vector<AlgMatrix> comps;  // comps[k] : P^{P.lo+k} -> X^{P.lo+k}

  AlgMatrix comp_at(int degree) const;
};

ChainMap identity_chain_map(const ProjComplex& x);
ChainMap compose_chain_maps(const ChainMap& f, const ChainMap& g);  // f after g
bool is_chain_map(const ChainMap& f);

/// Coordinates of a chain map inside degree 0 of hom_complex(source, target).
std::vector<Rat> chain_map_coords(const HomComplex& hc, const ChainMap& f);
ChainMap coords_to_chain_map(const HomComplex& hc, const std::vector<Rat>& v);

/// dim H^r(Hom*(T, X)) = dim Hom_{K(A)}(T, X[r]).
int derived_hom_dim(const ProjComplex& t, const ProjComplex& x, int r);
/// All r with possibly nonzero Hom, as (r, dim) pairs over the given range.
std::vector<std::pair<int, int>> derived_hom_table(const ProjComplex& t, const ProjComplex& x, int r_lo, int r_hi);

/// Canonical basis of Hom_{K(A)}(P, X): representatives are honest chain
/// maps; the quotient basis is fixed by rref pivots so structure constants
/// are reproducible.
struct HomotopyBasis {
  HomComplex hc;
  std::vector<ChainMap> reps;
  RowSpace boundary_space;  // rref of the coboundaries at degree 0
  Matrix rep_normal_forms;  // rows: reps reduced against the boundaries

  int dim() const { return static_cast<int>(reps.size()); }
  /// Coordinates of [f] in the basis; throws if f is not a cocycle.
  std::vector<Rat> reduce(const ChainMap& f) const;
};

HomotopyBasis homotopy_basis(const ProjComplex& p, const ProjComplex& x);

/// Minimal projective resolution of a module, ending at degree `top_degree`.
struct Resolution {
  ProjComplex complex;
  Matrix augmentation;  // realize(top term) -> M
};
Resolution projective_resolution_of(const Module& m, int max_len, int top_degree = 0);
/// Spec operation: resolution quasi-isomorphic to M in degree 0.
ProjComplex projective_resolution(const Module& m, int max_len);

/// Strips contractible summand pairs (Gaussian elimination of complexes);
/// output is homotopy equivalent to the input.
ProjComplex minimize(const ProjComplex& x);

/// Bounded complex of modules -> quasi-isomorphic bounded complex of
/// projectives (twisted-complex construction over term resolutions).
ProjComplex resolve_to_projective(const ModComplex& c, int max_len);

/// Global dimension via minimal resolutions of the simples; throws if any
/// resolution exceeds max_len.
int global_dimension(const Algebra& a, int max_len);

/// Serre/Nakayama functor nu = - (x)_A D(A): termwise injectives.
ModComplex nakayama_modules(const ProjComplex& x);
/// nu as a ProjComplex again (re-resolved); requires finite global dimension.
ProjComplex nakayama(const ProjComplex& x, int max_len = 64);
/// Inverse Serre functor on perfect complexes.
ProjComplex nakayama_inverse(const ProjComplex& x, int max_len = 64);

/// tau^- = Tr D on modules over a hereditary algebra; zero exactly on
/// injectives.  Throws if the algebra is not hereditary.
Module tau_inverse(const Module& m);

}  // namespace tiltlab
