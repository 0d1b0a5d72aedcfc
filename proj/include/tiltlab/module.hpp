#pragma once

#include "tiltlab/algebra.hpp"

namespace tiltlab {

/// Right module over an Algebra.  Elements are row vectors; the action of a
/// basis element a is m |-> m * action[a], so a |-> action[a] is a unital
/// algebra homomorphism into row-convention matrices.
class Module {
 public:
  Module() = default;
  Module(const Algebra* over, int dim, std::vector<Matrix> action, bool validate = true);

  const Algebra& algebra() const { return *over_; }
  const Algebra* algebra_ptr() const { return over_; }
  int dim() const { return dim_; }
  const Matrix& action(int basis_idx) const { return action_[basis_idx]; }
  Matrix action_of(const LinComb& a) const;

  /// dim M e_x for each vertex x.
  std::vector<int> dim_vector() const;
  /// Matrix of the right action of the idempotent e_x.
  Matrix idempotent_action(int x) const;

  bool is_zero() const { return dim_ == 0; }

 private:
  const Algebra* over_ = nullptr;
  int dim_ = 0;
  std::vector<Matrix> action_;
};

/// Module homomorphism M -> N as a dim(M) x dim(N) matrix acting on row
/// vectors; intertwining means action_M(a) * F = F * action_N(a).
struct ModuleMap {
  const Module* source = nullptr;
  const Module* target = nullptr;
  Matrix matrix;
};

bool is_module_map(const Module& m, const Module& n, const Matrix& f);

/// Basis of Hom_A(M, N), deterministic via rref pivots.
std::vector<Matrix> hom_space(const Module& m, const Module& n);

/// e_x A with the right regular action; basis = basis elements of e_x A in
/// increasing index order.
Module projective_module(const Algebra& a, int x);
/// Simple top of the projective at x (requires a basic directed algebra).
Module simple_module(const Algebra& a, int x);
/// I_x = D(A e_x); basis dual to the basis elements of A e_x in increasing
/// index order.
Module injective_module(const Algebra& a, int x);

/// Direct sum, in the given order.
Module direct_sum(const Algebra& a, const std::vector<const Module*>& parts);

/// Dual D(M) as a right module over the opposite algebra (which the caller
/// supplies to keep pointer ownership simple).
Module dual_module_over_opposite(const Module& m, const Algebra& op);

/// The standard modules over kA_n, as diagram modules.
struct StandardModules {
  Algebra algebra;  // kA_n
  std::vector<Module> p, s, i;  // 1-based families stored 0-based
};
StandardModules standard_modules(int n);

/// Submodule spanned by the given row vectors (closed under the action);
/// basis canonicalized by rref.
struct Submodule {
  Module module;
  Matrix inclusion;  // dim(sub) x dim(ambient)
};
Submodule submodule_from_span(const Module& ambient, const Matrix& span_rows);

/// Quotient by a submodule given as row-span; basis = complement coordinates.
struct QuotientModule {
  Module module;
  Matrix projection;  // dim(ambient) x dim(quotient)
};
QuotientModule quotient_module(const Module& ambient, const Matrix& span_rows);

/// M * rad as a row-span inside M.
Matrix radical_subspace(const Module& m);
/// Socle {v : v * rad = 0} as a row-span.
Matrix socle_subspace(const Module& m);

/// Minimal projective cover: P = sum of e_x A with multiplicities
/// dim (M / M rad) e_x, and the covering map P -> M.
struct Cover {
  std::vector<int> vertices;  // one entry per indecomposable summand
  Module projective;          // realized direct sum
  Matrix map;                 // dim(P) x dim(M), surjective
};
Cover projective_cover(const Module& m);

/// Kernel of a module map, realized as a Submodule of the source.
Submodule kernel_submodule(const Module& source, const Module& target, const Matrix& f);
/// Cokernel target / im(f).
QuotientModule cokernel_module(const Module& source, const Module& target, const Matrix& f);

}  // namespace tiltlab
