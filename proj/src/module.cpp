#include "tiltlab/module.hpp"

#include <algorithm>

namespace tiltlab {

Module::Module(const Algebra* over, int dim, std::vector<Matrix> action, bool validate)
    : over_(over), dim_(dim), action_(std::move(action)) {
  if (static_cast<int>(action_.size()) != over_->dim())
    throw std::invalid_argument("Module: one action matrix per algebra basis element required");
  for (const auto& m : action_)
    if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("Module: action matrix shape");
  if (!validate || dim_ == 0) return;
  if (!action_of(over_->unit()).is_identity()) throw std::invalid_argument("Module: unit does not act as identity");
  int n = over_->dim();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Matrix lhs = action_[a] * action_[b];
      Matrix rhs = action_of(over_->mult(a, b));
      if (!(lhs == rhs)) throw std::invalid_argument("Module: action does not respect structure constants");
    }
}

Matrix Module::action_of(const LinComb& a) const {
  Matrix out(dim_, dim_);
  for (const auto& [i, c] : a) out = out + action_[i].scaled(c);
  return out;
}

std::vector<int> Module::dim_vector() const {
  std::vector<int> dv(over_->vertex_count());
  for (int x = 0; x < over_->vertex_count(); ++x) dv[x] = rank(idempotent_action(x));
  return dv;
}

Matrix Module::idempotent_action(int x) const {
  LinComb e;
  for (int b : over_->idempotents()[x]) e = lc_add(e, lc_single(b));
  return action_of(e);
}

bool is_module_map(const Module& m, const Module& n, const Matrix& f) {
  if (f.rows() != m.dim() || f.cols() != n.dim()) return false;
  for (int a = 0; a < m.algebra().dim(); ++a)
    if (!(m.action(a) * f == f * n.action(a))) return false;
  return true;
}

std::vector<Matrix> hom_space(const Module& m, const Module& n) {
  if (m.algebra_ptr() != n.algebra_ptr() && !m.algebra().structurally_equal(n.algebra()))
    throw std::invalid_argument("hom_space: modules over different algebras");
  int dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0) return {};
  // unknowns F (dm x dn), row-major; equations action_M(a) F - F action_N(a) = 0
  int nv = dm * dn;
  int na = m.algebra().dim();
  Matrix sys(na * dm * dn, nv);
  int row = 0;
  for (int a = 0; a < na; ++a) {
    const Matrix& am = m.action(a);
    const Matrix& an = n.action(a);
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dn; ++j) {
        // (am * F)_{ij} = sum_k am[i][k] F[k][j];  (F * an)_{ij} = sum_k F[i][k] an[k][j]
        for (int k = 0; k < dm; ++k)
          if (am.at(i, k) != 0) sys.at(row, k * dn + j) += am.at(i, k);
        for (int k = 0; k < dn; ++k)
          if (an.at(k, j) != 0) sys.at(row, i * dn + k) -= an.at(k, j);
        ++row;
      }
  }
  std::vector<Matrix> basis;
  for (const Matrix& v : kernel_basis(sys)) {
    Matrix f(dm, dn);
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dn; ++j) f.at(i, j) = v.at(i * dn + j, 0);
    basis.push_back(std::move(f));
  }
  return basis;
}

Module projective_module(const Algebra& a, int x) {
  std::vector<int> basis = a.row_basis(x);
  int d = static_cast<int>(basis.size());
  std::vector<int> pos(a.dim(), -1);
  for (int k = 0; k < d; ++k) pos[basis[k]] = k;
  std::vector<Matrix> action(a.dim(), Matrix(d, d));
  for (int g = 0; g < a.dim(); ++g)
    for (int k = 0; k < d; ++k)
      for (const auto& [i, c] : a.mult(basis[k], g)) action[g].at(k, pos[i]) = c;
  return Module(&a, d, std::move(action));
}

Module simple_module(const Algebra& a, int x) {
  std::vector<Matrix> action(a.dim(), Matrix(1, 1));
  for (int b : a.idempotents()[x]) action[b].at(0, 0) = 1;
  return Module(&a, 1, std::move(action));
}

Module injective_module(const Algebra& a, int x) {
  std::vector<int> basis = a.col_basis(x);  // basis of A e_x
  int d = static_cast<int>(basis.size());
  std::vector<int> pos(a.dim(), -1);
  for (int k = 0; k < d; ++k) pos[basis[k]] = k;
  // (phi_b . g)(v) = phi_b(g v):  phi_b . g = sum_c [coef of b in g c] phi_c
  std::vector<Matrix> action(a.dim(), Matrix(d, d));
  for (int g = 0; g < a.dim(); ++g)
    for (int kc = 0; kc < d; ++kc)
      for (const auto& [i, coef] : a.mult(g, basis[kc]))
        if (pos[i] >= 0) action[g].at(pos[i], kc) = coef;
  return Module(&a, d, std::move(action));
}

Module direct_sum(const Algebra& a, const std::vector<const Module*>& parts) {
  int d = 0;
  for (const Module* p : parts) d += p->dim();
  std::vector<Matrix> action(a.dim(), Matrix(d, d));
  for (int g = 0; g < a.dim(); ++g) {
    int off = 0;
    for (const Module* p : parts) {
      for (int i = 0; i < p->dim(); ++i)
        for (int j = 0; j < p->dim(); ++j) action[g].at(off + i, off + j) = p->action(g).at(i, j);
      off += p->dim();
    }
  }
  return Module(&a, d, std::move(action), false);
}

Module dual_module_over_opposite(const Module& m, const Algebra& op) {
  std::vector<Matrix> action(op.dim());
  for (int g = 0; g < op.dim(); ++g) action[g] = m.action(g).transpose();
  return Module(&op, m.dim(), std::move(action));
}

StandardModules standard_modules(int n) {
  StandardModules out;
  out.algebra = kAn(n);
  const Algebra& a = out.algebra;
  for (int v = 0; v < n; ++v) {
    out.p.push_back(projective_module(a, v));
    out.s.push_back(simple_module(a, v));
    out.i.push_back(injective_module(a, v));
  }
  return out;
}

Submodule submodule_from_span(const Module& ambient, const Matrix& span_rows) {
  RowSpace rs(ambient.dim());
  for (int i = 0; i < span_rows.rows(); ++i) {
    std::vector<Rat> v(ambient.dim());
    for (int j = 0; j < ambient.dim(); ++j) v[j] = span_rows.at(i, j);
    rs.insert(std::move(v));
  }
  // close under the action (callers normally pass closed spans already)
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Rat>> rows = rs.rows();
    for (const auto& r : rows)
      for (int g = 0; g < ambient.algebra().dim(); ++g) {
        std::vector<Rat> w(ambient.dim(), Rat(0));
        for (int j = 0; j < ambient.dim(); ++j)
          if (r[j] != 0)
            for (int k = 0; k < ambient.dim(); ++k) w[k] += r[j] * ambient.action(g).at(j, k);
        if (rs.insert(std::move(w))) grew = true;
      }
  }
  int d = rs.rank();
  Matrix incl(d, ambient.dim());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < ambient.dim(); ++j) incl.at(i, j) = rs.rows()[i][j];
  // induced action: rows of incl * action land in the row space; solve for
  // coordinates against the rref rows (pivot columns give them directly)
  std::vector<Matrix> action(ambient.algebra().dim(), Matrix(d, d));
  for (int g = 0; g < ambient.algebra().dim(); ++g) {
    Matrix img = incl * ambient.action(g);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) action[g].at(i, k) = img.at(i, rs.pivots()[k]);
  }
  Submodule sub;
  sub.module = Module(ambient.algebra_ptr(), d, std::move(action), false);
  sub.inclusion = std::move(incl);
  return sub;
}

QuotientModule quotient_module(const Module& ambient, const Matrix& span_rows) {
  Submodule sub = submodule_from_span(ambient, span_rows);
  const Matrix& w = sub.inclusion;  // rref rows of the submodule
  RowSpace rs(ambient.dim());
  for (int i = 0; i < w.rows(); ++i) {
    std::vector<Rat> v(ambient.dim());
    for (int j = 0; j < ambient.dim(); ++j) v[j] = w.at(i, j);
    rs.insert(std::move(v));
  }
  std::vector<bool> is_pivot(ambient.dim(), false);
  for (int p : rs.pivots()) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < ambient.dim(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  int d = static_cast<int>(free_cols.size());

  // projection: reduce each ambient basis vector mod the subspace, then read
  // off the free coordinates
  Matrix proj(ambient.dim(), d);
  for (int i = 0; i < ambient.dim(); ++i) {
    std::vector<Rat> v(ambient.dim(), Rat(0));
    v[i] = 1;
    v = rs.reduce(std::move(v));
    for (int k = 0; k < d; ++k) proj.at(i, k) = v[free_cols[k]];
  }
  std::vector<Matrix> action(ambient.algebra().dim(), Matrix(d, d));
  for (int g = 0; g < ambient.algebra().dim(); ++g) {
    // representative of quotient basis k is ambient e_{free_cols[k]}
    for (int k = 0; k < d; ++k) {
      std::vector<Rat> v(ambient.dim(), Rat(0));
      for (int j = 0; j < ambient.dim(); ++j) v[j] = ambient.action(g).at(free_cols[k], j);
      v = rs.reduce(std::move(v));
      for (int l = 0; l < d; ++l) action[g].at(k, l) = v[free_cols[l]];
    }
  }
  QuotientModule q;
  q.module = Module(ambient.algebra_ptr(), d, std::move(action), false);
  q.projection = std::move(proj);
  return q;
}

Matrix radical_subspace(const Module& m) {
  std::vector<int> rad = m.algebra().radical();
  Matrix rows(0, 0);
  for (int g : rad) {
    Matrix img = m.action(g);  // rows span im of the generator action
    rows = rows.vstack(img);
  }
  if (rows.rows() == 0) return Matrix(0, m.dim());
  return rows;
}

Matrix socle_subspace(const Module& m) {
  std::vector<int> rad = m.algebra().radical();
  if (rad.empty()) return Matrix::identity(m.dim());
  Matrix sys(m.dim(), static_cast<int>(rad.size()) * m.dim());
  for (size_t k = 0; k < rad.size(); ++k) {
    const Matrix& act = m.action(rad[k]);
    for (int i = 0; i < m.dim(); ++i)
      for (int j = 0; j < m.dim(); ++j) sys.at(i, static_cast<int>(k) * m.dim() + j) = act.at(i, j);
  }
  // v * sys = 0  <=>  sys^T v^T = 0
  std::vector<Matrix> kb = kernel_basis(sys.transpose());
  Matrix rows(static_cast<int>(kb.size()), m.dim());
  for (size_t i = 0; i < kb.size(); ++i)
    for (int j = 0; j < m.dim(); ++j) rows.at(static_cast<int>(i), j) = kb[i].at(j, 0);
  return rows;
}

Cover projective_cover(const Module& m) {
  Cover out;
  const Algebra& a = m.algebra();
  Matrix radm = radical_subspace(m);
  RowSpace rad_span(m.dim());
  for (int i = 0; i < radm.rows(); ++i) {
    std::vector<Rat> v(m.dim());
    for (int j = 0; j < m.dim(); ++j) v[j] = radm.at(i, j);
    rad_span.insert(std::move(v));
  }
  // generators of the top, vertex by vertex: rows of M e_x not in M rad
  std::vector<std::pair<int, std::vector<Rat>>> gens;  // (vertex, generator in M e_x)
  for (int x = 0; x < a.vertex_count(); ++x) {
    Matrix ex = m.idempotent_action(x);
    RowSpace seen(m.dim());
    for (const auto& r : rad_span.rows()) {
      // (M rad) e_x
      std::vector<Rat> v(m.dim(), Rat(0));
      for (int j = 0; j < m.dim(); ++j)
        if (r[j] != 0)
          for (int k = 0; k < m.dim(); ++k) v[k] += r[j] * ex.at(j, k);
      seen.insert(std::move(v));
    }
    for (int i = 0; i < m.dim(); ++i) {
      std::vector<Rat> v(m.dim());
      for (int j = 0; j < m.dim(); ++j) v[j] = ex.at(i, j);
      std::vector<Rat> keep = v;
      if (seen.insert(std::move(v))) gens.emplace_back(x, std::move(keep));
    }
  }
  std::vector<Module> projs;
  projs.reserve(gens.size());
  for (const auto& [x, g] : gens) {
    (void)g;
    out.vertices.push_back(x);
    projs.push_back(projective_module(a, x));
  }
  std::vector<const Module*> parts;
  for (const auto& p : projs) parts.push_back(&p);
  out.projective = direct_sum(a, parts);
  // the map e_x A -> M, e_x |-> gen, b |-> gen . b
  out.map = Matrix(out.projective.dim(), m.dim());
  int off = 0;
  for (size_t s = 0; s < gens.size(); ++s) {
    const auto& [x, gen] = gens[s];
    std::vector<int> basis = a.row_basis(x);
    for (size_t k = 0; k < basis.size(); ++k) {
      const Matrix& act = m.action(basis[k]);
      for (int j = 0; j < m.dim(); ++j) {
        Rat val(0);
        for (int i = 0; i < m.dim(); ++i)
          if (gen[i] != 0) val += gen[i] * act.at(i, j);
        out.map.at(off + static_cast<int>(k), j) = val;
      }
    }
    off += static_cast<int>(basis.size());
  }
  return out;
}

Submodule kernel_submodule(const Module& source, const Module& target, const Matrix& f) {
  (void)target;
  std::vector<Matrix> kb = kernel_basis(f.transpose());  // v f = 0 <=> f^T v^T = 0
  Matrix rows(static_cast<int>(kb.size()), source.dim());
  for (size_t i = 0; i < kb.size(); ++i)
    for (int j = 0; j < source.dim(); ++j) rows.at(static_cast<int>(i), j) = kb[i].at(j, 0);
  return submodule_from_span(source, rows);
}

QuotientModule cokernel_module(const Module& source, const Module& target, const Matrix& f) {
  (void)source;
  return quotient_module(target, f);
}

}  // namespace tiltlab
