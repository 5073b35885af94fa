#include "bulkcor/rep.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "bulkcor/qpoly.hpp"

namespace bulkcor {

namespace {

std::string ij_label(int i, int j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

// X with basis * X = mapped, requiring an exact solution.
Matrix restrict_to_basis(const Matrix& basis, const Matrix& mapped) {
  Matrix x;
  if (!solve_matrix(basis, mapped, &x))
    throw std::runtime_error("restrict_to_basis: subspace is not invariant");
  if (!mat_eq(mul(basis, x), mapped))
    throw std::runtime_error("restrict_to_basis: inconsistent restriction");
  return x;
}

}  // namespace

Matrix ModuleRep::act(const Vec& a) const {
  if (static_cast<int>(a.size()) != hopf->dim)
    throw std::invalid_argument("ModuleRep::act: element has wrong length");
  Matrix out = zero_matrix(dim, dim, hopf->field_order);
  for (int i = 0; i < hopf->dim; ++i)
    if (!a[i].is_zero()) out = add(out, scale(a[i], action[i]));
  return out;
}

Report verify_module(const ModuleRep& m) {
  Report rep;
  const HopfData& h = *m.hopf;
  bool ok = static_cast<int>(m.action.size()) == h.dim;
  for (const auto& a : m.action) ok = ok && a.rows == m.dim && a.cols == m.dim;
  rep.add("action-shapes", ok, ok ? "" : "one matrix per basis element, square");
  if (!ok) return rep;

  rep.add("unit-action", mat_eq(m.act(h.unit), identity_matrix(m.dim, h.field_order)));

  bool mult_ok = true;
  std::string witness;
  for (int g : h.algebra_gens) {
    for (int j = 0; j < h.dim && mult_ok; ++j) {
      Matrix lhs = mul(m.action[g], m.action[j]);
      Matrix rhs = m.act(column_of(h.mult, g * h.dim + j));
      if (!mat_eq(lhs, rhs)) {
        mult_ok = false;
        witness = "fails at " + ij_label(g, j);
      }
    }
    if (!mult_ok) break;
  }
  rep.add("algebra-action", mult_ok, witness);
  return rep;
}

bool is_intertwiner(const ModuleRep& source, const ModuleRep& target, const Matrix& f) {
  if (source.hopf != target.hopf) throw std::invalid_argument("is_intertwiner: different Hopf data");
  if (f.rows != target.dim || f.cols != source.dim) return false;
  for (int g : source.hopf->algebra_gens)
    if (!mat_eq(mul(f, source.action[g]), mul(target.action[g], f))) return false;
  return true;
}

ModuleRep trivial_module(const HopfData& h) {
  ModuleRep m;
  m.hopf = &h;
  m.dim = 1;
  for (int i = 0; i < h.dim; ++i) {
    Matrix a(1, 1, h.field_order);
    a.at(0, 0) = h.counit.at(0, i);
    m.action.push_back(std::move(a));
  }
  return m;
}

ModuleRep regular_module(const HopfData& h) {
  ModuleRep m;
  m.hopf = &h;
  m.dim = h.dim;
  m.action = h.lmul;
  return m;
}

std::vector<Matrix> hom_basis(const ModuleRep& m, const ModuleRep& n) {
  if (m.hopf != n.hopf) throw std::invalid_argument("hom_basis: different Hopf data");
  unsigned ord = m.hopf->field_order;
  // unknown X (n.dim x m.dim, row-major vectorization): X rho_m(g) = rho_n(g) X
  Matrix constraints(0, n.dim * m.dim, ord);
  bool first = true;
  for (int g : m.hopf->algebra_gens) {
    Matrix c = sub(kron(identity_matrix(n.dim, ord), transpose(m.action[g])),
                   kron(n.action[g], identity_matrix(m.dim, ord)));
    constraints = first ? std::move(c) : vstack(constraints, c);
    first = false;
  }
  std::vector<Matrix> out;
  if (first) throw std::logic_error("hom_basis: empty generator set");
  Subspace ker = kernel_basis(constraints);
  for (int c = 0; c < ker.dim(); ++c) {
    Matrix f(n.dim, m.dim, ord);
    for (int r = 0; r < n.dim; ++r)
      for (int s = 0; s < m.dim; ++s) f.at(r, s) = ker.basis.at(r * m.dim + s, c);
    out.push_back(std::move(f));
  }
  return out;
}

int hom_dim(const ModuleRep& m, const ModuleRep& n) {
  return static_cast<int>(hom_basis(m, n).size());
}

ModuleRep tensor(const ModuleRep& m, const ModuleRep& n) {
  if (m.hopf != n.hopf) throw std::invalid_argument("tensor: different Hopf data");
  const HopfData& h = *m.hopf;
  ModuleRep t;
  t.hopf = &h;
  t.dim = m.dim * n.dim;
  for (int i = 0; i < h.dim; ++i) {
    Matrix a = zero_matrix(t.dim, t.dim, h.field_order);
    for (const auto& [j, k, c] : h.delta_terms[i])
      a = add(a, scale(c, kron(m.action[j], n.action[k])));
    t.action.push_back(std::move(a));
  }
  return t;
}

namespace {

ModuleRep dual_module_only(const ModuleRep& m) {
  const HopfData& h = *m.hopf;
  ModuleRep d;
  d.hopf = &h;
  d.dim = m.dim;
  for (int i = 0; i < h.dim; ++i) {
    Vec s = column_of(h.antipode, i);
    d.action.push_back(transpose(m.act(s)));
  }
  return d;
}

}  // namespace

DualityData dual(const ModuleRep& m) {
  const HopfData& h = *m.hopf;
  if (h.pivot.empty()) throw std::runtime_error("dual: pivot element required");
  unsigned ord = h.field_order;
  int d = m.dim;
  DualityData out;
  out.dual = dual_module_only(m);

  Matrix omega = m.act(h.pivot);
  Matrix omega_inv = m.act(h.pivot_inv);

  out.ev = zero_matrix(1, d * d, ord);
  for (int i = 0; i < d; ++i) out.ev.at(0, i * d + i) = scalar_one(ord);

  out.coev = zero_matrix(d * d, 1, ord);
  for (int i = 0; i < d; ++i) out.coev.at(i * d + i, 0) = scalar_one(ord);

  out.ev_right = zero_matrix(1, d * d, ord);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out.ev_right.at(0, i * d + j) = omega.at(j, i);

  out.coev_right = zero_matrix(d * d, 1, ord);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out.coev_right.at(i * d + j, 0) = omega_inv.at(j, i);
  return out;
}

Scalar qdim(const ModuleRep& m) {
  if (m.hopf->pivot.empty()) throw std::runtime_error("qdim: pivot element required");
  return trace(m.act(m.hopf->pivot));
}

namespace {

// flip . sum_s rho_p(x_s) (x) rho_q(y_s) as a map p (x) q -> q (x) p.
Matrix braid_like(const ModuleRep& p, const ModuleRep& q,
                  const std::vector<std::pair<Vec, Vec>>& summands) {
  unsigned ord = p.hopf->field_order;
  Matrix out = zero_matrix(q.dim * p.dim, p.dim * q.dim, ord);
  for (const auto& [x, y] : summands) {
    Matrix a = p.act(x), b = q.act(y);
    for (int i = 0; i < p.dim; ++i)
      for (int k = 0; k < p.dim; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (int j = 0; j < q.dim; ++j)
          for (int l = 0; l < q.dim; ++l) {
            if (b.at(j, l).is_zero()) continue;
            int row = j * p.dim + i, col = k * q.dim + l;
            out.at(row, col) = add(out.at(row, col), mul(a.at(i, k), b.at(j, l)));
          }
      }
  }
  return out;
}

}  // namespace

ModuleMap braiding(const ModuleRep& m, const ModuleRep& n) {
  if (m.hopf != n.hopf) throw std::invalid_argument("braiding: different Hopf data");
  ModuleMap c;
  c.source = tensor(m, n);
  c.target = tensor(n, m);
  c.matrix = braid_like(m, n, m.hopf->r_summands);
  return c;
}

ModuleMap braiding_inverse(const ModuleRep& m, const ModuleRep& n) {
  if (m.hopf != n.hopf) throw std::invalid_argument("braiding_inverse: different Hopf data");
  const HopfData& h = *m.hopf;
  // R^{-1} = (S (x) id)(R); the n-slot acts first on the flipped input
  std::vector<std::pair<Vec, Vec>> inv_summands;
  for (const auto& [a, b] : h.r_summands)
    inv_summands.emplace_back(b, mat_vec(h.antipode, a));
  ModuleMap c;
  c.source = tensor(n, m);
  c.target = tensor(m, n);
  c.matrix = braid_like(n, m, inv_summands);
  return c;
}

ModuleMap twist(const ModuleRep& m) {
  if (m.hopf->ribbon.empty()) throw std::runtime_error("twist: ribbon element required");
  ModuleMap t;
  t.source = m;
  t.target = m;
  t.matrix = m.act(m.hopf->ribbon);
  return t;
}

ModuleMap twist_inverse(const ModuleRep& m) {
  if (m.hopf->ribbon_inv.empty())
    throw std::runtime_error("twist_inverse: invertible ribbon element required");
  ModuleMap t;
  t.source = m;
  t.target = m;
  t.matrix = m.act(m.hopf->ribbon_inv);
  return t;
}

ModuleRep adjoint_module(const HopfData& h) {
  ModuleRep m;
  m.hopf = &h;
  m.dim = h.dim;
  for (int i = 0; i < h.dim; ++i) {
    Matrix a = zero_matrix(h.dim, h.dim, h.field_order);
    for (const auto& [j, k, c] : h.delta_terms[i]) {
      Vec sk = column_of(h.antipode, k);
      a = add(a, scale(c, mul(h.lmul[j], h.right_mult(sk))));
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

ModuleRep coadjoint_module(const HopfData& h) { return dual_module_only(adjoint_module(h)); }

ModuleRep submodule(const ModuleRep& m, const Matrix& basis) {
  ModuleRep s;
  s.hopf = m.hopf;
  s.dim = basis.cols;
  for (int i = 0; i < m.hopf->dim; ++i)
    s.action.push_back(restrict_to_basis(basis, mul(m.action[i], basis)));
  return s;
}

// ---------------------------------------------------------------------------
// Semisimple quotient, block splitting, projective covers.

namespace {

// A finite-dimensional associative algebra with unit, given by left
// multiplication matrices of its basis. Used for the quotient by the radical.
struct PlainAlgebra {
  int dim = 0;
  unsigned order = 1;
  std::vector<Matrix> lmul;
  Vec unit;

  Vec multiply(const Vec& x, const Vec& y) const {
    Vec out = vec_zero(dim, order);
    for (int a = 0; a < dim; ++a)
      if (!x[a].is_zero()) out = vec_add(out, vec_scale(x[a], mat_vec(lmul[a], y)));
    return out;
  }
  Matrix left_mult(const Vec& x) const {
    Matrix out = zero_matrix(dim, dim, order);
    for (int a = 0; a < dim; ++a)
      if (!x[a].is_zero()) out = add(out, scale(x[a], lmul[a]));
    return out;
  }
};

// Rational coordinates of a vector over Q(zeta_N): length n * phi(N).
std::vector<mpq_class> flatten_q(const Vec& v, unsigned phi) {
  std::vector<mpq_class> out;
  out.reserve(v.size() * phi);
  for (const auto& s : v)
    for (unsigned t = 0; t < phi; ++t)
      out.push_back(t < s.c.size() ? s.c[t] : mpq_class(0));
  return out;
}

// Incremental echelonized span over Q with combination tracking. Each
// inserted vector is either reduced to zero (returning its coordinates in
// terms of previously inserted vectors) or stored as a new pivot row.
struct EchelonSpan {
  std::vector<std::vector<mpq_class>> rows;
  std::vector<std::vector<mpq_class>> combos;  // rows[r] in inserted-vector coords
  std::vector<size_t> pivots;
  size_t inserted = 0;

  bool reduce_or_insert(std::vector<mpq_class> v, std::vector<mpq_class>* coords) {
    std::vector<mpq_class> c(inserted, mpq_class(0));
    for (size_t r = 0; r < rows.size(); ++r) {
      const mpq_class& lead = v[pivots[r]];
      if (lead == 0) continue;
      mpq_class f = lead / rows[r][pivots[r]];
      for (size_t k = pivots[r]; k < v.size(); ++k)
        if (rows[r][k] != 0) v[k] -= f * rows[r][k];
      for (size_t k = 0; k < combos[r].size(); ++k)
        if (combos[r][k] != 0) c[k] += f * combos[r][k];
    }
    size_t p = v.size();
    for (size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) {
        p = k;
        break;
      }
    if (p == v.size()) {
      if (coords) *coords = std::move(c);
      return true;
    }
    c.resize(inserted + 1, mpq_class(0));
    // stored row = inserted vector minus the eliminated part
    for (auto& x : c) x = -x;
    c[inserted] = 1;
    rows.push_back(std::move(v));
    combos.push_back(std::move(c));
    pivots.push_back(p);
    ++inserted;
    return false;
  }
};

// Greedy generating set, mirroring the one picked for Hopf data.
std::vector<int> algebra_generators(const PlainAlgebra& alg) {
  SpanTracker span(alg.dim, alg.order);
  std::vector<Vec> closure;
  if (span.insert(alg.unit)) closure.push_back(alg.unit);
  std::vector<int> gens;
  for (int i = 0; i < alg.dim; ++i) {
    Vec ei = basis_vec(alg.dim, i, alg.order);
    if (!span.insert(ei)) continue;
    gens.push_back(i);
    closure.push_back(ei);
    size_t head = 0;
    while (head < closure.size()) {
      Vec cur = closure[head++];
      for (int g : gens) {
        Vec eg = basis_vec(alg.dim, g, alg.order);
        Vec p = alg.multiply(eg, cur);
        if (span.insert(p)) closure.push_back(p);
        Vec p2 = alg.multiply(cur, eg);
        if (span.insert(p2)) closure.push_back(p2);
      }
    }
  }
  if (gens.empty()) gens.push_back(0);
  return gens;
}

struct Quotient {
  Subspace radical;          // inside the original algebra
  PlainAlgebra b;            // quotient algebra
  Matrix pi;                 // b.dim x n projection
  Matrix iota;               // n x b.dim section (standard basis columns)
};

Quotient quotient_by_radical(const HopfData& h) {
  int n = h.dim;
  unsigned ord = h.field_order;

  // trace form of the left regular representation
  Matrix t(n, n, ord);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Scalar s = scalar_zero(ord);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const Scalar& x = h.lmul[i].at(a, b);
          if (x.is_zero()) continue;
          const Scalar& y = h.lmul[j].at(b, a);
          if (y.is_zero()) continue;
          s = add(s, mul(x, y));
        }
      t.at(i, j) = s;
      t.at(j, i) = s;
    }

  Quotient q;
  q.radical = kernel_basis(t);
  int r = q.radical.dim();
  int m = n - r;

  // complete the radical basis with standard vectors, deterministically
  Matrix aug = hstack(q.radical.basis, identity_matrix(n, ord));
  Rref rr = rref(aug);
  std::vector<int> comp;
  for (int c : rr.pivot_cols)
    if (c >= r) comp.push_back(c - r);
  if (static_cast<int>(comp.size()) != m)
    throw std::logic_error("quotient_by_radical: completion failed");

  q.iota = zero_matrix(n, m, ord);
  for (int j = 0; j < m; ++j) q.iota.at(comp[j], j) = scalar_one(ord);
  Matrix full = hstack(q.radical.basis, q.iota);
  Matrix inv = inverse(full);
  q.pi = zero_matrix(m, n, ord);
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < n; ++c) q.pi.at(a, c) = inv.at(r + a, c);

  q.b.dim = m;
  q.b.order = ord;
  q.b.unit = mat_vec(q.pi, h.unit);
  for (int a = 0; a < m; ++a) {
    Matrix la(m, m, ord);
    for (int c = 0; c < m; ++c) {
      Vec prod = column_of(h.mult, comp[a] * n + comp[c]);
      Vec pb = mat_vec(q.pi, prod);
      for (int rrow = 0; rrow < m; ++rrow) la.at(rrow, c) = pb[rrow];
    }
    q.b.lmul.push_back(std::move(la));
  }
  return q;
}

// Minimal polynomial over Q of the operator "multiply by w" with start
// vector v0, both inside an ambient space with a multiplication callback.
QPoly minpoly_over_q(const std::function<Vec(const Vec&)>& step, const Vec& v0,
                     unsigned phi) {
  EchelonSpan span;
  Vec cur = v0;
  size_t limit = v0.size() * phi + 2;
  for (size_t t = 0; t < limit; ++t) {
    std::vector<mpq_class> coords;
    if (span.reduce_or_insert(flatten_q(cur, phi), &coords)) {
      QPoly p(coords.size() + 1, mpq_class(0));
      p.back() = 1;
      for (size_t i = 0; i < coords.size(); ++i) p[i] = -coords[i];
      return qpoly_trim(std::move(p));
    }
    cur = step(cur);
  }
  throw std::logic_error("minpoly_over_q: no relation found");
}

// Evaluate p at w inside a unital algebra: p(w) with w^0 = unit.
Vec poly_at(const PlainAlgebra& alg, const QPoly& p, const Vec& w, const Vec& unit) {
  Vec acc = vec_zero(alg.dim, alg.order);
  Vec pw = unit;
  for (size_t t = 0; t < p.size(); ++t) {
    if (p[t] != 0) acc = vec_add(acc, vec_scale(scalar_rational(p[t], alg.order), pw));
    if (t + 1 < p.size()) pw = alg.multiply(pw, w);
  }
  return acc;
}

// Splits the idempotent e of the commutative subalgebra containing w into
// the CRT idempotents of Q[w] e. Returns {e} when the minimal polynomial is
// a prime power (no split available from w).
std::vector<Vec> crt_split(const PlainAlgebra& alg, const Vec& e, const Vec& w,
                           unsigned phi) {
  QPoly mp = minpoly_over_q([&](const Vec& x) { return alg.multiply(x, w); }, e, phi);
  std::vector<QPoly> irred = factor_qpoly(mp);
  // combine equal factors into coprime prime-power moduli
  std::vector<std::pair<QPoly, int>> powers;
  for (const auto& f : irred) {
    bool found = false;
    for (auto& [q, c] : powers)
      if (qpoly_eq(q, f)) {
        ++c;
        found = true;
      }
    if (!found) powers.emplace_back(f, 1);
  }
  if (powers.size() <= 1) return {e};
  std::vector<Vec> out;
  for (const auto& [q, c] : powers) {
    QPoly qe = q;
    for (int t = 1; t < c; ++t) qe = qpoly_mul(qe, q);
    QPoly rest;
    qpoly_divrem(mp, qe, &rest, nullptr);
    QPoly u, v;
    QPoly g = qpoly_extgcd(qe, rest, &u, &v);
    if (qpoly_deg(g) != 0)
      throw std::logic_error("crt_split: moduli are not coprime");
    // idempotent = v * rest evaluated at w (1 mod qe, 0 mod rest)
    Vec idem = poly_at(alg, qpoly_mul(v, rest), w, e);
    if (!vec_eq(alg.multiply(idem, idem), idem))
      throw std::logic_error("crt_split: candidate is not idempotent");
    out.push_back(std::move(idem));
  }
  return out;
}

// All primitive idempotents of the center of b (a split scenario); found by
// refining with deterministic central elements until stable.
std::vector<Vec> central_idempotents(const PlainAlgebra& b, unsigned field_order) {
  int m = b.dim;
  unsigned ord = b.order;
  unsigned phi = cyclotomic_degree(field_order);

  // center: z u_c = u_c z for all c
  Matrix constraints(0, m, ord);
  bool first = true;
  for (int c = 0; c < m; ++c) {
    Matrix rm(m, m, ord);
    for (int a = 0; a < m; ++a) {
      Vec col = column_of(b.lmul[a], c);
      for (int rrow = 0; rrow < m; ++rrow) rm.at(rrow, a) = col[rrow];
    }
    Matrix diff = sub(rm, b.lmul[c]);
    constraints = first ? std::move(diff) : vstack(constraints, diff);
    first = false;
  }
  Subspace center = kernel_basis(constraints);
  int zd = center.dim();

  // refinement candidates: zeta-scaled basis vectors, then pairwise sums
  std::vector<Vec> candidates;
  Scalar zeta = field_order == 1 ? scalar_one(1) : scalar_zeta(field_order);
  for (int i = 0; i < zd; ++i) {
    Vec zi = column_of(center.basis, i);
    Vec cur = zi;
    for (unsigned t = 0; t < phi; ++t) {
      candidates.push_back(cur);
      cur = vec_scale(zeta, cur);
    }
  }
  for (int i = 0; i < zd; ++i)
    for (int j = i + 1; j < zd; ++j) {
      Vec zi = column_of(center.basis, i), zj = column_of(center.basis, j);
      Vec cur = zj;
      for (unsigned t = 0; t < phi; ++t) {
        candidates.push_back(vec_add(zi, cur));
        cur = vec_scale(zeta, cur);
      }
      candidates.push_back(b.multiply(zi, zj));
    }

  // A candidate whose minimal polynomial on eZ is a prime power keeps a
  // prime-power minimal polynomial on every refinement of e, so refined
  // pieces resume the candidate scan instead of restarting it.
  std::vector<Vec> finals;
  std::function<void(Vec, size_t)> refine = [&](Vec e, size_t start) {
    for (size_t ci = start; ci < candidates.size(); ++ci) {
      Vec we = b.multiply(candidates[ci], e);
      std::vector<Vec> parts = crt_split(b, e, we, phi);
      if (parts.size() > 1) {
        for (auto& p : parts) refine(std::move(p), ci + 1);
        return;
      }
    }
    finals.push_back(std::move(e));
  };
  refine(b.unit, 0);
  return finals;
}

// A left module over the quotient algebra: columns of basis live in b-coords.
struct BModule {
  Matrix basis;                  // b.dim x dim
  std::vector<Matrix> gen_action;  // action of each algebra generator
};

BModule restrict_bmodule(const PlainAlgebra& b, const std::vector<int>& gens,
                         const Matrix& basis) {
  BModule w;
  w.basis = basis;
  for (int g : gens)
    w.gen_action.push_back(restrict_to_basis(basis, mul(b.lmul[g], basis)));
  return w;
}

std::vector<Matrix> bmodule_end(const BModule& w, unsigned ord) {
  int d = w.basis.cols;
  Matrix constraints(0, d * d, ord);
  bool first = true;
  for (const auto& a : w.gen_action) {
    Matrix c = sub(kron(identity_matrix(d, ord), transpose(a)),
                   kron(a, identity_matrix(d, ord)));
    constraints = first ? std::move(c) : vstack(constraints, c);
    first = false;
  }
  Subspace ker = kernel_basis(constraints);
  std::vector<Matrix> out;
  for (int c = 0; c < ker.dim(); ++c) {
    Matrix f(d, d, ord);
    for (int r = 0; r < d; ++r)
      for (int s = 0; s < d; ++s) f.at(r, s) = ker.basis.at(r * d + s, c);
    out.push_back(std::move(f));
  }
  return out;
}

// Finds an endomorphism of w whose rational minimal polynomial has at least
// two coprime parts, and returns one CRT idempotent; identity means failure.
Matrix splitting_idempotent(const BModule& w, unsigned ord, unsigned field_order) {
  unsigned phi = cyclotomic_degree(field_order);
  int d = w.basis.cols;
  std::vector<Matrix> endos = bmodule_end(w, ord);
  if (endos.size() <= 1) return identity_matrix(d, ord);

  Scalar zeta = field_order == 1 ? scalar_one(1) : scalar_zeta(field_order);
  std::vector<Matrix> cands;
  for (const auto& e : endos) {
    Matrix cur = e;
    for (unsigned t = 0; t < phi; ++t) {
      cands.push_back(cur);
      cur = scale(zeta, cur);
    }
  }
  size_t base = cands.size();
  for (size_t i = 0; i < base && i < 24; ++i)
    for (size_t j = i + 1; j < base && j < 24; ++j) {
      cands.push_back(add(cands[i], cands[j]));
      cands.push_back(mul(cands[i], cands[j]));
    }

  for (const auto& phi_mat : cands) {
    // minimal polynomial of the matrix over Q via its action on flattened coords
    auto step = [&](const Vec& x) {
      // x encodes a matrix column-stacked; multiply by phi_mat
      Matrix m(d, d, ord);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m.at(r, c) = x[r * d + c];
      Matrix y = mul(phi_mat, m);
      Vec out(d * d, scalar_zero(ord));
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) out[r * d + c] = y.at(r, c);
      return out;
    };
    Vec id_flat(d * d, scalar_zero(ord));
    for (int r = 0; r < d; ++r) id_flat[r * d + r] = scalar_one(ord);
    QPoly mp = minpoly_over_q(step, id_flat, phi);
    std::vector<QPoly> irred = factor_qpoly(mp);
    std::vector<std::pair<QPoly, int>> powers;
    for (const auto& f : irred) {
      bool found = false;
      for (auto& [q, c] : powers)
        if (qpoly_eq(q, f)) {
          ++c;
          found = true;
        }
      if (!found) powers.emplace_back(f, 1);
    }
    if (powers.size() <= 1) continue;
    QPoly qe = powers[0].first;
    for (int t = 1; t < powers[0].second; ++t) qe = qpoly_mul(qe, powers[0].first);
    QPoly rest;
    qpoly_divrem(mp, qe, &rest, nullptr);
    QPoly u, v;
    QPoly g = qpoly_extgcd(qe, rest, &u, &v);
    if (qpoly_deg(g) != 0) continue;
    QPoly idem_poly = qpoly_mul(v, rest);
    // evaluate at the matrix
    Matrix acc = zero_matrix(d, d, ord);
    Matrix pw = identity_matrix(d, ord);
    for (size_t t = 0; t < idem_poly.size(); ++t) {
      if (idem_poly[t] != 0)
        acc = add(acc, scale(scalar_rational(idem_poly[t], ord), pw));
      if (t + 1 < idem_poly.size()) pw = mul(pw, phi_mat);
    }
    if (!mat_eq(mul(acc, acc), acc)) continue;
    bool zero = true, full = true;
    for (int r = 0; r < d && (zero || full); ++r)
      for (int c = 0; c < d; ++c) {
        if (!acc.at(r, c).is_zero()) zero = false;
        Scalar want = r == c ? scalar_one(ord) : scalar_zero(ord);
        if (!eq(acc.at(r, c), want)) full = false;
      }
    if (zero || full) continue;
    return acc;
  }
  return identity_matrix(d, ord);
}

struct BlockData {
  Vec central_idempotent;    // in b-coords
  Matrix simple_basis;       // b.dim x d, basis of one simple submodule
  Vec primitive_idempotent;  // in b-coords
  int simple_dim = 0;
};

BlockData split_block(const PlainAlgebra& b, const std::vector<int>& gens,
                      const Vec& e, unsigned field_order, int block_index) {
  unsigned ord = b.order;
  BlockData out;
  out.central_idempotent = e;

  Matrix ideal = column_space(b.left_mult(e)).basis;
  int block_dim = ideal.cols;

  // peel the block module down to a simple summand, tracking the composite
  // idempotent endomorphism for the primitive idempotent at the end
  Matrix basis = ideal;
  Matrix inc = identity_matrix(block_dim, ord);
  Matrix proj = identity_matrix(block_dim, ord);
  while (true) {
    BModule w = restrict_bmodule(b, gens, basis);
    Matrix eps = splitting_idempotent(w, ord, field_order);
    bool is_id = mat_eq(eps, identity_matrix(basis.cols, ord));
    if (is_id) {
      if (static_cast<int>(bmodule_end(w, ord).size()) != 1)
        throw std::runtime_error(
            "wedderburn: block " + std::to_string(block_index) +
            " does not split over the declared field");
      break;
    }
    IdempotentImage im = idempotent_image(eps);
    basis = mul(basis, im.inclusion);
    inc = mul(inc, im.inclusion);
    proj = mul(im.projection, proj);
  }
  out.simple_dim = basis.cols;
  out.simple_basis = basis;
  if (out.simple_dim * out.simple_dim != block_dim)
    throw std::runtime_error(
        "wedderburn: block " + std::to_string(block_index) +
        " does not split over the declared field");

  // the projection onto the simple summand is right multiplication by an
  // idempotent of the block; its value on e is that idempotent
  Matrix eta = mul(inc, proj);
  Vec e_coords;
  {
    Matrix sol;
    if (!solve_matrix(ideal, col_matrix(e), &sol))
      throw std::logic_error("split_block: unit not inside its own block");
    e_coords = column_of(sol, 0);
  }
  Vec prim_block = mat_vec(eta, e_coords);
  out.primitive_idempotent = mat_vec(ideal, prim_block);
  if (!vec_eq(b.multiply(out.primitive_idempotent, out.primitive_idempotent),
              out.primitive_idempotent))
    throw std::logic_error("split_block: projection did not yield an idempotent");
  return out;
}

struct Decomposition {
  Quotient q;
  std::vector<BlockData> blocks;
};

Decomposition decompose(const HopfData& h) {
  Decomposition d;
  d.q = quotient_by_radical(h);
  std::vector<int> gens = algebra_generators(d.q.b);
  std::vector<Vec> centrals = central_idempotents(d.q.b, h.field_order);
  for (size_t i = 0; i < centrals.size(); ++i)
    d.blocks.push_back(split_block(d.q.b, gens, centrals[i], h.field_order,
                                   static_cast<int>(i)));
  // deterministic order: by simple dimension, then by idempotent coordinates
  auto idem_key = [](const BlockData& blk) {
    std::string key;
    for (const auto& s : blk.central_idempotent) {
      key += to_string(s);
      key += ';';
    }
    return key;
  };
  std::sort(d.blocks.begin(), d.blocks.end(),
            [&](const BlockData& a, const BlockData& b2) {
              if (a.simple_dim != b2.simple_dim) return a.simple_dim < b2.simple_dim;
              return idem_key(a) < idem_key(b2);
            });
  return d;
}

// The decomposition depends only on the algebra structure, and the callers
// below each need it; cache on the structure itself so repeated queries
// against the same data pay once.
const Decomposition& decompose_cached(const HopfData& h) {
  struct Entry {
    int dim;
    unsigned order;
    Matrix mult;
    Vec unit;
    std::unique_ptr<Decomposition> value;
  };
  static std::mutex mu;
  static std::vector<Entry> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& e : cache)
    if (e.dim == h.dim && e.order == h.field_order && vec_eq(e.unit, h.unit) &&
        mat_eq(e.mult, h.mult))
      return *e.value;
  Entry e{h.dim, h.field_order, h.mult, h.unit,
          std::make_unique<Decomposition>(decompose(h))};
  if (cache.size() >= 8) cache.erase(cache.begin());
  cache.push_back(std::move(e));
  return *cache.back().value;
}

// H-action matrices on a submodule of the quotient given by basis columns.
ModuleRep pull_back_simple(const HopfData& h, const Quotient& q, const Matrix& basis) {
  ModuleRep s;
  s.hopf = &h;
  s.dim = basis.cols;
  for (int i = 0; i < h.dim; ++i) {
    Vec bi = mat_vec(q.pi, h.basis(i));
    Matrix act_b = q.b.left_mult(bi);
    s.action.push_back(restrict_to_basis(basis, mul(act_b, basis)));
  }
  return s;
}

}  // namespace

Wedderburn wedderburn(const HopfData& h) {
  const Decomposition& d = decompose_cached(h);
  Wedderburn w;
  w.radical = d.q.radical;
  for (size_t i = 0; i < d.blocks.size(); ++i) {
    w.simples.push_back(pull_back_simple(h, d.q, d.blocks[i].simple_basis));
    w.block_of.push_back(static_cast<int>(i));
    w.block_idempotents.push_back(mat_vec(d.q.iota, d.blocks[i].central_idempotent));
  }
  return w;
}

std::vector<Pim> pims(const HopfData& h) {
  const Decomposition& d = decompose_cached(h);
  int n = h.dim;
  unsigned ord = h.field_order;
  std::vector<Pim> out;
  for (size_t bi = 0; bi < d.blocks.size(); ++bi) {
    const BlockData& blk = d.blocks[bi];
    // lift the primitive idempotent through the quotient by Newton steps
    Vec e = mat_vec(d.q.iota, blk.primitive_idempotent);
    bool converged = false;
    for (int it = 0; it <= n; ++it) {
      Vec e2 = h.multiply(e, e);
      if (vec_eq(e2, e)) {
        converged = true;
        break;
      }
      // e <- 3 e^2 - 2 e^3
      Vec e3 = h.multiply(e2, e);
      e = vec_sub(vec_scale(scalar_rational(mpq_class(3), ord), e2),
                  vec_scale(scalar_rational(mpq_class(2), ord), e3));
    }
    if (!converged)
      throw std::runtime_error("pims: idempotent lifting did not converge for block " +
                               std::to_string(bi));

    Pim p;
    p.idempotent = e;
    Matrix basis = column_space(h.right_mult(e)).basis;
    p.module.hopf = &h;
    p.module.dim = basis.cols;
    for (int i = 0; i < n; ++i)
      p.module.action.push_back(restrict_to_basis(basis, mul(h.lmul[i], basis)));
    p.top_index = static_cast<int>(bi);
    p.multiplicity = blk.simple_dim;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<long>> cartan_matrix(const HopfData& h) {
  std::vector<Pim> ps = pims(h);
  size_t k = ps.size();
  std::vector<std::vector<long>> c(k, std::vector<long>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      c[i][j] = hom_dim(ps[i].module, ps[j].module);
  return c;
}

std::vector<int> composition_factors(const ModuleRep& m, const Wedderburn& w) {
  std::vector<int> counts(w.simples.size(), 0);
  const HopfData& h = *m.hopf;
  unsigned ord = h.field_order;
  ModuleRep cur = m;
  while (cur.dim > 0) {
    Matrix rad_stack(0, cur.dim, ord);
    bool first = true;
    for (int c = 0; c < w.radical.dim(); ++c) {
      Matrix a = cur.act(column_of(w.radical.basis, c));
      rad_stack = first ? std::move(a) : vstack(rad_stack, a);
      first = false;
    }
    Matrix soc_basis;
    if (first) {
      soc_basis = identity_matrix(cur.dim, ord);
    } else {
      soc_basis = kernel_basis(rad_stack).basis;
    }
    if (soc_basis.cols == 0)
      throw std::logic_error("composition_factors: socle vanished on a nonzero module");
    ModuleRep soc = submodule(cur, soc_basis);
    if (w.block_idempotents.size() == w.simples.size()) {
      // block projectors cut the semisimple socle into isotypic pieces
      for (size_t i = 0; i < w.simples.size(); ++i) {
        int piece = rank(soc.act(w.block_idempotents[i]));
        if (piece % w.simples[i].dim != 0)
          throw std::logic_error("composition_factors: isotypic piece has wrong size");
        counts[i] += piece / w.simples[i].dim;
      }
    } else {
      for (size_t i = 0; i < w.simples.size(); ++i)
        counts[i] += hom_dim(w.simples[i], soc);
    }
    if (soc.dim == cur.dim) break;

    // quotient by the socle
    int n = cur.dim, r = soc_basis.cols;
    Matrix aug = hstack(soc_basis, identity_matrix(n, ord));
    Rref rr = rref(aug);
    Matrix iota = zero_matrix(n, n - r, ord);
    int col = 0;
    for (int c : rr.pivot_cols)
      if (c >= r) iota.at(c - r, col) = scalar_one(ord), ++col;
    Matrix full = hstack(soc_basis, iota);
    Matrix inv = inverse(full);
    Matrix pi = zero_matrix(n - r, n, ord);
    for (int a = 0; a < n - r; ++a)
      for (int c2 = 0; c2 < n; ++c2) pi.at(a, c2) = inv.at(r + a, c2);
    ModuleRep next;
    next.hopf = &h;
    next.dim = n - r;
    for (int i = 0; i < h.dim; ++i)
      next.action.push_back(mul(pi, mul(cur.action[i], iota)));
    cur = std::move(next);
  }

  long total = 0;
  for (size_t i = 0; i < w.simples.size(); ++i)
    total += static_cast<long>(counts[i]) * w.simples[i].dim;
  if (total != m.dim)
    throw std::runtime_error("composition_factors: counts do not add up; "
                             "module may not split over the declared field");
  return counts;
}

}  // namespace bulkcor
