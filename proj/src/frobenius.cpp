#include "bulkcor/frobenius.hpp"

#include <stdexcept>
#include <string>

namespace bulkcor {

namespace {

void check_shapes(const FrobeniusObject& f) {
  if (f.object.hopf == nullptr)
    throw std::invalid_argument("frobenius: module has no hopf data");
  int d = f.object.dim;
  bool ok = f.mult.rows == d && f.mult.cols == d * d && f.unit.rows == d &&
            f.unit.cols == 1 && f.comult.rows == d * d && f.comult.cols == d &&
            f.counit.rows == 1 && f.counit.cols == d;
  if (!ok) throw std::invalid_argument("frobenius: structure map has wrong shape");
}

// one structure map applied to a consecutive slot range of a tensor power;
// span counts the F factors consumed, arity the F factors produced (the
// factor count cannot be recovered from sizes alone when dim F = 1)
struct SlotOp {
  const Matrix* m;
  int slot;
  int span;
  int arity;
};

// run each pipeline on every basis vector of F^{(x) nslots} and compare the
// results; never materializes a Kronecker factor of an identity wire
bool pipelines_agree(std::initializer_list<std::vector<SlotOp>> pipes, int nslots,
                     int d, unsigned ord) {
  long total = 1;
  for (int k = 0; k < nslots; ++k) total *= d;
  for (long c = 0; c < total; ++c) {
    Vec v0 = basis_vec(static_cast<int>(total), static_cast<int>(c), ord);
    bool have_ref = false;
    Vec ref;
    for (const auto& pipe : pipes) {
      std::vector<int> dims(nslots, d);
      Vec v = v0;
      for (const auto& op : pipe) {
        v = apply_to_slots(*op.m, dims, op.slot, op.span, v);
        dims.erase(dims.begin() + op.slot);  // re-split the collapsed range
        for (int t = 0; t < op.arity; ++t) dims.insert(dims.begin() + op.slot, d);
      }
      if (!have_ref) {
        ref = std::move(v);
        have_ref = true;
      } else if (!vec_eq(ref, v)) {
        return false;
      }
    }
  }
  return true;
}

// m == s * id for some scalar s
bool scalar_of(const Matrix& m, Scalar* out) {
  if (!m.is_square() || m.rows == 0) return false;
  Scalar s = m.at(0, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const Scalar& want = (i == j) ? s : scalar_zero(m.order);
      if (!eq(m.at(i, j), want)) return false;
    }
  if (out) *out = s;
  return true;
}

}  // namespace

ModuleMap FrobeniusObject::mult_map() const {
  return ModuleMap{tensor(object, object), object, mult};
}

ModuleMap FrobeniusObject::unit_map() const {
  return ModuleMap{trivial_module(*object.hopf), object, unit};
}

ModuleMap FrobeniusObject::comult_map() const {
  return ModuleMap{object, tensor(object, object), comult};
}

ModuleMap FrobeniusObject::counit_map() const {
  return ModuleMap{object, trivial_module(*object.hopf), counit};
}

Matrix frobenius_pairing(const FrobeniusObject& f) { return mul(f.counit, f.mult); }

Matrix frobenius_copairing(const FrobeniusObject& f) { return mul(f.comult, f.unit); }

Matrix frobenius_psi(const FrobeniusObject& f) {
  // x |-> beta(x, -) via (beta (x) id) . (id (x) coev), landing in the dual
  int d = f.object.dim;
  unsigned ord = f.object.hopf->field_order;
  Matrix beta = frobenius_pairing(f);
  DualityData dd = dual(f.object);
  return mul(kron(beta, identity_matrix(d, ord)),
             kron(identity_matrix(d, ord), dd.coev));
}

Report verify_frobenius(const FrobeniusObject& f) {
  check_shapes(f);
  Report rep;
  const ModuleRep& F = f.object;
  const HopfData& h = *F.hopf;
  int d = F.dim;
  unsigned ord = h.field_order;
  Matrix id_d = identity_matrix(d, ord);

  ModuleRep FF = tensor(F, F);
  ModuleRep I = trivial_module(h);
  rep.add("mult-intertwiner", is_intertwiner(FF, F, f.mult));
  rep.add("unit-intertwiner", is_intertwiner(I, F, f.unit));
  rep.add("comult-intertwiner", is_intertwiner(F, FF, f.comult));
  rep.add("counit-intertwiner", is_intertwiner(F, I, f.counit));

  const Matrix* MU = &f.mult;
  const Matrix* DE = &f.comult;
  rep.add("mult-associative",
          pipelines_agree({{{MU, 0, 2, 1}, {MU, 0, 2, 1}},
                           {{MU, 1, 2, 1}, {MU, 0, 2, 1}}},
                          3, d, ord));
  rep.add("mult-unital", mat_eq(mul(f.mult, kron(f.unit, id_d)), id_d) &&
                             mat_eq(mul(f.mult, kron(id_d, f.unit)), id_d));
  rep.add("comult-coassociative",
          pipelines_agree({{{DE, 0, 1, 2}, {DE, 0, 1, 2}},
                           {{DE, 0, 1, 2}, {DE, 1, 1, 2}}},
                          1, d, ord));
  rep.add("comult-counital", mat_eq(mul(kron(f.counit, id_d), f.comult), id_d) &&
                                 mat_eq(mul(kron(id_d, f.counit), f.comult), id_d));

  rep.add("frobenius-compatibility",
          pipelines_agree({{{DE, 1, 1, 2}, {MU, 0, 2, 1}},   // (mult (x) id)(id (x) comult)
                           {{MU, 0, 2, 1}, {DE, 0, 1, 2}},   // comult . mult
                           {{DE, 0, 1, 2}, {MU, 1, 2, 1}}},  // (id (x) mult)(comult (x) id)
                          2, d, ord));

  Matrix beta = frobenius_pairing(f);
  const Matrix* BE = &beta;
  rep.add("pairing-invariant",
          pipelines_agree({{{MU, 0, 2, 1}, {BE, 0, 2, 0}},
                           {{MU, 1, 2, 1}, {BE, 0, 2, 0}}},
                          3, d, ord));

  Matrix psi = frobenius_psi(f);
  rep.add("pairing-nondegenerate", is_invertible(psi),
          is_invertible(psi) ? "" : "induced map to the dual is singular");
  rep.add("selfdual-map-intertwiner", is_intertwiner(F, dual(F).dual, psi));
  // psi equals its own double-dual transport: psi = psi^T . rho(omega)
  rep.add("pairing-symmetric", mat_eq(psi, mul(transpose(psi), F.act(h.pivot))));
  return rep;
}

Report verify_special(const FrobeniusObject& f) {
  check_shapes(f);
  Report rep;
  Scalar eh = mul(f.counit, f.unit).at(0, 0);
  rep.add("special-counit-unit", !eh.is_zero(),
          std::string("counit.unit = ") + to_string(eh));

  Matrix md = mul(f.mult, f.comult);
  Scalar lam = scalar_one(f.object.hopf->field_order);
  if (f.object.dim > 0 && scalar_of(md, &lam)) {
    bool pass = lam.is_one();
    rep.add("special-mult-comult", pass,
            pass ? "" : std::string("mult.comult = ") + to_string(lam) + " . id");
  } else {
    rep.add("special-mult-comult", false,
            "mult.comult is not a scalar multiple of the identity");
  }
  return rep;
}

bool is_special(const FrobeniusObject& f) { return verify_special(f).all_pass(); }

ModuleMap handle_element(const FrobeniusObject& f, bool* equals_unit) {
  check_shapes(f);
  Matrix h = mul(f.mult, mul(f.comult, f.unit));
  if (equals_unit) *equals_unit = mat_eq(h, f.unit);
  return ModuleMap{trivial_module(*f.object.hopf), f.object, h};
}

Vec canonical_vn_vector(const FrobeniusObject& f, int n) {
  check_shapes(f);
  if (n < 0) throw std::invalid_argument("canonical_vn: negative tensor power");
  const HopfData& h = *f.object.hopf;
  int d = f.object.dim;
  if (n == 0) return Vec{scalar_one(h.field_order)};

  // grow by comultiplying the first slot; apply_to_slots keeps the trailing
  // identity factors implicit instead of building them as Kronecker blocks
  Vec v = column_of(f.unit, 0);
  std::vector<int> dims{d};
  for (int k = 2; k <= n; ++k) {
    v = apply_to_slots(f.comult, dims, 0, 1, v);
    dims[0] = d;  // the comultiplied slot is two tensor factors again
    dims.insert(dims.begin(), d);
  }
  return v;
}

ModuleMap canonical_vn(const FrobeniusObject& f, int n) {
  Vec v = canonical_vn_vector(f, n);
  const HopfData& h = *f.object.hopf;
  ModuleRep target = trivial_module(h);
  for (int k = 1; k <= n; ++k)
    target = (k == 1) ? f.object : tensor(target, f.object);
  return ModuleMap{trivial_module(h), target, col_matrix(v)};
}

FrobeniusObject trivial_frobenius(const HopfData& h) {
  FrobeniusObject f;
  f.object = trivial_module(h);
  Matrix one = identity_matrix(1, h.field_order);
  f.mult = one;
  f.unit = one;
  f.comult = one;
  f.counit = one;
  return f;
}

FrobeniusObject internal_end_frobenius(const ModuleRep& x, bool normalize) {
  if (x.hopf == nullptr)
    throw std::invalid_argument("internal end: module has no hopf data");
  const HopfData& h = *x.hopf;
  unsigned ord = h.field_order;
  int d = x.dim;
  Matrix id_d = identity_matrix(d, ord);
  DualityData dd = dual(x);

  Scalar qd = trace(x.act(h.pivot));          // counit . unit
  Scalar qdi = trace(x.act(h.pivot_inv));     // the mult . comult scalar
  if (qd.is_zero() || qdi.is_zero())
    throw std::runtime_error("internal end: quantum dimension of the module vanishes");

  FrobeniusObject f;
  f.object = tensor(x, dd.dual);
  f.mult = kron(id_d, kron(dd.ev, id_d));
  f.unit = dd.coev;
  f.comult = kron(id_d, kron(dd.coev_right, id_d));
  f.counit = dd.ev_right;
  if (normalize) {
    f.comult = scale(inv(qdi), f.comult);
    f.counit = scale(qdi, f.counit);
  }
  return f;
}

FrobeniusObject normalize_special(const FrobeniusObject& f) {
  check_shapes(f);
  Matrix md = mul(f.mult, f.comult);
  Scalar lam;
  if (f.object.dim == 0 || !scalar_of(md, &lam) || lam.is_zero())
    throw std::runtime_error("normalize: mult.comult is not an invertible scalar");
  FrobeniusObject out = f;
  out.comult = scale(inv(lam), f.comult);
  out.counit = scale(lam, f.counit);
  return out;
}

}  // namespace bulkcor
