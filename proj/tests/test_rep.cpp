#include <doctest.h>

#include <algorithm>
#include <set>

#include "bulkcor/hopf.hpp"
#include "bulkcor/qpoly.hpp"
#include "bulkcor/rep.hpp"

using namespace bulkcor;

namespace {

void require_all_pass(const Report& rep) {
  CHECK_MESSAGE(rep.all_pass(), report_to_text(rep));
}

QPoly qp(std::vector<long> coeffs) {
  QPoly p;
  for (long c : coeffs) p.emplace_back(c);
  return qpoly_trim(std::move(p));
}

bool is_scalar_matrix(const Matrix& m, Scalar* value) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (i != j && !m.at(i, j).is_zero()) return false;
  for (int i = 1; i < m.rows; ++i)
    if (!eq(m.at(i, i), m.at(0, 0))) return false;
  if (value) *value = m.at(0, 0);
  return true;
}


const HopfData& z2_double() {
  static HopfData d = drinfeld_double_of_group(cyclic_group_table(2), 1);
  return d;
}

const HopfData& s3_double_over_q() {
  static HopfData d = drinfeld_double_of_group(symmetric_group_s3_table(), 1);
  return d;
}

const HopfData& s3_double() {
  static HopfData d = drinfeld_double_of_group(symmetric_group_s3_table(), 3);
  return d;
}

const HopfData& sweedler_double() {
  static HopfData d = drinfeld_double_of_hopf(sweedler_algebra(1));
  return d;
}

}  // namespace

TEST_CASE("rational polynomial factorization") {
  SUBCASE("difference of squares") {
    auto f = factor_qpoly(qp({-1, 0, 1}));
    REQUIRE(f.size() == 2);
    CHECK(qpoly_eq(f[0], qp({-1, 1})));
    CHECK(qpoly_eq(f[1], qp({1, 1})));
  }
  SUBCASE("irreducible quadratic and quartic") {
    CHECK(factor_qpoly(qp({1, 1, 1})).size() == 1);
    CHECK(factor_qpoly(qp({1, 0, 0, 0, 1})).size() == 1);
  }
  SUBCASE("repeated factor") {
    // (x^2+x+1)(x-2)(x+3)^2
    QPoly g = qpoly_mul(qpoly_mul(qp({1, 1, 1}), qp({-2, 1})),
                        qpoly_mul(qp({3, 1}), qp({3, 1})));
    auto f = factor_qpoly(g);
    REQUIRE(f.size() == 4);
    int threes = 0;
    for (const auto& p : f) threes += qpoly_eq(p, qp({3, 1}));
    CHECK(threes == 2);
  }
  SUBCASE("non-monic input with rational roots") {
    QPoly g = qp({1, -5, 6});  // 6x^2 - 5x + 1
    auto f = factor_qpoly(g);
    REQUIRE(f.size() == 2);
    QPoly half = {mpq_class(-1, 2), mpq_class(1)};
    QPoly third = {mpq_class(-1, 3), mpq_class(1)};
    CHECK(qpoly_eq(f[0], half));
    CHECK(qpoly_eq(f[1], third));
  }
  SUBCASE("x^16 - 1 splits into five cyclotomic factors") {
    QPoly g(17, mpq_class(0));
    g[0] = -1;
    g[16] = 1;
    auto f = factor_qpoly(g);
    REQUIRE(f.size() == 5);
    long total = 0;
    for (const auto& p : f) total += qpoly_deg(p);
    CHECK(total == 16);
  }
  SUBCASE("three quadratic irreducibles") {
    QPoly g = qpoly_mul(qpoly_mul(qp({-2, 0, 1}), qp({-3, 0, 1})), qp({1, 0, 1}));
    auto f = factor_qpoly(g);
    REQUIRE(f.size() == 3);
    for (const auto& p : f) CHECK(qpoly_deg(p) == 2);
  }
}

TEST_CASE("modules over the double of Z2") {
  const HopfData& d = z2_double();
  ModuleRep triv = trivial_module(d);
  ModuleRep reg = regular_module(d);
  require_all_pass(verify_module(triv));
  require_all_pass(verify_module(reg));

  SUBCASE("hom dimensions") {
    CHECK(hom_dim(triv, triv) == 1);
    // endomorphisms of the left regular module: right multiplications
    CHECK(hom_dim(reg, reg) == d.dim);
    CHECK(hom_dim(triv, reg) == 1);
    for (const auto& f : hom_basis(reg, reg)) CHECK(is_intertwiner(reg, reg, f));
  }

  SUBCASE("broken map is rejected") {
    Matrix f = identity_matrix(d.dim, 1);
    f.at(0, 1) = scalar_one(1);
    bool any = false;
    for (int i = 0; i < d.dim && !any; ++i)
      any = !mat_eq(mul(f, reg.action[i]), mul(reg.action[i], f));
    CHECK(any == !is_intertwiner(reg, reg, f));
  }

  SUBCASE("tensoring with the trivial module changes nothing") {
    ModuleRep mt = tensor(reg, triv);
    ModuleRep tm = tensor(triv, reg);
    for (int i = 0; i < d.dim; ++i) {
      CHECK(mat_eq(mt.action[i], reg.action[i]));
      CHECK(mat_eq(tm.action[i], reg.action[i]));
    }
  }

  SUBCASE("tensor of regulars is a verified module") {
    ModuleRep rr = tensor(reg, reg);
    require_all_pass(verify_module(rr));
    CHECK(rr.dim == 16);
  }
}

TEST_CASE("duality maps") {
  const HopfData& d = z2_double();
  ModuleRep reg = regular_module(d);
  ModuleRep triv = trivial_module(d);
  DualityData dd = dual(reg);
  require_all_pass(verify_module(dd.dual));
  int n = reg.dim;
  Matrix id_m = identity_matrix(n, 1);

  SUBCASE("the four structure maps intertwine") {
    ModuleRep dv_m = tensor(dd.dual, reg);
    ModuleRep m_dv = tensor(reg, dd.dual);
    CHECK(is_intertwiner(dv_m, triv, dd.ev));
    CHECK(is_intertwiner(triv, m_dv, dd.coev));
    CHECK(is_intertwiner(m_dv, triv, dd.ev_right));
    CHECK(is_intertwiner(triv, dv_m, dd.coev_right));
  }

  SUBCASE("zig-zag identities") {
    // (id (x) ev)(coev (x) id) = id and (ev (x) id)(id (x) coev) = id
    CHECK(mat_eq(mul(kron(id_m, dd.ev), kron(dd.coev, id_m)), id_m));
    CHECK(mat_eq(mul(kron(dd.ev, id_m), kron(id_m, dd.coev)), id_m));
    // right-handed versions
    CHECK(mat_eq(mul(kron(dd.ev_right, id_m), kron(id_m, dd.coev_right)), id_m));
    CHECK(mat_eq(mul(kron(id_m, dd.ev_right), kron(dd.coev_right, id_m)), id_m));
  }

  SUBCASE("quantum dimensions") {
    CHECK(eq(qdim(triv), scalar_one(1)));
    // ev_right . coev = qdim as a 1x1 matrix
    Matrix loop = mul(dd.ev_right, dd.coev);
    CHECK(eq(loop.at(0, 0), qdim(reg)));
    // multiplicative under tensor
    ModuleRep rr = tensor(reg, reg);
    CHECK(eq(qdim(rr), mul(qdim(reg), qdim(reg))));
  }
}

TEST_CASE("braiding over the double of Z2") {
  const HopfData& d = z2_double();
  ModuleRep reg = regular_module(d);
  ModuleRep triv = trivial_module(d);

  SUBCASE("braiding with the trivial module is the identity") {
    ModuleMap c = braiding(triv, reg);
    CHECK(mat_eq(c.matrix, identity_matrix(reg.dim, 1)));
    ModuleMap c2 = braiding(reg, triv);
    CHECK(mat_eq(c2.matrix, identity_matrix(reg.dim, 1)));
  }

  SUBCASE("braiding is an invertible intertwiner") {
    ModuleMap c = braiding(reg, reg);
    CHECK(is_intertwiner(c.source, c.target, c.matrix));
    ModuleMap ci = braiding_inverse(reg, reg);
    CHECK(mat_eq(mul(ci.matrix, c.matrix), identity_matrix(reg.dim * reg.dim, 1)));
    CHECK(mat_eq(mul(c.matrix, ci.matrix), identity_matrix(reg.dim * reg.dim, 1)));
  }

  SUBCASE("hexagon identities") {
    // c_{m, n (x) p} = (id_n (x) c_{m,p}) (c_{m,n} (x) id_p)
    ModuleRep m = reg, n = reg, p = reg;
    Matrix lhs = braiding(m, tensor(n, p)).matrix;
    Matrix rhs = mul(kron(identity_matrix(n.dim, 1), braiding(m, p).matrix),
                     kron(braiding(m, n).matrix, identity_matrix(p.dim, 1)));
    CHECK(mat_eq(lhs, rhs));
    // c_{m (x) n, p} = (c_{m,p} (x) id_n) (id_m (x) c_{n,p})
    Matrix lhs2 = braiding(tensor(m, n), p).matrix;
    Matrix rhs2 = mul(kron(braiding(m, p).matrix, identity_matrix(n.dim, 1)),
                      kron(identity_matrix(m.dim, 1), braiding(n, p).matrix));
    CHECK(mat_eq(lhs2, rhs2));
  }

  SUBCASE("naturality in both slots") {
    Wedderburn w = wedderburn(d);
    REQUIRE(w.simples.size() == 4);
    const ModuleRep& s0 = w.simples[0];
    const ModuleRep& s1 = w.simples[1];
    std::vector<Matrix> f0 = hom_basis(s0, reg);
    std::vector<Matrix> f1 = hom_basis(s1, reg);
    REQUIRE(!f0.empty());
    REQUIRE(!f1.empty());
    Matrix lhs = mul(braiding(reg, reg).matrix, kron(f0[0], f1[0]));
    Matrix rhs = mul(kron(f1[0], f0[0]), braiding(s0, s1).matrix);
    CHECK(mat_eq(lhs, rhs));
  }
}

TEST_CASE("twists over the double of Z2") {
  const HopfData& d = z2_double();
  ModuleRep reg = regular_module(d);
  ModuleRep triv = trivial_module(d);

  SUBCASE("trivial module twist is one") {
    Matrix t = twist(triv).matrix;
    CHECK(eq(t.at(0, 0), scalar_one(1)));
  }

  SUBCASE("twist is inverse to twist_inverse and natural") {
    Matrix t = twist(reg).matrix;
    Matrix ti = twist_inverse(reg).matrix;
    CHECK(mat_eq(mul(t, ti), identity_matrix(reg.dim, 1)));
    CHECK(is_intertwiner(reg, reg, t));
  }

  SUBCASE("twist of a tensor factors through the monodromy") {
    ModuleRep rr = tensor(reg, reg);
    Matrix lhs = twist(rr).matrix;
    Matrix rhs = mul(braiding(reg, reg).matrix,
                     mul(braiding(reg, reg).matrix,
                         kron(twist(reg).matrix, twist(reg).matrix)));
    CHECK(mat_eq(lhs, rhs));
  }

  SUBCASE("twist commutes with taking duals on a group double") {
    DualityData dd = dual(reg);
    CHECK(mat_eq(twist(dd.dual).matrix, transpose(twist(reg).matrix)));
  }

  SUBCASE("twist scalars on the simples") {
    Wedderburn w = wedderburn(d);
    REQUIRE(w.simples.size() == 4);
    std::multiset<std::string> scalars;
    for (const auto& s : w.simples) {
      Scalar v;
      REQUIRE(is_scalar_matrix(twist(s).matrix, &v));
      scalars.insert(to_string(v));
    }
    CHECK(scalars == std::multiset<std::string>({"-1", "1", "1", "1"}));
  }
}

TEST_CASE("semisimple decomposition of the double of Z2") {
  const HopfData& d = z2_double();
  Wedderburn w = wedderburn(d);

  CHECK(w.radical.dim() == 0);
  REQUIRE(w.simples.size() == 4);
  for (const auto& s : w.simples) {
    CHECK(s.dim == 1);
    require_all_pass(verify_module(s));
    CHECK(hom_dim(s, s) == 1);
  }
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j) CHECK(hom_dim(w.simples[i], w.simples[j]) == 0);

  SUBCASE("projective covers coincide with the simples") {
    std::vector<Pim> ps = pims(d);
    REQUIRE(ps.size() == 4);
    long total = 0;
    for (const auto& p : ps) {
      CHECK(p.module.dim == 1);
      CHECK(p.multiplicity == 1);
      require_all_pass(verify_module(p.module));
      CHECK(vec_eq(d.multiply(p.idempotent, p.idempotent), p.idempotent));
      total += static_cast<long>(p.module.dim) * p.multiplicity;
    }
    CHECK(total == d.dim);
    // idempotents are orthogonal and sum to 1
    Vec sum = vec_zero(d.dim, 1);
    for (const auto& p : ps) sum = vec_add(sum, p.idempotent);
    CHECK(vec_eq(sum, d.unit));
  }

  SUBCASE("cartan matrix is the identity") {
    auto c = cartan_matrix(d);
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < c.size(); ++j) CHECK(c[i][j] == (i == j ? 1 : 0));
  }

  SUBCASE("regular module decomposes with each simple once") {
    std::vector<int> counts = composition_factors(regular_module(d), w);
    for (int c : counts) CHECK(c == 1);
  }

  SUBCASE("tensor decompositions add up") {
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) {
        ModuleRep t = tensor(w.simples[i], w.simples[j]);
        std::vector<int> counts = composition_factors(t, w);
        int total = 0;
        for (int c : counts) total += c;
        CHECK(total == 1);  // product of one-dimensionals is one-dimensional
      }
  }
}

TEST_CASE("decomposition of the S3 double needs a cube root of unity") {
  CHECK_THROWS_AS((void)wedderburn(s3_double_over_q()), std::runtime_error);

  const HopfData& d = s3_double();
  Wedderburn w = wedderburn(d);
  CHECK(w.radical.dim() == 0);
  REQUIRE(w.simples.size() == 8);
  std::multiset<int> dims;
  long sq = 0;
  for (const auto& s : w.simples) {
    dims.insert(s.dim);
    sq += static_cast<long>(s.dim) * s.dim;
    require_all_pass(verify_module(s));
    CHECK(hom_dim(s, s) == 1);
  }
  CHECK(dims == std::multiset<int>({1, 1, 2, 2, 2, 2, 3, 3}));
  CHECK(sq == 36);

  SUBCASE("regular module contains each simple with multiplicity its dimension") {
    std::vector<int> counts = composition_factors(regular_module(d), w);
    for (size_t i = 0; i < w.simples.size(); ++i) CHECK(counts[i] == w.simples[i].dim);
  }

  SUBCASE("hom-tensor adjunction") {
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) {
        const ModuleRep& m = w.simples[2 + i];  // include two-dimensionals
        const ModuleRep& n = w.simples[2 + j];
        ModuleRep dv = dual(m).dual;
        CHECK(hom_dim(trivial_module(d), tensor(dv, n)) == hom_dim(m, n));
      }
  }

  SUBCASE("twists are scalars on the simples") {
    for (const auto& s : w.simples) {
      Scalar v;
      CHECK(is_scalar_matrix(twist(s).matrix, &v));
    }
  }
}

TEST_CASE("decomposition of the Sweedler double") {
  const HopfData& d = sweedler_double();
  Wedderburn w = wedderburn(d);
  CHECK(w.radical.dim() > 0);
  for (const auto& s : w.simples) {
    require_all_pass(verify_module(s));
    CHECK(hom_dim(s, s) == 1);
  }

  std::vector<Pim> ps = pims(d);
  REQUIRE(ps.size() == w.simples.size());
  long total = 0;
  for (const auto& p : ps) {
    require_all_pass(verify_module(p.module));
    CHECK(vec_eq(d.multiply(p.idempotent, p.idempotent), p.idempotent));
    CHECK(p.multiplicity == w.simples[p.top_index].dim);
    total += static_cast<long>(p.module.dim) * p.multiplicity;
  }
  CHECK(total == d.dim);

  SUBCASE("cartan numbers match the socle filtration") {
    auto c = cartan_matrix(d);
    for (size_t j = 0; j < ps.size(); ++j) {
      std::vector<int> counts = composition_factors(ps[j].module, w);
      for (size_t i = 0; i < ps.size(); ++i) CHECK(c[i][j] == counts[i]);
    }
  }

  SUBCASE("projective covers surject onto their tops") {
    for (size_t i = 0; i < ps.size(); ++i) {
      std::vector<int> counts = composition_factors(ps[i].module, w);
      CHECK(counts[ps[i].top_index] >= 1);
    }
  }
}

TEST_CASE("adjoint and coadjoint modules") {
  const HopfData& d = z2_double();
  ModuleRep adj = adjoint_module(d);
  ModuleRep coadj = coadjoint_module(d);
  require_all_pass(verify_module(adj));
  require_all_pass(verify_module(coadj));
  CHECK(adj.dim == d.dim);

  // the unit is an invariant vector for the adjoint action
  for (int i = 0; i < d.dim; ++i) {
    Vec lhs = mat_vec(adj.action[i], d.unit);
    Vec rhs = vec_scale(d.counit.at(0, i), d.unit);
    CHECK(vec_eq(lhs, rhs));
  }

  // adjoint invariants = center; for this double the algebra is commutative
  CHECK(hom_dim(trivial_module(d), adj) == d.dim);

  const HopfData& ds3 = s3_double();
  ModuleRep adj3 = adjoint_module(ds3);
  require_all_pass(verify_module(adj3));
  // center of the S3 double has dimension 8 (one per block)
  CHECK(hom_dim(trivial_module(ds3), adj3) == 8);
}
