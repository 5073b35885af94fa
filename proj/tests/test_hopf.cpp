#include <doctest.h>

#include <set>

#include "bulkcor/hopf.hpp"

using namespace bulkcor;

namespace {

void require_all_pass(const Report& rep) {
  CHECK_MESSAGE(rep.all_pass(), report_to_text(rep));
}

bool check_failed(const Report& rep, const std::string& id) {
  const CheckResult* c = rep.find(id);
  return c != nullptr && !c->pass;
}

// inverse permutation table for a validated group table
std::vector<int> inverses(const std::vector<std::vector<int>>& t) {
  int n = (int)t.size();
  int e = -1;
  for (int i = 0; i < n; ++i)
    if (t[i][0] == 0 && t[0][i] == i) {
      bool ok = true;
      for (int b = 0; b < n; ++b) ok = ok && t[i][b] == b && t[b][i] == b;
      if (ok) {
        e = i;
        break;
      }
    }
  REQUIRE(e >= 0);
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t[a][b] == e && t[b][a] == e) inv[a] = b;
  return inv;
}

}  // namespace

TEST_CASE("group tables are valid and s3 is non-abelian") {
  auto z4 = cyclic_group_table(4);
  CHECK(z4[1][3] == 0);
  CHECK(z4[2][3] == 1);
  auto s3 = symmetric_group_s3_table();
  bool abelian = true;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      if (s3[a][b] != s3[b][a]) abelian = false;
  CHECK_FALSE(abelian);
  // broken table: not associative
  std::vector<std::vector<int>> bad = {{0, 1}, {1, 1}};
  CHECK_THROWS(group_algebra(bad, 1));
}

TEST_CASE("group algebra of Z2 satisfies all axioms") {
  HopfData h = group_algebra(cyclic_group_table(2), 1);
  require_all_pass(verify_hopf(h));
  require_all_pass(verify_quasitriangular_ribbon_pivotal(h));
  CHECK_FALSE(is_factorizable(h));
  CHECK(rank(monodromy(h)) == 1);
}

TEST_CASE("broken data is reported with the right check id") {
  HopfData h = group_algebra(cyclic_group_table(2), 1);

  SUBCASE("zeroed antipode fails only the antipode axioms") {
    h.antipode = zero_matrix(2, 2, 1);
    h.finalize();
    Report rep = verify_hopf(h);
    CHECK(check_failed(rep, "antipode-left"));
    CHECK(check_failed(rep, "antipode-right"));
    CHECK(rep.find("mult-associative")->pass);
    CHECK(rep.find("comult-coassociative")->pass);
  }

  SUBCASE("tampered product breaks associativity") {
    // make e1*e1 = e1 while keeping e1*e0 = e1: not associative with unit laws
    h.mult.set(0, 1 * 2 + 1, scalar_zero(1));
    h.mult.set(1, 1 * 2 + 1, scalar_one(1));
    h.finalize();
    Report rep = verify_hopf(h);
    CHECK_FALSE(rep.all_pass());
  }

  SUBCASE("R = 1 (x) g is not a valid R-matrix") {
    h.r_summands = {{h.unit, h.basis(1)}};
    h.finalize();
    Report rep = verify_quasitriangular_ribbon_pivotal(h);
    CHECK(check_failed(rep, "r-counit"));
    CHECK(check_failed(rep, "r-hexagon-delta-first"));
  }
}

TEST_CASE("double of Z2 group algebra matches the direct formulas") {
  auto t = cyclic_group_table(2);
  HopfData d = drinfeld_double_of_group(t, 1);
  CHECK(d.dim == 4);
  Scalar one = scalar_one(1);

  // basis (g, x) -> g*2 + x stands for delta_g (x) x
  // product: [g == h] (g, x+y)
  for (int g = 0; g < 2; ++g)
    for (int x = 0; x < 2; ++x)
      for (int h = 0; h < 2; ++h)
        for (int y = 0; y < 2; ++y) {
          Vec p = d.multiply(d.basis(g * 2 + x), d.basis(h * 2 + y));
          Vec want = vec_zero(4, 1);
          if (g == h) want[g * 2 + t[x][y]] = one;
          CHECK(vec_eq(p, want));
        }

  // unit = sum_g delta_g (x) e
  Vec unit_want = vec_zero(4, 1);
  unit_want[0] = one;
  unit_want[2] = one;
  CHECK(vec_eq(d.unit, unit_want));

  // Delta(delta_g (x) x) = sum_{ab=g} (delta_a (x) x)(x)(delta_b (x) x)
  for (int g = 0; g < 2; ++g)
    for (int x = 0; x < 2; ++x) {
      Vec got = d.delta(d.basis(g * 2 + x));
      Vec want = vec_zero(16, 1);
      for (int a = 0; a < 2; ++a) {
        int b = t[a == 0 ? 0 : 1][g];  // a^{-1} g, with a^{-1} = a in Z2
        b = t[a][g];
        want[(a * 2 + x) * 4 + (b * 2 + x)] = one;
      }
      CHECK(vec_eq(got, want));
    }

  // ribbon = sum_g delta_g (x) g^{-1}
  Vec v_want = vec_zero(4, 1);
  v_want[0] = one;
  v_want[3] = one;
  CHECK(vec_eq(d.ribbon, v_want));

  require_all_pass(verify_hopf(d));
  require_all_pass(verify_quasitriangular_ribbon_pivotal(d));
  CHECK(is_factorizable(d));
  CHECK(rank(monodromy(d)) == 4);
}

TEST_CASE("double of S3 group algebra matches the direct formulas") {
  auto t = symmetric_group_s3_table();
  auto inv = inverses(t);
  HopfData d = drinfeld_double_of_group(t, 1);
  CHECK(d.dim == 36);
  const int m = 6;
  Scalar one = scalar_one(1);

  // full multiplication oracle:
  // (delta_g (x) x)(delta_h (x) y) = [h == x^{-1} g x] delta_g (x) xy
  for (int g = 0; g < m; ++g)
    for (int x = 0; x < m; ++x)
      for (int h = 0; h < m; ++h)
        for (int y = 0; y < m; ++y) {
          int colA = g * m + x, colB = h * m + y;
          Vec got = column_of(d.lmul[colA], colB);
          Vec want = vec_zero(36, 1);
          if (h == t[t[inv[x]][g]][x]) want[g * m + t[x][y]] = one;
          CHECK_MESSAGE(vec_eq(got, want),
                        "product mismatch at g=" << g << " x=" << x
                                                 << " h=" << h << " y=" << y);
        }

  // comultiplication oracle
  for (int g = 0; g < m; ++g)
    for (int x = 0; x < m; ++x) {
      Vec got = d.delta(d.basis(g * m + x));
      Vec want = vec_zero(36 * 36, 1);
      for (int a = 0; a < m; ++a) {
        int b = t[inv[a]][g];
        want[(size_t)(a * m + x) * 36 + (b * m + x)] = one;
      }
      CHECK(vec_eq(got, want));
    }

  // counit and antipode oracles
  int e = t[0][0] == 0 ? 0 : -1;
  REQUIRE(e == 0);  // identity of the lexicographic table is index 0
  for (int g = 0; g < m; ++g)
    for (int x = 0; x < m; ++x) {
      CHECK(eq(d.counit_of(d.basis(g * m + x)),
               g == e ? scalar_one(1) : scalar_zero(1)));
      Vec got = d.antipode_of(d.basis(g * m + x));
      Vec want = vec_zero(36, 1);
      int conj = t[t[inv[x]][inv[g]]][x];
      want[conj * m + inv[x]] = one;
      CHECK(vec_eq(got, want));
    }

  // R-matrix oracle: sum_g (delta_g (x) e) (x) (1 (x) g)
  REQUIRE(d.r_summands.size() == 6);
  for (int k = 0; k < m; ++k) {
    Vec first_want = vec_zero(36, 1);
    first_want[k * m + e] = one;
    Vec second_want = vec_zero(36, 1);
    for (int i = 0; i < m; ++i) second_want[i * m + k] = one;
    CHECK(vec_eq(d.r_summands[k].first, first_want));
    CHECK(vec_eq(d.r_summands[k].second, second_want));
  }

  // ribbon oracle
  Vec v_want = vec_zero(36, 1);
  for (int g = 0; g < m; ++g) v_want[g * m + inv[g]] = one;
  CHECK(vec_eq(d.ribbon, v_want));

  require_all_pass(verify_hopf(d));
  require_all_pass(verify_quasitriangular_ribbon_pivotal(d));
  CHECK(is_factorizable(d));
}

TEST_CASE("sweedler algebra and its double") {
  HopfData h = sweedler_algebra(1);
  require_all_pass(verify_hopf(h));
  Scalar one = scalar_one(1);

  // S(x) = -cx, S(cx) = x, S^2 = conjugation by c
  Vec sx = h.antipode_of(h.basis(2));
  Vec want = vec_zero(4, 1);
  want[3] = neg(one);
  CHECK(vec_eq(sx, want));
  Vec s2x = h.antipode_of(sx);
  want = vec_zero(4, 1);
  want[2] = neg(one);
  CHECK(vec_eq(s2x, want));

  HopfData d = drinfeld_double_of_hopf(h);
  CHECK(d.dim == 16);
  require_all_pass(verify_hopf(d));
  CHECK(is_factorizable(d));

  Report qt = verify_quasitriangular_ribbon_pivotal(d);
  for (const auto& c : qt.checks)
    if (c.check_id.rfind("r-", 0) == 0)
      CHECK_MESSAGE(c.pass, c.check_id << ": " << c.witness);
  CHECK(check_failed(qt, "ribbon-present"));  // not installed yet

  // This double carries no ribbon element for its canonical R-matrix.
  // Reason, verified below: any ribbon v would force S(u)u^{-1} to be the
  // square of a group-like element, the four group-likes phi (x) g
  // (phi in {eps, gamma}, g in {1, c}; gamma: c -> -1, x -> 0) all square
  // to the unit, yet S(u)u^{-1} = gamma (x) c != unit.
  std::vector<Vec> phis = {
      {one, one, scalar_zero(1), scalar_zero(1)},
      {one, neg(one), scalar_zero(1), scalar_zero(1)},
  };
  std::vector<Vec> grouplikes;
  for (const auto& phi : phis)
    for (int g = 0; g < 2; ++g) {
      Vec cand = vec_zero(16, 1);
      for (int i = 0; i < 4; ++i) cand[i * 4 + g] = phi[i];
      CHECK(vec_eq(d.delta(cand), vec_kron(cand, cand)));
      CHECK(vec_eq(d.multiply(cand, cand), d.unit));
      grouplikes.push_back(cand);
    }

  Vec u = drinfeld_u_element(d);
  Vec su = d.antipode_of(u);
  CHECK(!vec_eq(su, u));
  Vec uinv;
  REQUIRE(d.invert_element(u, &uinv));
  Vec witness = d.multiply(su, uinv);
  CHECK(vec_eq(witness, grouplikes[3]));  // gamma (x) c

  // exactly two of the group-likes conjugate as S^2; neither admits a ribbon
  int s2_pivots = 0, installed = 0;
  for (const auto& cand : grouplikes) {
    Vec cinv;
    REQUIRE(d.invert_element(cand, &cinv));
    bool implements_s2 = true;
    for (int i = 0; i < d.dim && implements_s2; ++i) {
      Vec lhs = d.multiply(d.multiply(cand, d.basis(i)), cinv);
      Vec rhs = d.antipode_of(d.antipode_of(d.basis(i)));
      implements_s2 = vec_eq(lhs, rhs);
    }
    if (implements_s2) ++s2_pivots;
    HopfData trial = d;
    if (install_ribbon_for_pivot(trial, cand)) ++installed;
  }
  CHECK(s2_pivots == 2);
  CHECK(installed == 0);

  // the best available substitute: v0 = omega^{-1} u for the pivot
  // omega = eps (x) c is central, invertible, counit-one, and satisfies the
  // monodromy comultiplication rule; only S(v0) = v0 fails
  Vec omega = grouplikes[1];  // eps (x) c
  HopfData balanced = d;
  balanced.pivot = omega;
  Vec omega_inv;
  REQUIRE(d.invert_element(omega, &omega_inv));
  balanced.ribbon = balanced.multiply(omega_inv, u);
  balanced.finalize();
  Report br = verify_quasitriangular_ribbon_pivotal(balanced);
  for (const auto& c : br.checks)
    if (c.check_id == "ribbon-antipode-fixed")
      CHECK(!c.pass);
    else
      CHECK_MESSAGE(c.pass, c.check_id << ": " << c.witness);
}

TEST_CASE("pivot installation works for the trivial pivot of a group double") {
  HopfData d = drinfeld_double_of_group(cyclic_group_table(2), 1);
  HopfData trial = d;
  trial.ribbon.clear();
  trial.pivot.clear();
  trial.finalize();
  REQUIRE(install_ribbon_for_pivot(trial, d.unit));
  CHECK(vec_eq(trial.ribbon, d.ribbon));
}

TEST_CASE("embedding a double into a larger coefficient field") {
  HopfData d = drinfeld_double_of_group(cyclic_group_table(2), 1);
  HopfData e = embed_hopf(d, 3);
  CHECK(e.field_order == 3);
  require_all_pass(verify_hopf(e));
  require_all_pass(verify_quasitriangular_ribbon_pivotal(e));
  CHECK(is_factorizable(e));
}

TEST_CASE("algebra generating sets are small and generate") {
  HopfData d = drinfeld_double_of_group(symmetric_group_s3_table(), 1);
  CHECK(!d.algebra_gens.empty());
  CHECK(d.algebra_gens.size() < 36);
  // closure property is guaranteed by construction; spot-check determinism
  HopfData d2 = drinfeld_double_of_group(symmetric_group_s3_table(), 1);
  CHECK(d.algebra_gens == d2.algebra_gens);
}
