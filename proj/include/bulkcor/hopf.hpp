#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "bulkcor/linalg.hpp"
#include "bulkcor/report.hpp"

namespace bulkcor {

// Finite-dimensional Hopf algebra given by structure matrices over the
// coefficient field. Conventions:
//   mult    : dim x dim^2, column (i*dim+j) is the product e_i * e_j
//   comult  : dim^2 x dim, slot order matches kron (left factor slowest)
//   counit  : 1 x dim
//   antipode: dim x dim
// r_summands lists R = sum_s a_s (x) b_s; ribbon and pivot are elements.
struct HopfData {
  int dim = 0;
  unsigned field_order = 1;
  Matrix mult;
  Vec unit;
  Matrix comult;
  Matrix counit;
  Matrix antipode;
  std::vector<std::pair<Vec, Vec>> r_summands;
  Vec ribbon;
  Vec pivot;

  // Derived tables, filled by finalize(). Loaders and constructors call it;
  // hand-assembled test data must call it before using the accessors below.
  std::vector<Matrix> lmul;  // lmul[i] = left multiplication by e_i
  std::vector<Matrix> rmul;  // rmul[i] = right multiplication by e_i
  // delta_terms[i] lists (j, k, c) with Delta(e_i) = sum c * e_j (x) e_k
  std::vector<std::vector<std::tuple<int, int, Scalar>>> delta_terms;
  Matrix antipode_inv;
  Vec ribbon_inv;  // empty when ribbon is absent/non-invertible
  Vec pivot_inv;
  // Small set of basis elements generating the algebra together with 1;
  // intertwiner conditions only need to be imposed for these.
  std::vector<int> algebra_gens;
  bool finalized = false;

  void finalize();

  Vec basis(int i) const { return basis_vec(dim, i, field_order); }
  Vec multiply(const Vec& a, const Vec& b) const;
  Vec delta(const Vec& x) const;          // length dim^2
  Scalar counit_of(const Vec& x) const;
  Vec antipode_of(const Vec& x) const;
  Matrix left_mult(const Vec& a) const;   // sum_i a_i lmul[i]
  Matrix right_mult(const Vec& a) const;
  // Two-sided inverse of a, false if a is not invertible.
  bool invert_element(const Vec& a, Vec* inv) const;

  Vec r_vector() const;    // R as a dim^2 coordinate vector
  Vec r21_vector() const;
};

// Bialgebra and antipode axioms, one CheckResult per axiom.
Report verify_hopf(const HopfData& h);

// Quasitriangularity, Yang-Baxter, ribbon and pivot axioms, and the
// compatibility pivot = u * ribbon^{-1} with u the Drinfeld element.
Report verify_quasitriangular_ribbon_pivotal(const HopfData& h);

// u = sum S(b_s) a_s for R = sum a_s (x) b_s; conjugation by u gives S^2.
Vec drinfeld_u_element(const HopfData& h);

// Matrix of f |-> (f (x) id)(R21 R) from the dual basis to the basis.
Matrix monodromy(const HopfData& h);

// True when the monodromy matrix is invertible.
bool is_factorizable(const HopfData& h);

// Group algebra k[G] from a multiplication table (table[a][b] = a*b in G),
// with S(g) = g^{-1}, R = 1 (x) 1, ribbon = pivot = 1.
HopfData group_algebra(const std::vector<std::vector<int>>& table,
                       unsigned field_order);

// Sweedler's four-dimensional Hopf algebra (no quasitriangular data set).
HopfData sweedler_algebra(unsigned field_order);

// Drinfeld double of an arbitrary finite-dimensional Hopf algebra with
// invertible antipode. Basis (i,j) -> i*h.dim+j stands for e_i^* (x) e_j.
// No ribbon or pivot is set; callers supply those separately.
HopfData drinfeld_double_of_hopf(const HopfData& h);

// Double of a group algebra, with the canonical ribbon sum_g delta_g (x)
// g^{-1} and trivial pivot filled in.
HopfData drinfeld_double_of_group(const std::vector<std::vector<int>>& table,
                                  unsigned field_order);

// Try pivot_candidate as the pivot: the matching ribbon is pivot^{-1} u.
// Installs both and returns true when the full quasitriangular/ribbon/pivot
// report passes; otherwise leaves h unchanged.
bool install_ribbon_for_pivot(HopfData& h, const Vec& pivot_candidate);

// Re-express all structure constants in Q(zeta_new_order).
HopfData embed_hopf(const HopfData& h, unsigned new_order);

// Group multiplication tables used by fixtures and tests.
std::vector<std::vector<int>> cyclic_group_table(int n);
std::vector<std::vector<int>> symmetric_group_s3_table();

}  // namespace bulkcor
