#pragma once

#include <utility>
#include <vector>

#include "bulkcor/scalar.hpp"

namespace bulkcor {

// Dense row-major matrix over one cyclotomic order. Construction embeds all
// entries into the stated order so mixed-order data cannot leak in.
struct Matrix {
  int rows = 0, cols = 0;
  unsigned order = 1;
  std::vector<Scalar> a;

  Matrix() = default;
  Matrix(int r, int c, unsigned ord);

  Scalar& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const Scalar& at(int r, int c) const { return a[(size_t)r * cols + c]; }
  void set(int r, int c, const Scalar& v);
  bool is_zero() const;
  bool is_square() const { return rows == cols; }
};

using Vec = std::vector<Scalar>;

struct Subspace {
  int ambient_dim = 0;
  Matrix basis;  // columns are linearly independent vectors
  int dim() const { return basis.cols; }
};

// Incremental membership tracker for a growing span; cheaper than redoing a
// full reduction when vectors arrive one at a time.
struct SpanTracker {
  int ambient = 0;
  unsigned order = 1;
  std::vector<Vec> rows;  // echelonized
  std::vector<int> pivots;

  SpanTracker(int ambient_dim, unsigned field_order)
      : ambient(ambient_dim), order(field_order) {}
  int dim() const { return static_cast<int>(rows.size()); }
  bool contains(const Vec& v) const;
  // false when v was already in the span, true when it enlarged it
  bool insert(const Vec& v);
};

Matrix identity_matrix(int n, unsigned order);
Matrix zero_matrix(int r, int c, unsigned order);
// reinterpret all entries in a larger cyclotomic order
Matrix embed_matrix(const Matrix& m, unsigned order);

Matrix add(const Matrix& x, const Matrix& y);
Matrix sub(const Matrix& x, const Matrix& y);
Matrix mul(const Matrix& x, const Matrix& y);
Matrix scale(const Scalar& s, const Matrix& x);
Matrix transpose(const Matrix& x);
Matrix kron(const Matrix& x, const Matrix& y);  // left factor index varies slowest
Matrix hstack(const Matrix& x, const Matrix& y);
Matrix vstack(const Matrix& x, const Matrix& y);
bool mat_eq(const Matrix& x, const Matrix& y);
Scalar trace(const Matrix& m);

Vec mat_vec(const Matrix& m, const Vec& v);
Vec vec_zero(int n, unsigned order);
Vec vec_sub(const Vec& x, const Vec& y);
Vec vec_add(const Vec& x, const Vec& y);
Vec vec_scale(const Scalar& s, const Vec& x);
bool vec_is_zero(const Vec& v);
bool vec_eq(const Vec& x, const Vec& y);
Vec vec_kron(const Vec& x, const Vec& y);  // same slot order as kron
Vec basis_vec(int n, int i, unsigned order);
Matrix col_matrix(const Vec& v);
Vec column_of(const Matrix& m, int j);
Matrix matrix_from_columns(const std::vector<Vec>& cols, int ambient, unsigned order);

// Reduced row echelon form by fraction-free (Bareiss) forward elimination and
// a field back-substitution pass. Pivots are the first nonzero entry in
// column order, which makes every derived basis deterministic.
struct Rref {
  Matrix mat;
  std::vector<int> pivot_cols;
  int rank = 0;
};
Rref rref(Matrix m);

int rank(const Matrix& m);
Subspace kernel_basis(const Matrix& m);
Subspace column_space(const Matrix& m);
Subspace equalizer(const Matrix& f, const Matrix& g);

// For p with p*p = p: subspace = image, inclusion j, projection q with
// j*q = p and q*j = id on the image.
struct IdempotentImage {
  Subspace image;
  Matrix inclusion;
  Matrix projection;
};
IdempotentImage idempotent_image(const Matrix& p);

// Solve m*x = b; returns false when inconsistent. With multiple right-hand
// sides solve_matrix solves column by column.
bool solve(const Matrix& m, const Vec& b, Vec* x);
bool solve_matrix(const Matrix& m, const Matrix& b, Matrix* x);
Matrix inverse(const Matrix& m);  // throws if singular
bool is_invertible(const Matrix& m);

bool in_span(const Subspace& s, const Vec& v, Vec* coords = nullptr);
bool subspace_eq(const Subspace& x, const Subspace& y);
// intersect subspaces of one ambient space
Subspace subspace_intersect(const Subspace& x, const Subspace& y);

// Treat v as a tensor with the given slot dimensions and apply m to the
// flattened consecutive slot range [slot, slot+span). m is d_out x d_in with
// d_in the product of the covered dims. Returns the new coordinate vector;
// dims is updated to the output shape (the range collapses to one slot of
// m.rows). This avoids materializing Kronecker factors of identity wires.
Vec apply_to_slots(const Matrix& m, std::vector<int>& dims, int slot, int span, const Vec& v);

}  // namespace bulkcor
