#include "bulkcor/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace bulkcor {

Matrix::Matrix(int r, int c, unsigned ord) : rows(r), cols(c), order(ord) {
  a.assign((size_t)r * c, scalar_zero(ord));
}

void Matrix::set(int r, int c, const Scalar& v) {
  at(r, c) = v.order == order ? v : embed(v, order);
}

bool Matrix::is_zero() const {
  for (const auto& s : a)
    if (!s.is_zero()) return false;
  return true;
}

Matrix identity_matrix(int n, unsigned order) {
  Matrix m(n, n, order);
  for (int i = 0; i < n; ++i) m.at(i, i) = scalar_one(order);
  return m;
}

Matrix zero_matrix(int r, int c, unsigned order) { return Matrix(r, c, order); }

Matrix embed_matrix(const Matrix& m, unsigned order) {
  if (m.order == order) return m;
  Matrix out(m.rows, m.cols, order);
  for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = embed(m.a[i], order);
  return out;
}

namespace {
unsigned common_order(const Matrix& x, const Matrix& y) {
  return std::lcm(x.order, y.order);
}
}  // namespace

Matrix add(const Matrix& x0, const Matrix& y0) {
  if (x0.rows != y0.rows || x0.cols != y0.cols) throw std::invalid_argument("add: shape");
  unsigned ord = common_order(x0, y0);
  Matrix x = embed_matrix(x0, ord), y = embed_matrix(y0, ord);
  for (size_t i = 0; i < x.a.size(); ++i) x.a[i] = bulkcor::add(x.a[i], y.a[i]);
  return x;
}

Matrix sub(const Matrix& x0, const Matrix& y0) {
  if (x0.rows != y0.rows || x0.cols != y0.cols) throw std::invalid_argument("sub: shape");
  unsigned ord = common_order(x0, y0);
  Matrix x = embed_matrix(x0, ord), y = embed_matrix(y0, ord);
  for (size_t i = 0; i < x.a.size(); ++i) x.a[i] = bulkcor::sub(x.a[i], y.a[i]);
  return x;
}

Matrix mul(const Matrix& x0, const Matrix& y0) {
  if (x0.cols != y0.rows) throw std::invalid_argument("mul: shape");
  unsigned ord = common_order(x0, y0);
  Matrix x = embed_matrix(x0, ord), y = embed_matrix(y0, ord);
  Matrix r(x.rows, y.cols, ord);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Scalar& xv = x.at(i, k);
      if (xv.is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Scalar& yv = y.at(k, j);
        if (yv.is_zero()) continue;
        r.at(i, j) = bulkcor::add(r.at(i, j), bulkcor::mul(xv, yv));
      }
    }
  return r;
}

Matrix scale(const Scalar& s0, const Matrix& x0) {
  unsigned ord = std::lcm(s0.order, x0.order);
  Scalar s = embed(s0, ord);
  Matrix x = embed_matrix(x0, ord);
  for (auto& v : x.a) v = bulkcor::mul(s, v);
  return x;
}

Matrix transpose(const Matrix& x) {
  Matrix r(x.cols, x.rows, x.order);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

Matrix kron(const Matrix& x0, const Matrix& y0) {
  unsigned ord = common_order(x0, y0);
  Matrix x = embed_matrix(x0, ord), y = embed_matrix(y0, ord);
  Matrix r(x.rows * y.rows, x.cols * y.cols, ord);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      const Scalar& xv = x.at(i, j);
      if (xv.is_zero()) continue;
      for (int p = 0; p < y.rows; ++p)
        for (int q = 0; q < y.cols; ++q) {
          const Scalar& yv = y.at(p, q);
          if (yv.is_zero()) continue;
          r.at(i * y.rows + p, j * y.cols + q) = bulkcor::mul(xv, yv);
        }
    }
  return r;
}

Matrix hstack(const Matrix& x0, const Matrix& y0) {
  if (x0.rows != y0.rows) throw std::invalid_argument("hstack: rows");
  unsigned ord = common_order(x0, y0);
  Matrix x = embed_matrix(x0, ord), y = embed_matrix(y0, ord);
  Matrix r(x.rows, x.cols + y.cols, ord);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

Matrix vstack(const Matrix& x0, const Matrix& y0) {
  if (x0.cols != y0.cols) throw std::invalid_argument("vstack: cols");
  unsigned ord = common_order(x0, y0);
  Matrix x = embed_matrix(x0, ord), y = embed_matrix(y0, ord);
  Matrix r(x.rows + y.rows, x.cols, ord);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) r.at(x.rows + i, j) = y.at(i, j);
  return r;
}

bool mat_eq(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  unsigned ord = common_order(x, y);
  Matrix a = embed_matrix(x, ord), b = embed_matrix(y, ord);
  for (size_t i = 0; i < a.a.size(); ++i)
    if (!eq(a.a[i], b.a[i])) return false;
  return true;
}

Scalar trace(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("trace: non-square");
  Scalar t = scalar_zero(m.order);
  for (int i = 0; i < m.rows; ++i) t = bulkcor::add(t, m.at(i, i));
  return t;
}

Vec mat_vec(const Matrix& m, const Vec& v) {
  if ((int)v.size() != m.cols) throw std::invalid_argument("mat_vec: shape");
  Vec r(m.rows, scalar_zero(m.order));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const Scalar& mv = m.at(i, j);
      if (mv.is_zero() || v[j].is_zero()) continue;
      r[i] = bulkcor::add(r[i], bulkcor::mul(mv, v[j]));
    }
  return r;
}

Vec vec_zero(int n, unsigned order) { return Vec(n, scalar_zero(order)); }

Vec vec_sub(const Vec& x, const Vec& y) {
  Vec r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] = bulkcor::sub(r[i], y[i]);
  return r;
}

Vec vec_add(const Vec& x, const Vec& y) {
  Vec r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] = bulkcor::add(r[i], y[i]);
  return r;
}

Vec vec_scale(const Scalar& s, const Vec& x) {
  Vec r = x;
  for (auto& v : r) v = bulkcor::mul(s, v);
  return r;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

bool vec_eq(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i)
    if (!eq(x[i], y[i])) return false;
  return true;
}

Vec vec_kron(const Vec& x, const Vec& y) {
  Vec out;
  out.reserve(x.size() * y.size());
  for (const auto& a : x)
    for (const auto& b : y) out.push_back(mul(a, b));
  return out;
}

Vec basis_vec(int n, int i, unsigned order) {
  Vec v = vec_zero(n, order);
  v[i] = scalar_one(order);
  return v;
}

Matrix col_matrix(const Vec& v) {
  unsigned ord = 1;
  for (const auto& s : v) ord = std::lcm(ord, s.order);
  Matrix m((int)v.size(), 1, ord);
  for (int i = 0; i < m.rows; ++i) m.set(i, 0, v[i]);
  return m;
}

Vec column_of(const Matrix& m, int j) {
  Vec v(m.rows, scalar_zero(m.order));
  for (int i = 0; i < m.rows; ++i) v[i] = m.at(i, j);
  return v;
}

Matrix matrix_from_columns(const std::vector<Vec>& cols, int ambient, unsigned order) {
  Matrix m(ambient, (int)cols.size(), order);
  for (int j = 0; j < (int)cols.size(); ++j) {
    if ((int)cols[j].size() != ambient) throw std::invalid_argument("column length");
    for (int i = 0; i < ambient; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

Rref rref(Matrix m) {
  // forward pass, Bareiss one-step fraction-free updates
  Rref out;
  std::vector<int> pivots;
  int r = 0;
  Scalar prev = scalar_one(m.order);
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int sel = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    const Scalar piv = m.at(r, c);
    const Scalar prev_inv = inv(prev);
    for (int i = r + 1; i < m.rows; ++i) {
      const Scalar f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) {
        // a_ij <- (piv*a_ij - f*a_rj) / prev, the division is exact
        Scalar t = sub(mul(piv, m.at(i, j)), mul(f, m.at(r, j)));
        m.at(i, j) = mul(t, prev_inv);
      }
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  // backward pass over the field: normalize pivots, clear above
  for (int k = (int)pivots.size() - 1; k >= 0; --k) {
    int c = pivots[k];
    Scalar piv_inv = inv(m.at(k, c));
    for (int j = c; j < m.cols; ++j) m.at(k, j) = mul(m.at(k, j), piv_inv);
    for (int i = 0; i < k; ++i) {
      Scalar f = m.at(i, c);
      if (f.is_zero()) continue;
      for (int j = c; j < m.cols; ++j)
        m.at(i, j) = sub(m.at(i, j), mul(f, m.at(k, j)));
    }
  }
  out.rank = (int)pivots.size();
  out.pivot_cols = std::move(pivots);
  out.mat = std::move(m);
  return out;
}

int rank(const Matrix& m) { return rref(m).rank; }

Subspace kernel_basis(const Matrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;
  Subspace s;
  s.ambient_dim = m.cols;
  int free_count = m.cols - r.rank;
  s.basis = Matrix(m.cols, free_count, m.order);
  int out_col = 0;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    s.basis.at(f, out_col) = scalar_one(m.order);
    for (int k = 0; k < r.rank; ++k)
      s.basis.at(r.pivot_cols[k], out_col) = neg(r.mat.at(k, f));
    ++out_col;
  }
  return s;
}

Subspace column_space(const Matrix& m) {
  Rref r = rref(m);
  Subspace s;
  s.ambient_dim = m.rows;
  s.basis = Matrix(m.rows, r.rank, m.order);
  for (int k = 0; k < r.rank; ++k)
    for (int i = 0; i < m.rows; ++i) s.basis.at(i, k) = m.at(i, r.pivot_cols[k]);
  return s;
}

Subspace equalizer(const Matrix& f, const Matrix& g) {
  if (f.rows != g.rows || f.cols != g.cols) throw std::invalid_argument("equalizer: shape");
  return kernel_basis(sub(f, g));
}

IdempotentImage idempotent_image(const Matrix& p) {
  if (!p.is_square()) throw std::invalid_argument("idempotent_image: non-square");
  if (!mat_eq(mul(p, p), p)) throw std::invalid_argument("idempotent_image: not idempotent");
  IdempotentImage out;
  out.image = column_space(p);
  out.inclusion = out.image.basis;
  if (!solve_matrix(out.inclusion, p, &out.projection))
    throw std::logic_error("idempotent_image: projection solve failed");
  return out;
}

bool solve(const Matrix& m, const Vec& b, Vec* x) {
  Matrix bm = col_matrix(b);
  Matrix xm;
  if (!solve_matrix(m, bm, &xm)) return false;
  if (x) *x = column_of(xm, 0);
  return true;
}

bool solve_matrix(const Matrix& m, const Matrix& b, Matrix* x) {
  if (m.rows != b.rows) throw std::invalid_argument("solve: shape");
  Matrix aug = hstack(m, b);
  Rref r = rref(aug);
  // consistency: no pivot in the right block
  for (int c : r.pivot_cols)
    if (c >= m.cols) return false;
  Matrix sol(m.cols, b.cols, aug.order);
  for (int k = 0; k < r.rank; ++k) {
    int pc = r.pivot_cols[k];
    for (int j = 0; j < b.cols; ++j) sol.at(pc, j) = r.mat.at(k, m.cols + j);
  }
  if (x) *x = std::move(sol);
  return true;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: non-square");
  Matrix x;
  if (!solve_matrix(m, identity_matrix(m.rows, m.order), &x) ||
      !mat_eq(mul(m, x), identity_matrix(m.rows, m.order)))
    throw std::domain_error("inverse: singular matrix");
  return x;
}

bool is_invertible(const Matrix& m) {
  return m.is_square() && rank(m) == m.rows;
}

bool in_span(const Subspace& s, const Vec& v, Vec* coords) {
  if ((int)v.size() != s.ambient_dim) throw std::invalid_argument("in_span: ambient");
  Vec c;
  if (!solve(s.basis, v, &c)) return false;
  // solve() picks a representative; basis columns are independent so it is unique,
  // but verify the residual exactly anyway
  Vec back = mat_vec(s.basis, c);
  Vec w = v;
  unsigned ord = std::lcm(s.basis.order, (unsigned)1);
  for (auto& t : w) ord = std::lcm(ord, t.order);
  for (size_t i = 0; i < w.size(); ++i)
    if (!eq(embed(w[i], ord), embed(back[i], ord))) return false;
  if (coords) *coords = c;
  return true;
}

bool subspace_eq(const Subspace& x, const Subspace& y) {
  if (x.ambient_dim != y.ambient_dim) return false;
  if (x.dim() != y.dim()) return false;
  Matrix stacked = hstack(x.basis, y.basis);
  return rank(stacked) == x.dim();
}

Subspace subspace_intersect(const Subspace& x, const Subspace& y) {
  if (x.ambient_dim != y.ambient_dim) throw std::invalid_argument("intersect: ambient");
  // solutions of x.basis*a = y.basis*b; kernel of [x.basis | -y.basis]
  Matrix stacked = hstack(x.basis, scale(scalar_rational(mpq_class(-1)), y.basis));
  Subspace k = kernel_basis(stacked);
  Subspace out;
  out.ambient_dim = x.ambient_dim;
  std::vector<Vec> cols;
  for (int j = 0; j < k.dim(); ++j) {
    Vec a(x.dim(), scalar_zero(k.basis.order));
    for (int i = 0; i < x.dim(); ++i) a[i] = k.basis.at(i, j);
    cols.push_back(mat_vec(embed_matrix(x.basis, k.basis.order), a));
  }
  Matrix raw = matrix_from_columns(cols, x.ambient_dim, std::lcm(x.basis.order, y.basis.order));
  out.basis = column_space(raw).basis;
  return out;
}

Vec apply_to_slots(const Matrix& m, std::vector<int>& dims, int slot, int span, const Vec& v) {
  long left = 1, mid = 1, right = 1;
  for (int i = 0; i < slot; ++i) left *= dims[i];
  for (int i = slot; i < slot + span; ++i) mid *= dims[i];
  for (int i = slot + span; i < (int)dims.size(); ++i) right *= dims[i];
  if (m.cols != mid) throw std::invalid_argument("apply_to_slots: dim mismatch");
  if ((long)v.size() != left * mid * right) throw std::invalid_argument("apply_to_slots: vec size");
  unsigned ord = m.order;
  for (const auto& s : v) ord = std::lcm(ord, s.order);
  Vec out((size_t)(left * m.rows * right), scalar_zero(ord));
  for (long l = 0; l < left; ++l)
    for (int o = 0; o < m.rows; ++o) {
      for (int i = 0; i < m.cols; ++i) {
        Scalar mv = embed(m.at(o, i), ord);
        if (mv.is_zero()) continue;
        const size_t src_base = (size_t)(l * mid + i) * right;
        const size_t dst_base = (size_t)(l * m.rows + o) * right;
        for (long rgt = 0; rgt < right; ++rgt) {
          const Scalar& sv = v[src_base + rgt];
          if (sv.is_zero()) continue;
          out[dst_base + rgt] =
              bulkcor::add(out[dst_base + rgt], bulkcor::mul(mv, embed(sv, ord)));
        }
      }
    }
  std::vector<int> nd(dims.begin(), dims.begin() + slot);
  nd.push_back(m.rows);
  for (int i = slot + span; i < (int)dims.size(); ++i) nd.push_back(dims[i]);
  dims = std::move(nd);
  return out;
}

namespace {

// reduce v against the stored echelon rows; returns the remainder
Vec span_reduce(const std::vector<Vec>& rows, const std::vector<int>& pivots, Vec v) {
  for (size_t r = 0; r < rows.size(); ++r) {
    const Scalar& lead = v[pivots[r]];
    if (lead.is_zero()) continue;
    Scalar f = bulkcor::div(lead, rows[r][pivots[r]]);
    for (size_t k = pivots[r]; k < v.size(); ++k)
      if (!rows[r][k].is_zero())
        v[k] = bulkcor::sub(v[k], bulkcor::mul(f, rows[r][k]));
  }
  return v;
}

}  // namespace

bool SpanTracker::contains(const Vec& v) const {
  if ((int)v.size() != ambient) throw std::invalid_argument("SpanTracker: wrong length");
  return vec_is_zero(span_reduce(rows, pivots, v));
}

bool SpanTracker::insert(const Vec& v) {
  if ((int)v.size() != ambient) throw std::invalid_argument("SpanTracker: wrong length");
  Vec rem = span_reduce(rows, pivots, v);
  for (int k = 0; k < ambient; ++k)
    if (!rem[k].is_zero()) {
      rows.push_back(std::move(rem));
      pivots.push_back(k);
      return true;
    }
  return false;
}

}  // namespace bulkcor
