#include "bulkcor/scalar.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace bulkcor {

namespace {

// Exact division of integer polynomials, quotient known to be integral.
// Used only for x^n - 1 divided by products of cyclotomics.
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num,
                                      const std::vector<mpz_class>& den) {
  if (den.empty() || den.back() == 0) throw std::invalid_argument("bad divisor");
  std::vector<mpz_class> q(num.size() - den.size() + 1, mpz_class(0));
  for (int i = (int)q.size() - 1; i >= 0; --i) {
    mpz_class coef = num[i + den.size() - 1] / den.back();
    q[i] = coef;
    if (coef != 0)
      for (size_t j = 0; j < den.size(); ++j) num[i + j] -= coef * den[j];
  }
  for (const auto& r : num)
    if (r != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

std::vector<mpz_class> poly_mul_z(const std::vector<mpz_class>& a,
                                  const std::vector<mpz_class>& b) {
  std::vector<mpz_class> r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::mutex g_cyclo_mutex;
std::map<unsigned, std::vector<mpz_class>> g_cyclo;

// Reduction table: row k holds the power-basis coordinates of zeta^(phi+k)
// for k = 0..phi-2, so products of two reduced elements fold in one pass.
std::mutex g_red_mutex;
std::map<unsigned, std::vector<std::vector<mpq_class>>> g_red;

const std::vector<std::vector<mpq_class>>& reduction_rows(unsigned n) {
  std::lock_guard<std::mutex> lock(g_red_mutex);
  auto it = g_red.find(n);
  if (it != g_red.end()) return it->second;
  unsigned phi = cyclotomic_degree(n);
  const auto& phi_poly = cyclotomic_polynomial(n);
  std::vector<std::vector<mpq_class>> rows;
  // zeta^phi = -(phi_poly[0] + ... + phi_poly[phi-1] x^{phi-1}); Phi_n is monic.
  std::vector<mpq_class> cur(phi);
  for (unsigned i = 0; i < phi; ++i) cur[i] = mpq_class(-phi_poly[i]);
  rows.push_back(cur);
  for (unsigned k = 1; k + 1 < phi; ++k) {
    std::vector<mpq_class> nxt(phi, mpq_class(0));
    // multiply cur by x and reduce the overflow term via rows[0]
    mpq_class top = cur[phi - 1];
    for (unsigned i = phi - 1; i >= 1; --i) nxt[i] = cur[i - 1];
    nxt[0] = 0;
    if (top != 0)
      for (unsigned i = 0; i < phi; ++i) nxt[i] += top * rows[0][i];
    rows.push_back(nxt);
    cur = std::move(nxt);
  }
  auto res = g_red.emplace(n, std::move(rows));
  return res.first->second;
}

void check_same_order(const Scalar& a, const Scalar& b) {
  if (a.order != b.order) throw std::invalid_argument("scalar order mismatch");
}

// Polynomial arithmetic over Q for the extended Euclid in inv().
using QPoly = std::vector<mpq_class>;  // ascending, may have leading zeros

int qdeg(const QPoly& p) {
  for (int i = (int)p.size() - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

QPoly qtrim(QPoly p) {
  int d = qdeg(p);
  p.resize(d + 1 >= 1 ? d + 1 : 1);
  if (d < 0) p[0] = 0;
  return p;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return qtrim(r);
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return qtrim(a);
}

// division with remainder: returns quotient, leaves remainder in a
QPoly qdivmod(QPoly& a, const QPoly& b) {
  int db = qdeg(b);
  if (db < 0) throw std::invalid_argument("poly division by zero");
  QPoly q(std::max<int>(qdeg(a) - db + 1, 1), mpq_class(0));
  while (qdeg(a) >= db) {
    int da = qdeg(a);
    mpq_class coef = a[da] / b[db];
    q[da - db] += coef;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= coef * b[i];
    a = qtrim(a);
    if (qdeg(a) < 0) break;
  }
  return qtrim(q);
}

}  // namespace

unsigned cyclotomic_degree(unsigned n) {
  if (n == 0) throw std::invalid_argument("order must be positive");
  unsigned result = n, m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("order must be positive");
  std::lock_guard<std::mutex> lock(g_cyclo_mutex);
  auto it = g_cyclo.find(n);
  if (it != g_cyclo.end()) return it->second;
  // compute all missing divisors bottom-up to keep recursion out of the lock
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0 || g_cyclo.count(d)) continue;
    std::vector<mpz_class> num(d + 1, mpz_class(0));
    num[0] = -1;
    num[d] = 1;
    std::vector<mpz_class> den{mpz_class(1)};
    for (unsigned e = 1; e < d; ++e)
      if (d % e == 0) den = poly_mul_z(den, g_cyclo.at(e));
    g_cyclo.emplace(d, poly_div_exact(std::move(num), den));
  }
  return g_cyclo.at(n);
}

bool Scalar::is_zero() const {
  for (const auto& q : c)
    if (q != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (c.empty() || c[0] != 1) return false;
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

mpq_class Scalar::rational_part() const {
  if (!is_rational()) throw std::logic_error("scalar is not rational");
  return c[0];
}

Scalar scalar_zero(unsigned order) {
  return Scalar(order, std::vector<mpq_class>(cyclotomic_degree(order), mpq_class(0)));
}

Scalar scalar_one(unsigned order) {
  Scalar s = scalar_zero(order);
  s.c[0] = 1;
  return s;
}

Scalar scalar_rational(const mpq_class& q, unsigned order) {
  Scalar s = scalar_zero(order);
  s.c[0] = q;
  return s;
}

Scalar scalar_zeta(unsigned order) {
  Scalar s = scalar_zero(order);
  unsigned phi = cyclotomic_degree(order);
  if (order == 1) {
    s.c[0] = 1;            // zeta_1 = 1
  } else if (phi == 1) {
    s.c[0] = -1;           // order 2: Phi_2 = x + 1
  } else {
    s.c[1] = 1;
  }
  return s;
}

Scalar add(const Scalar& a, const Scalar& b) {
  check_same_order(a, b);
  Scalar r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

Scalar sub(const Scalar& a, const Scalar& b) {
  check_same_order(a, b);
  Scalar r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

Scalar neg(const Scalar& a) {
  Scalar r = a;
  for (auto& q : r.c) q = -q;
  return r;
}

Scalar mul(const Scalar& a, const Scalar& b) {
  check_same_order(a, b);
  unsigned phi = (unsigned)a.c.size();
  if (phi == 1) {
    Scalar r = a;
    r.c[0] = a.c[0] * b.c[0];
    return r;
  }
  std::vector<mpq_class> prod(2 * phi - 1, mpq_class(0));
  for (unsigned i = 0; i < phi; ++i)
    if (a.c[i] != 0)
      for (unsigned j = 0; j < phi; ++j)
        if (b.c[j] != 0) prod[i + j] += a.c[i] * b.c[j];
  const auto& rows = reduction_rows(a.order);
  Scalar r = scalar_zero(a.order);
  for (unsigned i = 0; i < phi; ++i) r.c[i] = prod[i];
  for (unsigned k = 0; k + 1 < phi; ++k) {
    const mpq_class& over = prod[phi + k];
    if (over != 0)
      for (unsigned i = 0; i < phi; ++i) r.c[i] += over * rows[k][i];
  }
  return r;
}

Scalar inv(const Scalar& a) {
  if (a.is_zero()) throw std::domain_error("division by zero scalar");
  if (a.c.size() == 1) {
    Scalar r = a;
    r.c[0] = 1 / a.c[0];
    return r;
  }
  // extended Euclid: s*a + t*Phi_n = gcd = nonzero constant
  const auto& phi_poly = cyclotomic_polynomial(a.order);
  QPoly r0(phi_poly.size());
  for (size_t i = 0; i < phi_poly.size(); ++i) r0[i] = mpq_class(phi_poly[i]);
  QPoly r1 = qtrim(a.c);
  QPoly s0{mpq_class(0)}, s1{mpq_class(1)};  // coefficients of a
  while (qdeg(r1) > 0) {
    QPoly rem = r0;
    QPoly q = qdivmod(rem, r1);
    r0 = r1;
    r1 = rem;
    QPoly snew = qsub(s0, qmul(q, s1));
    s0 = s1;
    s1 = snew;
  }
  if (qdeg(r1) != 0) throw std::logic_error("inv: gcd with Phi_n not constant");
  mpq_class g = r1[0];
  Scalar out = scalar_zero(a.order);
  for (size_t i = 0; i < s1.size() && i < out.c.size(); ++i) out.c[i] = s1[i] / g;
  return out;
}

Scalar div(const Scalar& a, const Scalar& b) { return mul(a, inv(b)); }

bool eq(const Scalar& a, const Scalar& b) {
  if (a.order == b.order) {
    return a.c == b.c;
  }
  Scalar x = a, y = b;
  lift(x, y);
  return x.c == y.c;
}

Scalar embed(const Scalar& a, unsigned n) {
  if (n % a.order != 0) throw std::invalid_argument("embed: order does not divide target");
  if (n == a.order) return a;
  unsigned step = n / a.order;  // zeta_m = zeta_n^step
  unsigned phi_n = cyclotomic_degree(n);
  const std::vector<std::vector<mpq_class>>* rows = phi_n > 1 ? &reduction_rows(n) : nullptr;
  Scalar out = scalar_zero(n);
  // power basis of the subfield element: sum a_i zeta_m^i = sum a_i zeta_n^{step*i}
  // (for phi(m) = 1 the basis is the constant 1 and the loop only hits i = 0)
  for (unsigned i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    mpq_class coef = a.c[i];
    unsigned e = (step * i) % n;
    // zeta_n^e for e < phi_n is a basis vector; otherwise repeated reduction
    std::vector<mpq_class> pw(phi_n, mpq_class(0));
    if (e < phi_n) {
      pw[e] = 1;
    } else {
      // build by multiplying x^(phi_n-1) by x repeatedly using rows
      std::vector<mpq_class> cur(phi_n, mpq_class(0));
      cur[phi_n - 1] = 1;
      unsigned rem = e - (phi_n - 1);
      while (rem--) {
        std::vector<mpq_class> nxt(phi_n, mpq_class(0));
        mpq_class top = cur[phi_n - 1];
        for (unsigned k = phi_n - 1; k >= 1; --k) nxt[k] = cur[k - 1];
        if (top != 0)
          for (unsigned k = 0; k < phi_n; ++k) nxt[k] += top * (*rows)[0][k];
        cur = std::move(nxt);
      }
      pw = cur;
    }
    for (unsigned k = 0; k < phi_n; ++k) out.c[k] += coef * pw[k];
  }
  return out;
}

bool try_project(const Scalar& a, unsigned m, Scalar* out) {
  if (a.order % m != 0) return false;
  // solve embed(x, order(a)) == a by matching coordinates of the basis images
  unsigned phi_m = cyclotomic_degree(m);
  std::vector<Scalar> images;
  images.reserve(phi_m);
  for (unsigned i = 0; i < phi_m; ++i) {
    Scalar basis = scalar_zero(m);
    basis.c[i] = 1;
    images.push_back(embed(basis, a.order));
  }
  // small dense solve by elimination over the rationals
  unsigned phi_n = (unsigned)a.c.size();
  std::vector<std::vector<mpq_class>> Ab(phi_n, std::vector<mpq_class>(phi_m + 1, mpq_class(0)));
  for (unsigned r = 0; r < phi_n; ++r) {
    for (unsigned ccol = 0; ccol < phi_m; ++ccol) Ab[r][ccol] = images[ccol].c[r];
    Ab[r][phi_m] = a.c[r];
  }
  unsigned row = 0;
  std::vector<int> pivot_col(phi_m, -1);
  for (unsigned col = 0; col < phi_m && row < phi_n; ++col) {
    unsigned sel = row;
    while (sel < phi_n && Ab[sel][col] == 0) ++sel;
    if (sel == phi_n) continue;
    std::swap(Ab[sel], Ab[row]);
    mpq_class p = Ab[row][col];
    for (auto& v : Ab[row]) v /= p;
    for (unsigned r2 = 0; r2 < phi_n; ++r2) {
      if (r2 == row || Ab[r2][col] == 0) continue;
      mpq_class f = Ab[r2][col];
      for (unsigned c2 = col; c2 <= phi_m; ++c2) Ab[r2][c2] -= f * Ab[row][c2];
    }
    pivot_col[col] = (int)row;
    ++row;
  }
  Scalar cand = scalar_zero(m);
  for (unsigned col = 0; col < phi_m; ++col)
    if (pivot_col[col] >= 0) cand.c[col] = Ab[pivot_col[col]][phi_m];
  if (!eq(embed(cand, a.order), a)) return false;
  if (out) *out = cand;
  return true;
}

void lift(Scalar& a, Scalar& b) {
  unsigned n = std::lcm(a.order, b.order);
  a = embed(a, n);
  b = embed(b, n);
}

std::string to_string(const Scalar& a) {
  if (a.order == 1 || a.is_rational()) return a.c[0].get_str();
  std::string s = "[";
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (i) s += ",";
    s += a.c[i].get_str();
  }
  s += "]@z" + std::to_string(a.order);
  return s;
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

}  // namespace bulkcor
