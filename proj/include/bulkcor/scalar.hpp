#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace bulkcor {

// Element of Q(zeta_n), stored in the power basis of Q[x]/Phi_n(x).
// order == 1 means a plain rational (coeff vector of length 1).
// All arithmetic is exact; there is no floating point in this type.
struct Scalar {
  unsigned order = 1;
  std::vector<mpq_class> c;  // length = phi(order)

  Scalar() : c(1, mpq_class(0)) {}
  explicit Scalar(const mpq_class& q) : c(1, q) {}
  explicit Scalar(long v) : c(1, mpq_class(v)) {}
  Scalar(unsigned ord, std::vector<mpq_class> coeffs) : order(ord), c(std::move(coeffs)) {}

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;          // true iff all non-constant coords vanish
  mpq_class rational_part() const;   // valid when is_rational()
};

// phi(n) and the exact cyclotomic polynomial Phi_n (integer coefficients,
// ascending degree, length phi(n)+1). Computed by dividing x^n - 1 by the
// Phi_d of proper divisors; cached internally, thread safe.
unsigned cyclotomic_degree(unsigned n);
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n);

Scalar scalar_zero(unsigned order);
Scalar scalar_one(unsigned order);
Scalar scalar_rational(const mpq_class& q, unsigned order = 1);
// zeta_n as an element of Q(zeta_n).
Scalar scalar_zeta(unsigned order);

// Arithmetic requires matching orders (callers embed first); see lift().
Scalar add(const Scalar& a, const Scalar& b);
Scalar sub(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
Scalar div(const Scalar& a, const Scalar& b);  // throws on b == 0
Scalar neg(const Scalar& a);
Scalar inv(const Scalar& a);
bool eq(const Scalar& a, const Scalar& b);

// Reinterpret a in Q(zeta_n); order(a) must divide n (zeta_m -> zeta_n^{n/m}).
Scalar embed(const Scalar& a, unsigned n);
// Inverse of embed onto Q(zeta_m) when a lies in that subfield; returns false otherwise.
bool try_project(const Scalar& a, unsigned m, Scalar* out);
// Embed both arguments into lcm of their orders.
void lift(Scalar& a, Scalar& b);

// Text encodings used by the data files: "p/q" for rationals and
// {"order": n, "coeffs": [...]} handled in json_io. to_string gives the
// canonical human-readable form used in reports.
std::string to_string(const Scalar& a);
mpq_class parse_rational(const std::string& s);  // accepts "p" and "p/q"

inline Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b); }
inline Scalar operator-(const Scalar& a, const Scalar& b) { return sub(a, b); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return mul(a, b); }
inline Scalar operator-(const Scalar& a) { return neg(a); }
inline bool operator==(const Scalar& a, const Scalar& b) { return eq(a, b); }
inline bool operator!=(const Scalar& a, const Scalar& b) { return !eq(a, b); }

}  // namespace bulkcor
