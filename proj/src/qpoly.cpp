#include "bulkcor/qpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace bulkcor {

int qpoly_deg(const QPoly& f) { return static_cast<int>(f.size()) - 1; }

QPoly qpoly_trim(QPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

QPoly qpoly_add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return qpoly_trim(std::move(r));
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return qpoly_trim(std::move(r));
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return qpoly_trim(std::move(r));
}

void qpoly_divrem(const QPoly& a, const QPoly& b, QPoly* q, QPoly* r) {
  if (b.empty()) throw std::invalid_argument("qpoly_divrem: division by zero");
  QPoly rem = a, quot;
  int db = qpoly_deg(b);
  if (qpoly_deg(a) >= db) quot.assign(a.size() - b.size() + 1, mpq_class(0));
  while (qpoly_deg(rem) >= db) {
    int k = qpoly_deg(rem) - db;
    mpq_class c = rem.back() / b.back();
    quot[k] = c;
    for (int i = 0; i <= db; ++i) rem[k + i] -= c * b[i];
    rem = qpoly_trim(std::move(rem));
  }
  if (q) *q = qpoly_trim(std::move(quot));
  if (r) *r = std::move(rem);
}

QPoly qpoly_monic(const QPoly& f) {
  if (f.empty()) return f;
  QPoly r = f;
  mpq_class lc = f.back();
  for (auto& c : r) c /= lc;
  return r;
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
  a = qpoly_trim(std::move(a));
  b = qpoly_trim(std::move(b));
  while (!b.empty()) {
    QPoly r;
    qpoly_divrem(a, b, nullptr, &r);
    a = std::move(b);
    b = std::move(r);
  }
  return qpoly_monic(a);
}

QPoly qpoly_extgcd(const QPoly& a, const QPoly& b, QPoly* u, QPoly* v) {
  QPoly r0 = qpoly_trim(a), r1 = qpoly_trim(b);
  QPoly u0 = {mpq_class(1)}, u1 = {};
  QPoly v0 = {}, v1 = {mpq_class(1)};
  while (!r1.empty()) {
    QPoly q, r;
    qpoly_divrem(r0, r1, &q, &r);
    QPoly u2 = qpoly_sub(u0, qpoly_mul(q, u1));
    QPoly v2 = qpoly_sub(v0, qpoly_mul(q, v1));
    r0 = std::move(r1); r1 = std::move(r);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (!r0.empty()) {
    mpq_class lc = r0.back();
    for (auto& c : r0) c /= lc;
    for (auto& c : u0) c /= lc;
    for (auto& c : v0) c /= lc;
  }
  if (u) *u = u0;
  if (v) *v = v0;
  return r0;
}

QPoly qpoly_derivative(const QPoly& f) {
  if (f.size() <= 1) return {};
  QPoly r(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) r[i - 1] = f[i] * mpq_class(static_cast<long>(i));
  return qpoly_trim(std::move(r));
}

bool qpoly_eq(const QPoly& a, const QPoly& b) {
  QPoly x = qpoly_trim(a), y = qpoly_trim(b);
  if (x.size() != y.size()) return false;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Factorization internals: integer polynomials and arithmetic mod p / p^k.

namespace {

using ZPoly = std::vector<mpz_class>;   // ascending, trimmed
using PPoly = std::vector<uint64_t>;    // coefficients in [0, p)

ZPoly zpoly_trim(ZPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int zdeg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zpoly_trim(std::move(r));
}

ZPoly zpoly_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return zpoly_trim(std::move(r));
}

ZPoly zpoly_mod(const ZPoly& f, const mpz_class& m) {
  ZPoly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    mpz_class v = f[i] % m;
    if (v < 0) v += m;
    r[i] = v;
  }
  return zpoly_trim(std::move(r));
}

// Symmetric representative in (-m/2, m/2].
ZPoly zpoly_mods(const ZPoly& f, const mpz_class& m) {
  ZPoly r = zpoly_mod(f, m);
  mpz_class half = m / 2;
  for (auto& c : r)
    if (c > half) c -= m;
  return zpoly_trim(std::move(r));
}

// Division by a monic divisor, exact shapes over Z/m after reduction.
void zpoly_divrem_monic(const ZPoly& a, const ZPoly& b, const mpz_class& m,
                        ZPoly* q, ZPoly* r) {
  ZPoly rem = zpoly_mod(a, m), quot;
  int db = zdeg(b);
  if (db < 0) throw std::logic_error("zpoly_divrem_monic: zero divisor");
  if (zdeg(rem) >= db) quot.assign(rem.size() - b.size() + 1, mpz_class(0));
  while (zdeg(rem) >= db) {
    int k = zdeg(rem) - db;
    mpz_class c = rem.back();
    quot[k] = c;
    for (int i = 0; i <= db; ++i) {
      rem[k + i] -= c * b[i];
      rem[k + i] %= m;
      if (rem[k + i] < 0) rem[k + i] += m;
    }
    rem = zpoly_trim(std::move(rem));
  }
  if (q) *q = zpoly_mod(quot, m);
  if (r) *r = std::move(rem);
}

// --- F_p arithmetic, p an odd word-size prime -----------------------------

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((__uint128_t)a * b % p);
}

uint64_t powmod_u(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t invmod_u(uint64_t a, uint64_t p) { return powmod_u(a, p - 2, p); }

PPoly ptrim(PPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int pdeg(const PPoly& f) { return static_cast<int>(f.size()) - 1; }

PPoly pmul(const PPoly& a, const PPoly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + (__uint128_t)a[i] * b[j]) % p;
  }
  return ptrim(std::move(r));
}

PPoly psub(const PPoly& a, const PPoly& b, uint64_t p) {
  PPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] % p;
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i] % p) % p;
  return ptrim(std::move(r));
}

void pdivrem(const PPoly& a, const PPoly& b, uint64_t p, PPoly* q, PPoly* r) {
  PPoly rem = a, quot;
  int db = pdeg(b);
  if (db < 0) throw std::logic_error("pdivrem: zero divisor");
  uint64_t binv = invmod_u(b.back(), p);
  if (pdeg(rem) >= db) quot.assign(rem.size() - b.size() + 1, 0);
  while (pdeg(rem) >= db) {
    int k = pdeg(rem) - db;
    uint64_t c = mulmod(rem.back(), binv, p);
    quot[k] = c;
    for (int i = 0; i <= db; ++i)
      rem[k + i] = (rem[k + i] + p - mulmod(c, b[i], p)) % p;
    rem = ptrim(std::move(rem));
  }
  if (q) *q = ptrim(std::move(quot));
  if (r) *r = std::move(rem);
}

PPoly pmod(const PPoly& a, const PPoly& f, uint64_t p) {
  PPoly r;
  pdivrem(a, f, p, nullptr, &r);
  return r;
}

PPoly pmonic(const PPoly& f, uint64_t p) {
  if (f.empty()) return f;
  uint64_t inv = invmod_u(f.back(), p);
  PPoly r = f;
  for (auto& c : r) c = mulmod(c, inv, p);
  return r;
}

PPoly pgcd(PPoly a, PPoly b, uint64_t p) {
  while (!b.empty()) {
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(a, p);
}

PPoly pderiv(const PPoly& f, uint64_t p) {
  if (f.size() <= 1) return {};
  PPoly r(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) r[i - 1] = mulmod(f[i], i % p, p);
  return ptrim(std::move(r));
}

// x^e mod f with mpz exponent.
PPoly ppowmod(const PPoly& base, const mpz_class& e, const PPoly& f, uint64_t p) {
  PPoly result = {1}, b = pmod(base, f, p);
  for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    result = pmod(pmul(result, result, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), bit)) result = pmod(pmul(result, b, p), f, p);
  }
  return result;
}

// Deterministic generator for equal-degree splitting trials.
struct SplitRng {
  uint64_t state;
  explicit SplitRng(uint64_t seed) : state(seed * 2654435761u + 1442695040888963407ull) {}
  uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
};

// Cantor-Zassenhaus equal-degree factorization: f = product of distinct
// irreducibles all of degree d.
void edf(const PPoly& f, int d, uint64_t p, SplitRng& rng, std::vector<PPoly>* out) {
  int n = pdeg(f);
  if (n == d) {
    out->push_back(pmonic(f, p));
    return;
  }
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, d);
  mpz_class e = (pd - 1) / 2;
  while (true) {
    PPoly r(n);
    for (int i = 0; i < n; ++i) r[i] = rng.next() % p;
    r = ptrim(std::move(r));
    if (r.empty()) continue;
    PPoly s = ppowmod(r, e, f, p);
    if (s.empty()) continue;
    s[0] = (s[0] + p - 1) % p;
    s = ptrim(std::move(s));
    PPoly g = pgcd(f, s, p);
    int dg = pdeg(g);
    if (dg > 0 && dg < n) {
      PPoly h;
      pdivrem(f, g, p, &h, nullptr);
      edf(g, d, p, rng, out);
      edf(h, d, p, rng, out);
      return;
    }
  }
}

// Full factorization of a squarefree monic f mod p (distinct-degree, then
// equal-degree). Deterministic output order.
std::vector<PPoly> factor_mod_p(PPoly f, uint64_t p) {
  std::vector<PPoly> out;
  PPoly x = {0, 1};
  PPoly w = x;
  int d = 0;
  while (pdeg(f) > 0 && 2 * (d + 1) <= pdeg(f)) {
    ++d;
    mpz_class pe(static_cast<unsigned long>(p));
    w = ppowmod(w, pe, f, p);
    PPoly g = pgcd(psub(w, x, p), f, p);
    if (pdeg(g) > 0) {
      SplitRng rng(p ^ (uint64_t)d * 0x9e3779b97f4a7c15ull);
      edf(g, d, p, rng, &out);
      pdivrem(f, g, p, &f, nullptr);
      w = pmod(w, f, p);
    }
  }
  if (pdeg(f) > 0) out.push_back(pmonic(f, p));
  std::sort(out.begin(), out.end());
  return out;
}

// --- Hensel lifting --------------------------------------------------------

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return zpoly_trim(std::move(r));
}

// One quadratic step: from f = g*h (mod m) and s*g + t*h = 1 (mod m) with
// g, h monic, to the same data mod m^2 (Modern Computer Algebra, 15.10).
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t,
                 const mpz_class& m) {
  mpz_class m2 = m * m;
  ZPoly e = zpoly_mod(zpoly_sub(f, zpoly_mul(g, h)), m2);
  ZPoly q, r;
  zpoly_divrem_monic(zpoly_mul(s, e), h, m2, &q, &r);
  ZPoly g1 = zpoly_mod(zpoly_add(g, zpoly_add(zpoly_mul(t, e), zpoly_mul(q, g))), m2);
  ZPoly h1 = zpoly_mod(zpoly_add(h, r), m2);
  ZPoly one = {mpz_class(1)};
  ZPoly b = zpoly_mod(
      zpoly_sub(zpoly_add(zpoly_mul(s, g1), zpoly_mul(t, h1)), one), m2);
  ZPoly c, d;
  zpoly_divrem_monic(zpoly_mul(s, b), h1, m2, &c, &d);
  ZPoly s1 = zpoly_mod(zpoly_sub(s, d), m2);
  ZPoly t1 = zpoly_mod(zpoly_sub(t, zpoly_add(zpoly_mul(t, b), zpoly_mul(c, g1))), m2);
  g = std::move(g1);
  h = std::move(h1);
  s = std::move(s1);
  t = std::move(t1);
}

ZPoly ppoly_to_zpoly(const PPoly& f) {
  ZPoly r(f.size());
  for (size_t i = 0; i < f.size(); ++i) r[i] = mpz_class(static_cast<unsigned long>(f[i]));
  return zpoly_trim(std::move(r));
}

void pextgcd(const PPoly& a, const PPoly& b, uint64_t p, PPoly* u, PPoly* v) {
  PPoly r0 = a, r1 = b;
  PPoly u0 = {1}, u1 = {};
  PPoly v0 = {}, v1 = {1};
  while (!r1.empty()) {
    PPoly q, r;
    pdivrem(r0, r1, p, &q, &r);
    PPoly u2 = psub(u0, pmul(q, u1, p), p);
    PPoly v2 = psub(v0, pmul(q, v1, p), p);
    r0 = std::move(r1); r1 = std::move(r);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (r0.empty() || pdeg(r0) != 0)
    throw std::logic_error("pextgcd: arguments not coprime mod p");
  uint64_t inv = invmod_u(r0[0], p);
  for (auto& c : u0) c = mulmod(c, inv, p);
  for (auto& c : v0) c = mulmod(c, inv, p);
  if (u) *u = std::move(u0);
  if (v) *v = std::move(v0);
}

// Lifts the factorization f = prod facs (mod p) to the modulus target
// (a power of p); f and all factors monic. Returns factors mod target.
void lift_tree(const ZPoly& f, const std::vector<PPoly>& facs, size_t lo, size_t hi,
               uint64_t p, const mpz_class& target, std::vector<ZPoly>* out) {
  if (hi - lo == 1) {
    out->push_back(zpoly_mod(f, target));
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  PPoly a0 = {1}, b0 = {1};
  for (size_t i = lo; i < mid; ++i) a0 = pmul(a0, facs[i], p);
  for (size_t i = mid; i < hi; ++i) b0 = pmul(b0, facs[i], p);
  PPoly s0, t0;
  pextgcd(a0, b0, p, &s0, &t0);
  ZPoly g = ppoly_to_zpoly(a0), h = ppoly_to_zpoly(b0);
  ZPoly s = ppoly_to_zpoly(s0), t = ppoly_to_zpoly(t0);
  mpz_class m(static_cast<unsigned long>(p));
  while (m < target) hensel_step(f, g, h, s, t, m), m = m * m;
  lift_tree(zpoly_mod(g, target), facs, lo, mid, p, target, out);
  lift_tree(zpoly_mod(h, target), facs, mid, hi, p, target, out);
}

// --- Zassenhaus driver ------------------------------------------------------

QPoly zpoly_to_qpoly_monic(const ZPoly& f) {
  QPoly r(f.size());
  mpq_class lc(f.back());
  for (size_t i = 0; i < f.size(); ++i) r[i] = mpq_class(f[i]) / lc;
  return r;
}

// Exact division test over Z for monic divisor.
bool zpoly_divides_monic(const ZPoly& f, const ZPoly& d, ZPoly* quot) {
  ZPoly rem = f, q;
  int dd = zdeg(d);
  if (dd < 0 || zdeg(f) < dd) return false;
  q.assign(f.size() - d.size() + 1, mpz_class(0));
  while (zdeg(rem) >= dd) {
    int k = zdeg(rem) - dd;
    mpz_class c = rem.back();  // d monic
    q[k] = c;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= c * d[i];
    rem = zpoly_trim(std::move(rem));
  }
  if (!rem.empty()) return false;
  if (quot) *quot = zpoly_trim(std::move(q));
  return true;
}

// Irreducible monic rational factors of a squarefree monic rational input.
std::vector<QPoly> factor_squarefree(const QPoly& g) {
  int n = qpoly_deg(g);
  if (n <= 1) return {g};

  // clear denominators to a primitive integer polynomial with positive lead
  mpz_class den(1);
  for (const auto& c : g) {
    mpz_class d = c.get_den();
    den = den / gcd(den, d) * d;
  }
  ZPoly G(n + 1);
  mpz_class content(0);
  for (int i = 0; i <= n; ++i) {
    mpq_class scaled = g[i] * mpq_class(den);
    G[i] = scaled.get_num();
    content = gcd(content, G[i]);
  }
  for (auto& c : G) c /= content;
  if (G.back() < 0)
    for (auto& c : G) c = -c;
  mpz_class L = G.back();

  // monicize: Gm(x) = L^{n-1} G(x/L), so Gm is integer and monic
  ZPoly Gm(n + 1);
  Gm[n] = 1;
  mpz_class pw(1);
  for (int i = n - 1; i >= 0; --i) {
    Gm[i] = G[i] * pw;
    pw *= L;
  }

  // choose an odd prime keeping Gm squarefree
  static const uint64_t kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                     37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                                     79, 83, 89, 97, 101, 103, 107, 109, 113, 127};
  uint64_t p = 0;
  PPoly fp;
  for (uint64_t cand : kPrimes) {
    PPoly red(Gm.size());
    for (size_t i = 0; i < Gm.size(); ++i) {
      mpz_class v = Gm[i] % static_cast<long>(cand);
      if (v < 0) v += static_cast<long>(cand);
      red[i] = v.get_ui();
    }
    red = ptrim(std::move(red));
    if (pdeg(red) != n) continue;  // cannot happen for monic, kept for clarity
    PPoly gc = pgcd(red, pderiv(red, cand), cand);
    if (pdeg(gc) == 0) {
      p = cand;
      fp = std::move(red);
      break;
    }
  }
  if (p == 0) throw std::logic_error("factor_qpoly: no good prime found");

  std::vector<PPoly> modular = factor_mod_p(fp, p);
  std::vector<QPoly> out;
  if (modular.size() == 1) {
    out.push_back(qpoly_monic(g));
    return out;
  }

  // coefficient bound for monic factors of Gm (Mignotte-style, generous)
  mpz_class norm1(0);
  for (const auto& c : Gm) norm1 += abs(c);
  mpz_class bound = (norm1 + 1) << (n + 1);
  mpz_class target(static_cast<unsigned long>(p));
  while (target <= 2 * bound) target = target * target;

  std::vector<ZPoly> lifted;
  lift_tree(zpoly_mod(Gm, target), modular, 0, modular.size(), p, target, &lifted);

  // subset recombination against Gm
  std::vector<ZPoly> zfactors;
  std::vector<int> active(lifted.size());
  for (size_t i = 0; i < lifted.size(); ++i) active[i] = static_cast<int>(i);
  ZPoly remaining = Gm;

  auto try_subsets = [&](auto&& self, std::vector<int>& chosen, size_t start,
                         size_t size) -> bool {
    if (chosen.size() == size) {
      ZPoly prod = {mpz_class(1)};
      for (int idx : chosen) prod = zpoly_mod(zpoly_mul(prod, lifted[idx]), target);
      prod = zpoly_mods(prod, target);
      ZPoly quot;
      if (zpoly_divides_monic(remaining, prod, &quot)) {
        zfactors.push_back(prod);
        remaining = std::move(quot);
        std::vector<int> keep;
        for (int idx : active)
          if (std::find(chosen.begin(), chosen.end(), idx) == chosen.end())
            keep.push_back(idx);
        active = std::move(keep);
        return true;
      }
      return false;
    }
    for (size_t i = start; i < active.size(); ++i) {
      chosen.push_back(active[i]);
      if (self(self, chosen, i + 1, size)) return true;
      chosen.pop_back();
    }
    return false;
  };

  size_t size = 1;
  while (2 * size <= active.size()) {
    std::vector<int> chosen;
    if (try_subsets(try_subsets, chosen, 0, size)) {
      size = 1;  // active set changed, restart small
      if (zdeg(remaining) == 0) break;
    } else {
      ++size;
    }
  }
  if (zdeg(remaining) > 0) zfactors.push_back(remaining);

  // undo the monicizing substitution x -> L x and return monic factors
  for (const auto& F : zfactors) {
    QPoly q(F.size());
    mpz_class lpw(1);
    for (size_t i = 0; i < F.size(); ++i) {
      q[i] = mpq_class(F[i] * lpw);
      lpw *= L;
    }
    out.push_back(qpoly_monic(qpoly_trim(std::move(q))));
  }
  return out;
}

}  // namespace

std::vector<QPoly> factor_qpoly(const QPoly& f) {
  QPoly work = qpoly_trim(f);
  if (work.empty()) throw std::invalid_argument("factor_qpoly: zero polynomial");
  work = qpoly_monic(work);
  std::vector<QPoly> out;
  while (qpoly_deg(work) > 0) {
    QPoly der = qpoly_derivative(work);
    QPoly sf;
    qpoly_divrem(work, qpoly_gcd(work, der), &sf, nullptr);
    for (const QPoly& q : factor_squarefree(sf)) {
      while (true) {
        QPoly quot, rem;
        qpoly_divrem(work, q, &quot, &rem);
        if (!rem.empty()) break;
        out.push_back(q);
        work = std::move(quot);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const QPoly& a, const QPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;) {
      int c = cmp(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  return out;
}

}  // namespace bulkcor
