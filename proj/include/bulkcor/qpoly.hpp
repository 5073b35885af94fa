#pragma once

#include <gmpxx.h>

#include <vector>

namespace bulkcor {

// Polynomials over Q: coefficients ascending, no trailing zeros, zero = {}.
using QPoly = std::vector<mpq_class>;

int qpoly_deg(const QPoly& f);  // -1 for the zero polynomial
QPoly qpoly_trim(QPoly f);
QPoly qpoly_add(const QPoly& a, const QPoly& b);
QPoly qpoly_sub(const QPoly& a, const QPoly& b);
QPoly qpoly_mul(const QPoly& a, const QPoly& b);
void qpoly_divrem(const QPoly& a, const QPoly& b, QPoly* q, QPoly* r);
QPoly qpoly_monic(const QPoly& f);
QPoly qpoly_gcd(QPoly a, QPoly b);  // monic generator
// Returns monic g = gcd(a, b) and u, v with u*a + v*b = g.
QPoly qpoly_extgcd(const QPoly& a, const QPoly& b, QPoly* u, QPoly* v);
QPoly qpoly_derivative(const QPoly& f);
bool qpoly_eq(const QPoly& a, const QPoly& b);

// Monic irreducible factors with multiplicity, deterministically ordered.
// Zassenhaus: squarefree split, factor mod a good prime, Hensel lift,
// subset recombination. Input must be non-zero; constants factor to {}.
std::vector<QPoly> factor_qpoly(const QPoly& f);

}  // namespace bulkcor
