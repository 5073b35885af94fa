#pragma once

#include <string>
#include <vector>

#include "bulkcor/hopf.hpp"
#include "bulkcor/linalg.hpp"
#include "bulkcor/report.hpp"

namespace bulkcor {

// Left module over a HopfData instance. The Hopf data is referenced, not
// owned; it must outlive the module.
struct ModuleRep {
  const HopfData* hopf = nullptr;
  int dim = 0;
  std::vector<Matrix> action;  // action[i] = rho(e_i)

  // rho extended linearly to an arbitrary element.
  Matrix act(const Vec& a) const;
};

struct ModuleMap {
  ModuleRep source;
  ModuleRep target;
  Matrix matrix;
};

// rho(1) = id and multiplicativity rho(g e_j) = rho(g) rho(e_j) for every
// algebra generator g; that suffices since the generators generate.
Report verify_module(const ModuleRep& m);
bool is_intertwiner(const ModuleRep& source, const ModuleRep& target, const Matrix& f);

ModuleRep trivial_module(const HopfData& h);
ModuleRep regular_module(const HopfData& h);

// All intertwiners source -> target, as a basis of matrices.
std::vector<Matrix> hom_basis(const ModuleRep& m, const ModuleRep& n);
int hom_dim(const ModuleRep& m, const ModuleRep& n);

// Tensor product along the comultiplication; basis order matches kron
// (left factor index varies slowest).
ModuleRep tensor(const ModuleRep& m, const ModuleRep& n);

// Dual module rho(b) = rho_m(S(b))^T together with the four (co)evaluation
// maps. The left pair is the canonical one; the right pair inserts the pivot.
struct DualityData {
  ModuleRep dual;       // m^vee
  Matrix ev;            // m^vee (x) m -> I,  phi (x) x -> phi(x)
  Matrix coev;          // I -> m (x) m^vee,  1 -> sum e_i (x) e_i^*
  Matrix ev_right;      // m (x) m^vee -> I,  x (x) phi -> phi(rho(omega) x)
  Matrix coev_right;    // I -> m^vee (x) m,  1 -> sum e_i^* (x) rho(omega^-1) e_i
};
DualityData dual(const ModuleRep& m);

// Quantum dimension ev_right . coev = tr rho(omega).
Scalar qdim(const ModuleRep& m);

// Braiding c_{m,n} = flip . sum rho_m(a_s) (x) rho_n(b_s) and its inverse
// from R^{-1} = (S (x) id)(R).
ModuleMap braiding(const ModuleRep& m, const ModuleRep& n);
ModuleMap braiding_inverse(const ModuleRep& m, const ModuleRep& n);

// Twist theta_m = rho_m(v) for the ribbon slot v.
ModuleMap twist(const ModuleRep& m);
ModuleMap twist_inverse(const ModuleRep& m);

// Adjoint action b |> x = b_(1) x S(b_(2)) on H; coadjoint is its dual.
ModuleRep adjoint_module(const HopfData& h);
ModuleRep coadjoint_module(const HopfData& h);

// Semisimple quotient data. The radical is the radical of the trace form of
// the left regular representation (characteristic zero). Simples carry the
// H-action through the quotient map. block_of[s] names the Wedderburn block
// a simple belongs to.
struct Wedderburn {
  Subspace radical;
  std::vector<ModuleRep> simples;
  std::vector<int> block_of;
  // representatives in H of the central idempotents of H/J, one per block;
  // they act as the block projectors on any module killed by the radical
  std::vector<Vec> block_idempotents;
};
Wedderburn wedderburn(const HopfData& h);

// Projective indecomposables P = H.e for lifted primitive idempotents e,
// one entry per isomorphism class; multiplicity counts the copies inside
// the regular module (it equals the dimension of the top).
struct Pim {
  ModuleRep module;
  Vec idempotent;
  int top_index = -1;    // index into wedderburn().simples
  int multiplicity = 0;
};
std::vector<Pim> pims(const HopfData& h);

// C[i][j] = dim hom(P_i, P_j) over the unique PIMs, exact integers.
std::vector<std::vector<long>> cartan_matrix(const HopfData& h);

// Multiset of composition factors, as counts per simple (socle filtration).
std::vector<int> composition_factors(const ModuleRep& m, const Wedderburn& w);

// Restriction of the H-action to an invariant subspace given by basis
// columns; throws if the subspace is not invariant.
ModuleRep submodule(const ModuleRep& m, const Matrix& basis);

}  // namespace bulkcor
