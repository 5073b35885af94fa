#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bulkcor/diagram.hpp"
#include "bulkcor/frobenius.hpp"

namespace bulkcor {

// Everything in this header lives in or around the window space
//   H^vee (x) F (x) H
// for a Frobenius algebra F over the Hopf data behind F.object, with the
// regular module in both outer slots. Coordinates follow kron order (left
// factor varies slowest): ambient index of e^i (x) e_x (x) e_k is
// (i*fdim + x)*hdim + k.

// Solution space of the dinaturality constraints against every right
// multiplication of the regular module. Right multiplications exhaust the
// module endomorphisms of H_reg, so a window vector is the same thing as a
// right-linear map H -> F (x) H and is free on its value at the unit: basis
// column (x,k) -> x*hdim + k is sum_i e^i (x) e_x (x) (e_k e_i).
struct EndSubspace {
  FrobeniusObject frobenius;
  int hdim = 0;
  int fdim = 0;
  Subspace subspace;     // ambient (hdim*fdim*hdim), dim fdim*hdim
  Matrix eval_at_unit;   // exact left inverse of subspace.basis
  ModuleRep window;      // H-action of dual(H) (x) F (x) H in window coords
};

// Builds the window and verifies dinaturality plus stability of the
// H-action on every basis vector (violations throw: they cannot happen
// unless the construction itself is wrong).
EndSubspace end_object(const FrobeniusObject& f);

// The window vector whose value at the unit is the given element of
// F (x) H (length fdim*hdim).
Vec window_vector(const FrobeniusObject& f, const Vec& value_at_unit);

// Transport of an ambient vector to the five-leg space
// H^vee (x) F (x) F (x) F (x) H: the component of the window at F (x) H,
// rewritten through the untwist isomorphism u(x (x) h) = S(h_(1))x (x) h_(2)
// on both outer legs and with the dual algebra leg folded back to F along
// the self-duality of F. Feeding the result to the cf_component diagram is
// exactly one application of the cylinder map.
Vec cylinder_transport(const FrobeniusObject& f, const Vec& ambient);

// One application of the cylinder map, ambient coordinates in and out.
Vec cylinder_apply(const FrobeniusObject& f, const Vec& ambient);

// The cylinder map restricted to the window, in window coordinates. Throws
// when the map fails to preserve the window.
Matrix cylinder_idempotent(const EndSubspace& e);
Matrix cylinder_idempotent(const FrobeniusObject& f);

// Image of the cylinder map together with the bulk self-duality. Requires
// special F; otherwise the cylinder map is only idempotent up to the scalar
// mu.delta and this throws.
struct BulkObject {
  EndSubspace end;
  Matrix cylinder;       // C_F in window coordinates
  Subspace image;        // inside window coordinates
  Matrix j;              // image -> window, columns = image.basis
  Matrix p;              // window -> image, p j = id, j p = C_F
  ModuleRep module;      // H-action on the image
  Matrix window_form;    // invariant pairing on window coordinates
  Matrix self_duality;   // psi = j^T window_form j, invertible
};

BulkObject bulk_object(const FrobeniusObject& f);

// Subspace of the window (window coordinates) cut out by the free-module
// relation quantified over a basis of module maps H -> F (x) H. Equals the
// image of the cylinder map for special F, and the whole window for F = I.
Subspace free_module_internal_end(const FrobeniusObject& f);

// Multiplication on the image: evaluate the inner H / H^vee legs against
// each other (pivot inserted) and multiply in F. The returned map is
// image (x) image -> image in image coordinates; unit_out, when non-null,
// receives the image coordinates of the dinatural unit vector. Verifies
// stability, unitality and associativity.
Matrix bulk_multiplication(const BulkObject& b, Vec* unit_out = nullptr);

// zeta(h1 (x) h2) as the matrix Z[i][j] = zeta(e_i (x) e_j) on two copies
// of the adjoint representation:
//   zeta = sum_s <v_(1), (h1 b_s).v_(3)> <v_(2), (omega a_s omega^-1 h2).v_(4)>
// over R = sum_s a_s (x) b_s, v_(1..4) = canonical_vn(f,4), <,> the pairing.
Matrix elliptic_class_function(const FrobeniusObject& f);

// The same form computed by evaluating the elliptic_invariant diagram and
// pairing both output F^vee/F leg pairs against the matrix coefficients of
// the two arguments.
Matrix elliptic_class_function_oracle(const FrobeniusObject& f);

// Genus-zero class function on (r-1) copies of the adjoint representation,
// from v_{2(r-1)} with consecutive leg pairs folded along the self-duality:
//   zeta_r(h_1,...,h_{r-1}) = sum prod_j <v_(2j-1), h_j.v_(2j)>.
// Returned flat in kron order, length hdim^(r-1); r ranges over 2..5.
Vec genus_zero_class_function(const FrobeniusObject& f, int r);

// True when the flat multilinear form on `legs` copies of the adjoint
// representation is H-invariant: form(b_(1) |> x_1, ..., b_(legs) |> x_legs)
// = eps(b) form(x_1,...,x_legs) for every basis b.
bool adjoint_invariant_form(const HopfData& h, const Vec& form, int legs);

// V = hom(I, H^vee with the coadjoint action), as functionals on H.
Subspace torus_block_space(const HopfData& h);

// Class of an endomorphism f of a projective module q: the functional
// [f](b) = trace(rho_q(omega) f rho_q(b)), as a vector of V.
Vec proj_class(const ModuleRep& q, const Matrix& f);

// Projective classes: the span of proj_class over endomorphism bases of all
// projective indecomposables, with one representative endomorphism kept per
// span basis vector. The classes are spanning but not a basis in general.
struct ProjectiveClasses {
  std::vector<Pim> pims;
  Subspace span;                              // inside H^vee coordinates
  std::vector<std::pair<int, Matrix>> reps;   // (pim index, endomorphism)
};
ProjectiveClasses projective_classes(const HopfData& h);

// The torus action z_f on F (x) q, evaluated from the zf diagram with the
// endomorphism f of q bound as the named map. Throws unless f intertwines.
Matrix z_f_endomorphism(const FrobeniusObject& fr, const ModuleRep& q,
                        const Matrix& f);

// Postcomposition by the sphere closure diagram on hom(I, P (x) F (x) Q),
// in the coordinates of the hom basis returned by hom_basis. Verified
// idempotent. hom_dim_out, when non-null, receives dim hom(I, P (x) F (x) Q).
Matrix phi_idempotent(const FrobeniusObject& fr, const ModuleRep& p,
                      const ModuleRep& q, int* hom_dim_out = nullptr);

// Z_{P,Q} = trace of phi_idempotent, coerced to a non-negative integer.
// Throws if the trace is not a non-negative rational integer or exceeds
// dim hom(P^vee, F (x) Q).
long partition_coefficient(const FrobeniusObject& fr, const ModuleRep& p,
                           const ModuleRep& q);

// Torus transformation operators on V = torus_block_space. T is
// precomposition with multiplication by the ribbon element. S is a
// cointegral contraction of the Drinfeld map of the class function; the
// exact formula is a convention parameter fixed by requiring both operators
// to preserve V, S to be invertible, and the projective relations
// (S T)^3 = lambda1 S^2 and S^4 = lambda2 id to hold. Throws when no
// candidate convention passes.
struct StOperators {
  Subspace v;            // the block space the matrices act on
  Matrix s, t;           // in the coordinates of v.basis columns
  Scalar lambda1;        // (S T)^3 = lambda1 S^2
  Scalar lambda2;        // S^4 = lambda2 id
  std::string convention;
};
StOperators st_operators(const HopfData& h);

// T alone; needs only a central ribbon slot, not the full ribbon axioms.
Matrix t_operator(const HopfData& h, const Subspace& v);

// Right and left cointegrals on H (1-dimensional solution spaces of
// (lambda (x) id) Delta = lambda(.) 1 resp. (id (x) lambda) Delta).
Vec right_cointegral(const HopfData& h);
Vec left_cointegral(const HopfData& h);

// Commutator checks of the torus action against the transformation
// operators on the projective-class span; the S-commutator runs on all of V
// and is only checkable when the classes span V (semisimple case).
Report modular_invariance_check(const FrobeniusObject& f);

// Degree-zero Hochschild comparison: dim hom(I, bulk(F)) against the
// dimension of the center of End_{F-mod}(F (x) H_reg); the latter algebra
// is presented on F (x) H by the free-module correspondence. A mismatch is
// reported, not thrown.
Report hh0_check(const FrobeniusObject& f);

}  // namespace bulkcor
