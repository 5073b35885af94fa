#include "bulkcor/diagram_texts.hpp"

namespace bulkcor {
namespace diagrams {

// Wire names expected by the correlator bindings: H is the regular module,
// F the Frobenius algebra, Q (and P) the projective modules of the torus
// operators, psi the self-duality F -> F*.

const char* const kCfComponent =
    "# multiplication part of the cylinder map: the three algebra strands of\n"
    "# the transported window merge through the four-valent vertex, written\n"
    "# as two binary products; the outer legs pass through untouched\n"
    "in: H* F F F H\n"
    "id[H*] | frob_mult[F] | id[F] | id[H]\n"
    "id[H*] | frob_mult[F] | id[H]\n";

const char* const kB1 =
    "# dinaturality of the window: absorbing a module endomorphism f of the\n"
    "# regular module on the right leg agrees with absorbing its transpose\n"
    "# fdual on the dual leg; bind f as H -> H and fdual as H* -> H*\n"
    "in: H* F H\n"
    "id[H*] | id[F] | named_map[f]\n"
    "==\n"
    "in: H* F H\n"
    "named_map[fdual] | id[F] | id[H]\n";

const char* const kB2 =
    "# fixed points of the cylinder map: merging the three algebra strands of\n"
    "# the five-leg transported window (first section) must reproduce the\n"
    "# untransported window (second section, the identity)\n"
    "in: H* F F F H\n"
    "id[H*] | frob_mult[F] | id[F] | id[H]\n"
    "id[H*] | frob_mult[F] | id[H]\n"
    "==\n"
    "in: H* F H\n";

const char* const kZf =
    "# torus action on F (x) Q: apply f to the Q strand, split the algebra\n"
    "# strand in three, take the rightmost strand once around the Q strand\n"
    "# (positive monodromy), then merge through the four-valent vertex\n"
    "in: F Q\n"
    "id[F] | named_map[f]\n"
    "frob_comult[F] | id[Q]\n"
    "frob_comult[F] | id[F] | id[Q]\n"
    "id[F] | id[F] | braid[F,Q]\n"
    "id[F] | id[F] | braid[Q,F]\n"
    "frob_mult[F] | id[F] | id[Q]\n"
    "frob_mult[F] | id[Q]\n";

const char* const kSphereClosure =
    "# the torus action with f = id closed off on a sphere: a spectator\n"
    "# strand P sits on the left while the algebra loop encircles Q; the\n"
    "# result is postcomposed on hom(I, P (x) F (x) Q)\n"
    "in: P F Q\n"
    "id[P] | frob_comult[F] | id[Q]\n"
    "id[P] | frob_comult[F] | id[F] | id[Q]\n"
    "id[P] | id[F] | id[F] | braid[F,Q]\n"
    "id[P] | id[F] | id[F] | braid[Q,F]\n"
    "id[P] | frob_mult[F] | id[F] | id[Q]\n"
    "id[P] | frob_mult[F] | id[Q]\n";

const char* const kEllipticInvariant =
    "# invariant vector of the one-holed torus: grow four algebra strands\n"
    "# from the unit, cross the middle pair under each other, then fold\n"
    "# strands one and three into functionals along the self-duality psi\n"
    "frob_unit[F]\n"
    "frob_comult[F]\n"
    "frob_comult[F] | id[F]\n"
    "frob_comult[F] | id[F] | id[F]\n"
    "id[F] | braid_inv[F,F] | id[F]\n"
    "named_map[psi] | id[F] | named_map[psi] | id[F]\n";

const NamedText kAll[6] = {
    {"cf_component.sd", kCfComponent},
    {"b1.sd", kB1},
    {"b2.sd", kB2},
    {"zf.sd", kZf},
    {"sphere_closure.sd", kSphereClosure},
    {"elliptic_invariant.sd", kEllipticInvariant},
};

}  // namespace diagrams
}  // namespace bulkcor
