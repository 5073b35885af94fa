#pragma once

#include "bulkcor/rep.hpp"

namespace bulkcor {

// A Frobenius algebra structure on a module F: multiplication with unit and
// comultiplication with counit, all intertwiners for the declared action.
struct FrobeniusObject {
  ModuleRep object;
  Matrix mult;    // F (x) F -> F
  Matrix unit;    // I -> F, one column
  Matrix comult;  // F -> F (x) F
  Matrix counit;  // F -> I, one row

  ModuleMap mult_map() const;
  ModuleMap unit_map() const;
  ModuleMap comult_map() const;
  ModuleMap counit_map() const;
};

// pairing counit.mult, copairing comult.unit, and the induced self-duality
// map F -> F^dual; the pairing is non-degenerate iff psi is invertible
Matrix frobenius_pairing(const FrobeniusObject& f);
Matrix frobenius_copairing(const FrobeniusObject& f);
Matrix frobenius_psi(const FrobeniusObject& f);

// algebra and coalgebra axioms, Frobenius compatibility, invariance of the
// pairing, non-degeneracy, and the pivotal symmetry of psi
Report verify_frobenius(const FrobeniusObject& f);

// special: counit.unit is nonzero and mult.comult is the identity; when
// mult.comult is a different scalar the scalar is reported, so callers can
// rescale (see normalize_special)
Report verify_special(const FrobeniusObject& f);
bool is_special(const FrobeniusObject& f);

// h = mult . comult . unit; equals the unit exactly when F is special
ModuleMap handle_element(const FrobeniusObject& f, bool* equals_unit = nullptr);

// canonical maps I -> F^{(x) n}: identity, unit, copairing, then one extra
// comultiplication on the first slot per additional tensor factor. The vector
// form skips building the tensor power module, whose action matrices grow as
// dim^{2n}; prefer it for large n.
Vec canonical_vn_vector(const FrobeniusObject& f, int n);
ModuleMap canonical_vn(const FrobeniusObject& f, int n);

FrobeniusObject trivial_frobenius(const HopfData& h);

// X (x) X^dual with the evaluation product and coevaluation unit; the
// comultiplication and counit come from the right duality and are rescaled
// (unless normalize is false) so that the special conditions hold.
// Throws when the quantum dimension of x vanishes.
FrobeniusObject internal_end_frobenius(const ModuleRep& x, bool normalize = true);

// rescale comult and counit so mult.comult becomes the identity; throws
// unless mult.comult is a nonzero scalar
FrobeniusObject normalize_special(const FrobeniusObject& f);

}  // namespace bulkcor
