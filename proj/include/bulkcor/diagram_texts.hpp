#pragma once

namespace bulkcor {
namespace diagrams {

// Canonical diagram sources used by the correlator operations. The fixture
// writer copies these verbatim into fixtures/*.sd, so the shipped files and
// the embedded strings always evaluate to the same maps.
extern const char* const kCfComponent;       // cf_component.sd
extern const char* const kB1;                // b1.sd
extern const char* const kB2;                // b2.sd
extern const char* const kZf;                // zf.sd
extern const char* const kSphereClosure;     // sphere_closure.sd
extern const char* const kEllipticInvariant; // elliptic_invariant.sd

struct NamedText {
  const char* name;  // file name under fixtures/
  const char* text;
};
extern const NamedText kAll[6];

}  // namespace diagrams
}  // namespace bulkcor
