#pragma once

// The tangent-obstruction complex of a WD point: on the inertial invariants
// V = g^{I} the two-step complex
//   d0: V -> V + V,   j |-> ((1 - Ad(Phi)) j, ad_N j)
//   d1: V + V -> V,   (f, g) |-> ad_N f + (p^{-fK} Ad(Phi) - 1) g
// with d1 d0 = 0, its cohomology dimensions, the twisted dual H^0, the
// duality pairing, and the smooth / very-smooth predicates.

#include "wdtangent/wdrep.hpp"

namespace wdt {

struct WDComplex {
  Subspace V;  // inertial invariants inside g
  Mat d0;      // (2v) x v, stacked [1 - A; B] on a basis of V
  Mat d1;      // v x (2v), [B | p^{-fK} A - 1]
};

struct CohomologyReport {
  long h0 = 0, h1 = 0, h2 = 0;
  long dual_h0 = 0;
  bool smooth = false;
  long tangent_dim_framed = 0;
};

// Assemble the complex on a basis of invariants_subspace(x); throws
// logic_error if d1 d0 != 0.
WDComplex complex_of(const WDPoint& x);

// h0 = dim ker d0, h1 = dim ker d1 - dim im d0, h2 = dim V - dim im d1;
// dual_h0 computed independently (dual_h0_twisted); smooth <=> h2 = 0;
// tangent_dim_framed = dim G + h2.
CohomologyReport cohomology_dims(const WDPoint& x);

// dim{ phi in V* : phi ad_N = 0 and phi Ad(Phi) = p^{fK} phi }.
long dual_h0_twisted(const WDPoint& x);

// Evaluation pairing between a basis of H^0((ad D)*(1)) and the echelon
// complement representatives of im d1 in V; square, invertible (0x0 at
// smooth points).
Mat pairing_matrix(const WDPoint& x);

bool is_smooth(const WDPoint& x);

// h2 over the uniform extension M = n0 * d * |I| vanishes; cross-checked
// against the root-of-unity eigenvalue test on ker(ad_N^T) (the two must
// agree or a logic_error is thrown).
bool is_very_smooth(const WDPoint& x);

// N = 0 only: (h0, h1) of the two-term complex 1 - Ad(Phi) on V.
std::pair<long, long> cohomology_N0(const WDPoint& x);

}  // namespace wdt
