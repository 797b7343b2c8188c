#pragma once

// The moduli data of G-valued Weil-Deligne representations: a finite
// inertial group I_{L/K} acting through tau, a Frobenius value Phi and a
// nilpotent N, subject to
//   (1) Ad(Phi)(N) = p^{fK} * N
//   (2) Phi tau(g) Phi^-1 = tau(theta(g))
//   (3) Ad(tau(g))(N) = N
//   (4) N nilpotent.

#include <cstdint>
#include <string>

#include "wdtangent/nilpotent.hpp"

namespace wdt {

struct InertialData {
  // explicit multiplication table: table[i][j] = index of g_i * g_j
  std::vector<std::vector<long>> table;
  long identity = 0;
  std::vector<GroupElement> tau;  // one value per element
  std::vector<long> theta;        // permutation: conjugation by Frobenius
  long d = 1;                     // f_L / f_K

  long order() const { return static_cast<long>(table.size()); }
  static InertialData trivial(const GroupModel& G);
  // cyclic group of the given order generated by tau(gen) = g, theta = id
  static InertialData cyclic(const GroupModel& G, long n, const GroupElement& g, long d = 1);

  void validate(const GroupModel& G) const;  // throws with a reason
};

struct WDPoint {
  GroupModel G;
  long p = 2;
  long fK = 1;
  GroupElement Phi;
  Vec N;
  InertialData inertia;

  Scalar q() const { return Scalar(Rational(p)).pow(fK); }
};

// Report-style validation: empty result means every constraint holds.
std::vector<std::string> validate(const WDPoint& x);
void require_valid(const WDPoint& x);  // throws listing the violations

// (ad D)^{I_{L/K}}: intersection of ker(Ad(tau(g)) - 1) over the group.
Subspace invariants_subspace(const WDPoint& x);

// Restriction to the unramified extension of degree m: Phi^m, fK*m, theta^m.
WDPoint restrict_unramified(const WDPoint& x, long m);

// The canonical uniform extension: M = cyclotomic_bound(dim G) * d * |I|.
struct TrivializedDatum {
  long M;
  GroupElement PhiM;
  long fK;  // = M * x.fK
};
TrivializedDatum trivialize_inertia(const WDPoint& x);

// Sample valid points in the fiber over (tau, N): base point Phi0 = lambda(s)
// with lambda associated inside Lie Z_G(tau), multiplied by seeded
// pseudo-random invertible elements of the commutant of {tau(g)} and N.
std::vector<WDPoint> sample_fiber(const GroupModel& G, const InertialData& inertia,
                                  const Vec& N, long p, long fK, long count,
                                  std::uint64_t seed);

}  // namespace wdt
