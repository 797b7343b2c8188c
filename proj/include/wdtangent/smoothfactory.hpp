#pragma once

// Constructors for certified (very) smooth WD points: the standard SL2 point,
// the associated-cocharacter point Phi = lambda(s) over any centralizer, its
// finite-order twists, and pushforward along group morphisms.

#include "wdtangent/cohomology.hpp"

namespace wdt {

struct SmoothPointCertificate {
  WDPoint point;
  Cocharacter lambda;
  GroupElement c;  // finite-order twist (identity when untwisted)
  CohomologyReport report;
  std::string field;  // "Q" or "Q(sqrt(p))"
};

// Phi = diag(s, 1/s) with s^2 = p^fK, N = e12, trivial inertia, on SL(2).
WDPoint standard_sl2_point(long p, long fK);

// Phi = lambda(s) with lambda associated to N inside Lie Z_G(tau); the
// certificate carries a report with h2 = 0 and a passing very-smooth check
// (a failure of either is an internal inconsistency and throws).
SmoothPointCertificate smooth_point(const GroupModel& G, const InertialData& inertia,
                                    const Vec& N, long p, long fK);

// Phi' = Phi * c for a finite-order c with Ad(c) fixing dlambda(1) and N and
// c normalizing the image of tau.  Revalidates and re-reports; smoothness
// must survive.
SmoothPointCertificate twist_by(const SmoothPointCertificate& cert, const GroupElement& c);

// (elt_map(Phi), lie_map(N), elt_map of tau) in the target group; the
// morphism's Ad-intertwining is asserted at runtime on the points used.
WDPoint pushforward(const Morphism& f, const WDPoint& x);

}  // namespace wdt
