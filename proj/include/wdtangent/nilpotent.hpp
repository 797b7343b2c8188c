#pragma once

// Jacobson-Morozov sl2-triples and associated cocharacters, optionally
// constructed inside a bracket-closed subspace (Lie Z_G(tau)), plus the
// weight-2 surjectivity check g_2(lambda) <= im(ad_N).

#include <optional>

#include "wdtangent/groups.hpp"

namespace wdt {

struct SL2Triple {
  Vec N, H, Y;  // [H,N] = 2N, [H,Y] = -2Y, [N,Y] = H; the zero triple iff N = 0
  bool is_zero() const;
};

struct Cocharacter {
  Vec H;                       // derivative dlambda(1) in g-coordinates
  std::vector<long> weights;   // integer eigenvalues of ad_H (sorted, with multiplicity)
  Mat diagonalizer;            // columns: realization eigenbasis of H
};

// Solve [H,N] = 2N with H in image(ad_N), then [N,Y] = H, [H,Y] = -2Y; all
// inside restrict_to when given.  Deterministic: linear systems are solved
// with free variables set to zero (lexicographically smallest echelon
// solution).  Returns the zero triple iff N = 0.
SL2Triple jacobson_morozov(const GroupModel& G, const Vec& N,
                           const std::optional<Subspace>& restrict_to = std::nullopt);

// Cocharacter with H from jacobson_morozov; checks ad_H(N) = 2N and the
// integrality of all ad_H weights.
Cocharacter associated_cocharacter(const GroupModel& G, const Vec& N,
                                   const std::optional<Subspace>& restrict_to = std::nullopt);

// g_2(lambda) <= im(ad_N)?
bool weight2_in_image(const GroupModel& G, const Vec& N, const Cocharacter& lambda);

// lambda(s): evaluation of the cocharacter at a Scalar, P diag(s^k) P^-1.
GroupElement cocharacter_at(const GroupModel& G, const Cocharacter& lambda, const Scalar& s);

// Nilpotent Jordan-type vectors: N = sum of e_{i,i+1} within Jordan blocks
// given by the partition (GL(n) single-block models).
Vec jordan_nilpotent(const GroupModel& G, const std::vector<long>& partition);

// All partitions of n in lexicographically decreasing order.
std::vector<std::vector<long>> partitions_of(long n);

}  // namespace wdt
