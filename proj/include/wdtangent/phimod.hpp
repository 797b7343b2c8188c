#pragma once

// The l = p bridge: semilinear (phi, N, Gal_{L/K})-modules in explicit
// matrix form over fL labeled copies of the scalar field (Frobenius acts by
// cyclic index shift), the collapse equivalence, the functor to WD points and
// its inverse, Hodge types and the filtered complex in the split case, plus
// the local/global dimension ledgers.

#include "wdtangent/cohomology.hpp"

namespace wdt {

// One Galois element of Gal_{L/K}, modeled as the split extension
// I x| Z/d with (i1,k1)(i2,k2) = (i1 * theta^{k1}(i2), k1 + k2 mod d).
// Its semilinear action shifts embedding indices by shift = k*fK mod fL and
// has one coordinate matrix per embedding: comps[e] : D_{e+shift} -> D_e.
struct GaloisElt {
  long i = 0;      // inertia index
  long k = 0;      // Frobenius exponent mod d
  long shift = 0;  // k*fK mod fL
  std::vector<GroupElement> comps;
};

struct PhiModule {
  GroupModel G;
  long p = 2;
  long fL = 1;
  long fK = 1;  // fL = d * fK
  std::vector<GroupElement> Phis;  // Phi_e : D_{e+1} -> D_e
  std::vector<Vec> Ns;             // N_e, with N_e = p * Ad(Phi_e)(N_{e+1})
  // inertia shape of I = I_{L/K} (tau values unused; structure only)
  std::vector<std::vector<long>> itable;
  long iidentity = 0;
  std::vector<long> theta;
  long d = 1;
  std::vector<GaloisElt> galois;  // all |I| * d elements

  long q_index(long i, long k) const;  // locate (i, k) in galois
  void validate() const;               // throws with a reason
};

// Phi^{fL} restricted to the sigma-th embedding (the cyclic product
// Phi_sigma Phi_{sigma+1} ... ), together with N_sigma.
std::pair<GroupElement, Vec> collapse(const PhiModule& M, long sigma);

// r(g) := tau(g-bar) o Phi^{-v(g) fK} evaluated at embedding 0; the result
// is a valid WD point with Phi_WD = r(Frobenius) and N = N_0.
WDPoint fontaine_to_wd(const PhiModule& M);

// Inverse: normal form Phis = (Phi_WD^{-d}, 1, ..., 1), N_e transported by
// N_e = p * Ad(Phi_e)(N_{e+1}); requires fL = inertia.d * fK and
// theta^d = id.  fontaine_to_wd o wd_to_phi_module is the identity.
PhiModule wd_to_phi_module(const WDPoint& x, long fL);

struct HodgeType {
  std::vector<Cocharacter> cochars;  // one per embedding K -> E
};

// Sum over embeddings of dim g_{<0}(lambda_i).
long hodge_dim(const GroupModel& G, const HodgeType& v);
// Every g_0(lambda_i) is the torus: dim g_0 = rank(G).
bool is_regular(const GroupModel& G, const HodgeType& v);

// Filtered complex in the split case (trivial inertia, d = 1, fK = 1):
// degree 0: V; degree 1: V + V + V/g_{>=0}(lambda_fil); degree 2: V.
struct FilteredReport {
  long hFil0 = 0, hFil1 = 0, hFil2 = 0;
};
FilteredReport filtered_cohomology(const WDPoint& x, const Cocharacter& lambda_fil);

// 1 + (derived dim if fixed_det else group dim) + hodge_dim when l = p.
long local_dim(const GroupModel& G, const std::optional<HodgeType>& hodge,
               bool fixed_det, bool l_equals_p);

struct GlobalLedgerInput {
  long Sinf_size = 1;                 // |S^infinity| (finite places in S)
  std::vector<long> arch_h0s;         // dim H^0(Gal_{F_v}, g^0) per v | infinity
  long g0_dim = 0;                    // dim g^0
  std::vector<long> place_degrees;    // [F_v : Q_p] per place v | p
  std::vector<long> gb_dims;          // dim G/B per place v | p
  long oddness_target = 0;            // dim G - dim B
};

struct GlobalLedger {
  long s = 0;                  // (|Sigma|-1) g0_dim + sum of arch h0s
  long r_min = 0;              // r >= dim g^0 in the presentation
  long krull_lower_bound = 0;  // 1 + sum deg * dim G/B - sum arch h0s
  bool odd = false;            // every arch h0 equals the target
};

GlobalLedger global_ledger(const GlobalLedgerInput& in);

}  // namespace wdt
