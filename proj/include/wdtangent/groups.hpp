#pragma once

// Matrix realizations of the reductive groups the toolkit exercises.
//
// Two shapes of group live behind one interface:
//  * Matrix kind: block-diagonal realizations covering GL(n), SL(n), GL(1)
//    and finite products.  Elements are invertible std_dim x std_dim
//    matrices respecting the block structure (SL blocks have det 1).
//  * CalG kind: the disconnected group calG(n) = (GL_n x GL_1) x| {1, jay}
//    with jay*(g,a)*jay^-1 = (a*(g^t)^-1, a).  Elements are stored
//    structurally as (g, a, eps) -- g an n x n matrix, a a scalar, eps the
//    component flag -- and the adjoint action of the jay-component comes
//    from the closed-form derivative Ad(jay)(X, y) = (y*1 - X^t, y).
//
// Lie algebra coordinates are fixed by lie_basis.  Per matrix block the
// order is: off-diagonal elementary matrices e_ij (i != j, row-major), then
// the torus differences h_i = e_ii - e_{i+1,i+1}, then (GL blocks only) the
// block identity.  For calG(n): all of gl_n (entries row-major), then the
// gl_1 coordinate y.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wdtangent/linalg.hpp"

namespace wdt {

enum class GroupKind { Matrix, CalG };

struct GroupElement {
  Mat mat;            // Matrix kind: std_dim realization; CalG: the g-part
  Scalar a{1};        // CalG only: the GL_1 part
  int component = 0;  // CalG only: 0 = identity component, 1 = jay

  bool operator==(const GroupElement& o) const {
    return mat == o.mat && a == o.a && component == o.component;
  }
};

struct BlockSpec {
  long n;
  bool det_one;  // SL block when true
};

class GroupModel {
 public:
  static GroupModel GL(long n);
  static GroupModel SL(long n);
  static GroupModel GL1() { return GL(1); }
  static GroupModel product(const std::vector<GroupModel>& factors);
  static GroupModel calG(long n);

  const std::string& name() const { return name_; }
  GroupKind kind() const { return kind_; }
  long n_param() const { return n_param_; }          // catalog n (calG / single block)
  long std_dim() const { return std_dim_; }          // realization size (calG: n+1)
  long group_dim() const { return group_dim_; }
  long rank() const { return rank_; }
  const std::vector<long>& derived_idx() const { return derived_idx_; }
  const std::vector<BlockSpec>& blocks() const { return blocks_; }
  const std::vector<GroupElement>& component_reps() const { return component_reps_; }
  const std::vector<Mat>& lie_basis() const { return lie_basis_; }

  // --- group operations -----------------------------------------------
  GroupElement identity_element() const;
  GroupElement mul(const GroupElement& x, const GroupElement& y) const;
  GroupElement inv(const GroupElement& x) const;
  GroupElement pow(const GroupElement& x, long e) const;
  bool is_member(const GroupElement& x) const;
  void check_membership(const GroupElement& x) const;  // throws with a reason

  // Element constructor from a realization matrix (Matrix kind) or the
  // structural triple (CalG kind).
  GroupElement element(const Mat& m) const;
  GroupElement element_calG(const Mat& g, const Scalar& a, int component) const;

  // --- Lie algebra ------------------------------------------------------
  // Realization of a coordinate vector (CalG: (n+1) x (n+1) block diagonal
  // diag(X, y), used for nilpotency and weight extraction only).
  Mat lie_realization(const Vec& v) const;
  // Inverse of lie_realization on the realization of the Lie algebra;
  // throws when the matrix is not in span(lie_basis).
  Vec lie_coords(const Mat& m) const;

  Vec bracket(const Vec& u, const Vec& v) const;
  Mat ad(const GroupElement& g) const;  // group_dim x group_dim, Ad(g)
  Mat ad_n(const Vec& N) const;         // bracket-with-N operator
  bool lie_nilpotent(const Vec& N) const;

  // Intersection of ker(Ad(g) - 1) over the listed elements (all of g when
  // the list is empty): Lie Z_G(S) for the generated subgroup S.
  Subspace fixed_lie(const std::vector<GroupElement>& elements) const;

  // Weight decomposition of ad_H with integer eigenvalues; errors when the
  // eigenvalues are not integers in the scanned range.
  std::map<long, Subspace> dynamic_decomposition(const Vec& H) const;

  // lambda(s) for the cocharacter with derivative H: the realization is
  // diagonalizable with integer eigenvalues k and lambda(s) = P diag(s^k) P^-1.
  GroupElement cocharacter_eval(const Vec& H, const Scalar& s) const;
  // Integer eigenvalues of the realization of H with their eigenspaces;
  // errors if H is not integrally diagonalizable.
  std::map<long, Subspace> realization_weights(const Vec& H) const;

  // exp of a nilpotent Lie vector as a group element.
  GroupElement exp_nilpotent(const Vec& N) const;

 private:
  std::string name_;
  GroupKind kind_ = GroupKind::Matrix;
  long n_param_ = 0;
  long std_dim_ = 0;
  long group_dim_ = 0;
  long rank_ = 0;
  std::vector<BlockSpec> blocks_;       // Matrix kind only
  std::vector<long> block_offsets_;
  std::vector<Mat> lie_basis_;
  std::vector<long> derived_idx_;
  std::vector<GroupElement> component_reps_;

  static GroupModel matrix_group(std::string name, std::vector<BlockSpec> blocks);
  Mat ad_matrix_kind(const Mat& g) const;
};

// Convenience: lie vector with a 1 at the basis element realizing e_{ij} of
// the given block (Matrix kind) / of the g-part (CalG).
Vec lie_unit(const GroupModel& G, long index);

struct Morphism {
  GroupModel source;
  GroupModel target;
  std::string name;
  std::function<GroupElement(const GroupElement&)> elt_map;
  Mat lie_map;  // target.group_dim x source.group_dim
};

Morphism morphism_tensor(long n, long m);            // GL(n) x GL(m) -> GL(nm)
Morphism morphism_det(long n);                       // GL(n) -> GL(1)
Morphism morphism_incl_block(long n, long k);        // GL(n) -> GL(n+k)
// SL(2) -> G determined by an sl2-triple (N, H, Y) in g-coordinates.
Morphism morphism_sl2_from_triple(const GroupModel& G, const Vec& N, const Vec& H,
                                  const Vec& Y);

// dim ker(Ad(c) - 1) on g^0 for an involution c in the jay-component of
// calG(n), compared against group_dim - borel_dim.  borel_dim defaults to
// the calG formula n(n+1)/2 + 1 and must be supplied for any other group.
struct OddnessReport {
  long fixed_dim;
  long target;
  bool odd;
};
OddnessReport oddness_fixed_dim(const GroupModel& G, const GroupElement& c,
                                long borel_dim = -1);

}  // namespace wdt
