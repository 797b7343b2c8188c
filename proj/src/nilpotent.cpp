#include "wdtangent/nilpotent.hpp"

#include <stdexcept>

namespace wdt {

namespace {

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec scaled(const Vec& v, const Scalar& c) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

}  // namespace

bool SL2Triple::is_zero() const { return vec_is_zero(N) && vec_is_zero(H) && vec_is_zero(Y); }

SL2Triple jacobson_morozov(const GroupModel& G, const Vec& N,
                           const std::optional<Subspace>& restrict_to) {
  long d = G.group_dim();
  if (static_cast<long>(N.size()) != d)
    throw std::invalid_argument("jacobson_morozov: coordinate size mismatch");
  if (!G.lie_nilpotent(N)) throw std::invalid_argument("jacobson_morozov: N not nilpotent");

  Subspace Z = restrict_to.value_or(Subspace::full(d));
  if (restrict_to) {
    if (!Z.contains(N))
      throw std::invalid_argument("jacobson_morozov: N outside the restricted subspace");
    // re-verify bracket closure of the restriction
    for (const auto& u : Z.basis())
      for (const auto& v : Z.basis())
        if (!Z.contains(G.bracket(u, v)))
          throw std::invalid_argument("jacobson_morozov: subspace not bracket-closed");
  }

  if (vec_is_zero(N)) return SL2Triple{N, Vec(d, Scalar(0)), Vec(d, Scalar(0))};

  Mat Zmat = mat_from_cols(d, Z.basis());
  Mat adN = G.ad_n(N);

  // H = [N, W] with W in Z and [H, N] = 2N  <=>  -adN^2 Zmat w = 2N
  Mat A = (adN * adN * Zmat) * Scalar(-1);
  auto w = solve(A, scaled(N, Scalar(2)));
  if (!w)
    throw std::domain_error(
        "jacobson_morozov: no H = [N,W] with [H,N] = 2N (is the subspace reductive?)");
  Vec H = adN.apply(Zmat.apply(*w));

  // Y in Z with [N,Y] = H and [H,Y] = -2Y
  Mat adH = G.ad_n(H);
  long m = Z.dim();
  Mat B(2 * d, m);
  Mat top = adN * Zmat;
  Mat bot = (adH + Mat::identity(d) * Scalar(2)) * Zmat;
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < m; ++j) {
      B.at(i, j) = top.at(i, j);
      B.at(d + i, j) = bot.at(i, j);
    }
  Vec rhs(2 * d, Scalar(0));
  for (long i = 0; i < d; ++i) rhs[i] = H[i];
  auto y = solve(B, rhs);
  if (!y) throw std::domain_error("jacobson_morozov: no Y completing the sl2-triple");
  Vec Y = Zmat.apply(*y);

  SL2Triple t{N, H, Y};
  if (G.bracket(t.H, t.N) != scaled(t.N, Scalar(2)) ||
      G.bracket(t.H, t.Y) != scaled(t.Y, Scalar(-2)) || G.bracket(t.N, t.Y) != t.H)
    throw std::logic_error("jacobson_morozov: constructed triple fails the sl2 relations");
  return t;
}

Cocharacter associated_cocharacter(const GroupModel& G, const Vec& N,
                                   const std::optional<Subspace>& restrict_to) {
  SL2Triple t = jacobson_morozov(G, N, restrict_to);
  Cocharacter lam;
  lam.H = t.H;
  auto dec = G.dynamic_decomposition(t.H);  // throws on non-integer weights
  for (const auto& [k, sp] : dec)
    for (long i = 0; i < sp.dim(); ++i) lam.weights.push_back(k);
  if (G.bracket(lam.H, N) != scaled(N, Scalar(2)) && !vec_is_zero(N))
    throw std::logic_error("associated_cocharacter: N does not have weight 2");
  auto rw = G.realization_weights(t.H);
  lam.diagonalizer = Mat(G.std_dim(), G.std_dim());
  long c = 0;
  for (const auto& [k, sp] : rw)
    for (const auto& v : sp.basis()) lam.diagonalizer.set_col(c++, v);
  return lam;
}

bool weight2_in_image(const GroupModel& G, const Vec& N, const Cocharacter& lambda) {
  auto dec = G.dynamic_decomposition(lambda.H);
  auto it = dec.find(2);
  if (it == dec.end()) return true;  // trivial weight-2 subspace
  return image(G.ad_n(N)).contains(it->second);
}

GroupElement cocharacter_at(const GroupModel& G, const Cocharacter& lambda, const Scalar& s) {
  return G.cocharacter_eval(lambda.H, s);
}

Vec jordan_nilpotent(const GroupModel& G, const std::vector<long>& partition) {
  if (G.kind() != GroupKind::Matrix || G.blocks().size() != 1)
    throw std::invalid_argument("jordan_nilpotent: expects a single-block group model");
  long n = G.blocks()[0].n;
  long total = 0;
  for (long part : partition) total += part;
  if (total != n) throw std::invalid_argument("jordan_nilpotent: partition does not sum to n");
  Mat N(n, n);
  long off = 0;
  for (long part : partition) {
    for (long i = 0; i + 1 < part; ++i) N.at(off + i, off + i + 1) = Scalar(1);
    off += part;
  }
  return G.lie_coords(N);
}

std::vector<std::vector<long>> partitions_of(long n) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long rem, long maxpart) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (long k = std::min(rem, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rem - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace wdt
