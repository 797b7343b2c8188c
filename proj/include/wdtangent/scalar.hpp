#pragma once

// Exact arithmetic over Q and over a single real quadratic extension Q(sqrt(d)).
//
// A Scalar is a + b*sqrt(d) with a, b arbitrary-precision rationals and d a
// squarefree positive integer tag.  Plain rationals are canonicalized to
// (b = 0, d = 1); a d = 1 value combines freely with any other tag since Q
// embeds in every Q(sqrt(d)).  Mixing two distinct tags != 1 is an error:
// one quadratic extension per computation is all the theory requires
// (the only surd ever needed is p^{fK/2}).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wdt {

using Rational = mpq_class;

class Scalar {
 public:
  Scalar() : a_(0), b_(0), d_(1) {}
  Scalar(long v) : a_(v), b_(0), d_(1) {}  // NOLINT: implicit by design
  explicit Scalar(const Rational& v) : a_(v), b_(0), d_(1) { a_.canonicalize(); }

  // a + b*sqrt(d); canonicalizes b == 0 back to the rational tag d = 1.
  static Scalar surd(const Rational& a, const Rational& b, long d);

  const Rational& rat_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  long d_tag() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return d_ == 1; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;
  Scalar pow(long e) const;  // negative exponents via inverse()

  // Serialization: "a", "a/b", "a+c/e*r", "a-c*r", "r", "-r", ... where r
  // denotes sqrt(d); the tag d travels in the enclosing document header.
  std::string to_string() const;
  static Scalar from_string(const std::string& s, long d);

 private:
  Rational a_, b_;
  long d_;

  static long merge_tags(long d1, long d2);
};

// s with s^2 = p^f: rational for even f, p^{(f-1)/2} * sqrt(p) otherwise.
Scalar sqrt_power(long p, long f);

bool is_prime(long n);
bool is_squarefree(long n);

// n0 = lcm{ n >= 1 : phi(n) <= g_dim }; every root of unity whose minimal
// polynomial has degree <= g_dim has order dividing n0.
long cyclotomic_bound(long g_dim);

// Dense polynomials over Scalar, low-to-high degree.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Scalar& s) { return Poly({s}); }
  // X^n - 1
  static Poly x_pow_minus_one(long n);

  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for 0
  Scalar coeff(long i) const {
    return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[i] : Scalar(0);
  }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly monic() const;
  // Euclidean remainder (exact over the field).
  Poly rem(const Poly& divisor) const;
  Scalar eval(const Scalar& x) const;

 private:
  std::vector<Scalar> c_;
  void trim();
};

// Monic gcd over the Scalar field.
Poly poly_gcd(Poly a, Poly b);

// gcd(P, X^{n0} - 1); nonconstant output certifies a root of unity of order
// dividing n0 among the roots of P.
Poly gcd_with_unity(const Poly& P, long n0);

}  // namespace wdt
