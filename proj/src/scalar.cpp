#include "wdtangent/scalar.hpp"

#include <numeric>
#include <sstream>

namespace wdt {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

bool is_squarefree(long n) {
  if (n < 1) return false;
  for (long f = 2; f * f <= n; ++f)
    if (n % (f * f) == 0) return false;
  return true;
}

long Scalar::merge_tags(long d1, long d2) {
  if (d1 == d2) return d1;
  if (d1 == 1) return d2;
  if (d2 == 1) return d1;
  throw std::invalid_argument("Scalar: mixing distinct quadratic tags d=" +
                              std::to_string(d1) + " and d=" + std::to_string(d2));
}

Scalar Scalar::surd(const Rational& a, const Rational& b, long d) {
  if (!is_squarefree(d))
    throw std::invalid_argument("Scalar: d-tag must be squarefree and >= 1");
  if (d == 1 && b != 0)
    throw std::invalid_argument("Scalar: d = 1 requires b = 0");
  Scalar s;
  s.a_ = a;
  s.b_ = b;
  s.a_.canonicalize();
  s.b_.canonicalize();
  s.d_ = (s.b_ == 0) ? 1 : d;
  return s;
}

Scalar Scalar::operator-() const { return surd(-a_, -b_, d_); }

Scalar Scalar::operator+(const Scalar& o) const {
  long d = merge_tags(d_, o.d_);
  return surd(a_ + o.a_, b_ + o.b_, d);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  long d = merge_tags(d_, o.d_);
  // (a1 + b1 r)(a2 + b2 r) = a1 a2 + b1 b2 d + (a1 b2 + a2 b1) r
  return surd(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + o.a_ * b_, d);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  // 1/(a + b r) = (a - b r)/(a^2 - b^2 d); the norm is nonzero since d is
  // squarefree > 1 (so sqrt(d) is irrational) whenever b != 0.
  Rational norm = a_ * a_ - b_ * b_ * d_;
  return surd(a_ / norm, -b_ / norm, d_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (a_ != o.a_ || b_ != o.b_) return false;
  return b_ == 0 || d_ == o.d_;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc(1), base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

namespace {

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Rational parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Scalar: empty rational literal");
  std::string t = (s[0] == '+') ? s.substr(1) : s;  // mpq rejects a leading '+'
  Rational r;
  if (r.set_str(t, 10) != 0)
    throw std::invalid_argument("Scalar: bad rational literal '" + s + "'");
  r.canonicalize();
  if (r.get_den() == 0) throw std::invalid_argument("Scalar: zero denominator");
  return r;
}

}  // namespace

std::string Scalar::to_string() const {
  if (b_ == 0) return rat_str(a_);
  std::string surd_term = (abs(b_) == 1 ? std::string("r") : rat_str(abs(b_)) + "*r");
  std::string sign = (b_ < 0) ? "-" : (a_ == 0 ? "" : "+");
  std::string head = (a_ == 0) ? "" : rat_str(a_);
  return head + sign + surd_term;
}

Scalar Scalar::from_string(const std::string& s, long d) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("Scalar: empty literal");

  size_t rpos = t.find('r');
  if (rpos == std::string::npos) return Scalar(parse_rat(t));
  if (rpos + 1 != t.size())
    throw std::invalid_argument("Scalar: 'r' must terminate the literal: " + s);

  // Split "<head><sign><coef>*r" at the last top-level +/- before the surd.
  std::string body = t.substr(0, rpos);  // e.g. "1/2+3/4*", "-*"? no: "3*", "-", ""
  if (!body.empty() && body.back() == '*') body.pop_back();
  // Find the split point: last '+' or '-' not at position 0 and not after '/'.
  size_t split = std::string::npos;
  for (size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/' && body[i - 1] != '+' &&
        body[i - 1] != '-') {
      split = i;
      break;
    }
  }
  Rational a(0), b(1);
  if (split == std::string::npos) {
    // pure surd term: "", "-", "c", "-c"
    if (body.empty())
      b = 1;
    else if (body == "-")
      b = -1;
    else
      b = parse_rat(body);
  } else {
    a = parse_rat(body.substr(0, split));
    std::string coef = body.substr(split);  // includes sign
    if (coef == "+")
      b = 1;
    else if (coef == "-")
      b = -1;
    else
      b = parse_rat(coef);
  }
  return surd(a, b, d);
}

Scalar sqrt_power(long p, long f) {
  if (!is_prime(p)) throw std::invalid_argument("sqrt_power: p must be prime");
  if (f < 1) throw std::invalid_argument("sqrt_power: f must be >= 1");
  if (f % 2 == 0) return Scalar(Rational(p)).pow(f / 2);
  return Scalar::surd(0, Scalar(Rational(p)).pow((f - 1) / 2).rat_part(), p);
}

namespace {

long euler_phi(long n) {
  long phi = n, m = n;
  for (long f = 2; f * f <= m; ++f) {
    if (m % f == 0) {
      phi -= phi / f;
      while (m % f == 0) m /= f;
    }
  }
  if (m > 1) phi -= phi / m;
  return phi;
}

}  // namespace

long cyclotomic_bound(long g_dim) {
  if (g_dim < 1) throw std::invalid_argument("cyclotomic_bound: g_dim >= 1 required");
  long limit = 2 * g_dim * g_dim;  // phi(n) >= sqrt(n/2)
  long result = 1;
  for (long n = 1; n <= limit; ++n)
    if (euler_phi(n) <= g_dim) result = std::lcm(result, n);
  return result;
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::x_pow_minus_one(long n) {
  std::vector<Scalar> c(n + 1, Scalar(0));
  c[0] = Scalar(-1);
  c[n] = Scalar(1);
  return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), Scalar(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Scalar> c(std::max(c_.size(), o.c_.size()), Scalar(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
  return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Scalar> c(c_.size() + o.c_.size() - 1, Scalar(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(c));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  std::vector<Scalar> c = c_;
  Scalar lead = c.back();
  for (auto& x : c) x /= lead;
  return Poly(std::move(c));
}

Poly Poly::rem(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  std::vector<Scalar> r = c_;
  const auto& d = divisor.c_;
  Scalar lead = d.back();
  while (r.size() >= d.size()) {
    Scalar q = r.back() / lead;
    size_t off = r.size() - d.size();
    for (size_t i = 0; i < d.size(); ++i) r[off + i] -= q * d[i];
    // the top coefficient is exactly cancelled
    r.pop_back();
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  return Poly(std::move(r));
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

// exact quotient of monic-divisible polynomials (remainder must vanish)
Poly poly_divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("poly_divexact: division by zero polynomial");
  std::vector<Scalar> r = a.coeffs();
  std::vector<Scalar> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0,
                        Scalar(0));
  const auto& d = b.coeffs();
  Scalar lead = d.back();
  while (r.size() >= d.size()) {
    Scalar f = r.back() / lead;
    size_t off = r.size() - d.size();
    q[off] = f;
    for (size_t i = 0; i < d.size(); ++i) r[off + i] -= f * d[i];
    r.pop_back();
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  if (!r.empty()) throw std::domain_error("poly_divexact: nonzero remainder");
  return Poly(std::move(q));
}

}  // namespace

Poly gcd_with_unity(const Poly& P, long n0) {
  if (P.is_zero()) throw std::invalid_argument("gcd_with_unity: zero polynomial");
  if (P.degree() < 1) return P.monic();
  // A root of unity of order n among the roots of P satisfies
  // phi(n) <= 2 deg(P): P's coefficients lie in Q or one quadratic extension,
  // so the root's minimal polynomial has degree >= phi(n)/2 and divides P.
  // gcd(P, X^n0 - 1) is therefore the least common multiple of the
  // gcd(P, X^n - 1) over the small divisors n of n0, which avoids ever
  // forming the dense degree-n0 polynomial.
  long phimax = 2 * P.degree();
  long limit = 2 * phimax * phimax;  // phi(n) >= sqrt(n/2)
  Poly out = Poly::constant(Scalar(1));
  for (long n = 1; n <= limit; ++n) {
    if (n0 % n != 0 || euler_phi(n) > phimax) continue;
    Poly gn = poly_gcd(P, Poly::x_pow_minus_one(n));
    if (gn.degree() < 1) continue;
    out = out * poly_divexact(gn, poly_gcd(out, gn));
  }
  return out.monic();
}

}  // namespace wdt
