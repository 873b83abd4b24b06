#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

namespace gpw {

/// Exact rational number. Thin value wrapper over mpq_class so that it can
/// be used as an Eigen scalar without colliding with gmpxx expression
/// templates.
class Rational {
public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(long long v) : q_(static_cast<long>(v)) {}
  Rational(unsigned long v) : q_(v) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }

  const mpq_class &raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational &operator+=(const Rational &o) {
    q_ += o.q_;
    return *this;
  }
  Rational &operator-=(const Rational &o) {
    q_ -= o.q_;
    return *this;
  }
  Rational &operator*=(const Rational &o) {
    q_ *= o.q_;
    return *this;
  }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational operator+() const { return *this; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational &a,
                                          const Rational &b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

private:
  mpq_class q_;
};

Rational rat_add(const Rational &a, const Rational &b);
Rational rat_mul(const Rational &a, const Rational &b);
Rational rat_neg(const Rational &a);
/// Throws DivisionByZeroError on zero.
Rational rat_inv(const Rational &a);

/// `p/q` or `p`, optional leading minus.
std::string to_string(const Rational &r);
Rational parse_rational(std::string_view text);

std::ostream &operator<<(std::ostream &os, const Rational &r);

inline Rational abs(const Rational &r) { return r.sign() < 0 ? -r : r; }

} // namespace gpw

namespace Eigen {

template <> struct NumTraits<gpw::Rational> : GenericNumTraits<gpw::Rational> {
  typedef gpw::Rational Real;
  typedef gpw::Rational NonInteger;
  typedef gpw::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 60
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

} // namespace Eigen
