#pragma once

#include "gpw/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace gpw {

/// Sparse commutative polynomial over the rationals in variables t_0, t_1, ...
/// Exponent vectors are stored without trailing zeros, so each monomial has a
/// single representation; terms are kept in lexicographic exponent order.
class MultiPoly {
public:
  using Exponents = std::vector<unsigned>;

  MultiPoly() = default;
  MultiPoly(int c) : MultiPoly(Rational(c)) {}
  MultiPoly(const Rational &c);

  static MultiPoly variable(std::size_t index);

  const std::map<Exponents, Rational> &terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  MultiPoly &operator+=(const MultiPoly &o);
  MultiPoly &operator-=(const MultiPoly &o);
  MultiPoly &operator*=(const MultiPoly &o);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly &a, const MultiPoly &b) {
    return a.terms_ == b.terms_;
  }

  void add_term(Exponents e, const Rational &c);

private:
  std::map<Exponents, Rational> terms_;
};

MultiPoly poly_add(const MultiPoly &p, const MultiPoly &q);
MultiPoly poly_mul(const MultiPoly &p, const MultiPoly &q);
bool poly_is_zero(const MultiPoly &p);

std::string to_string(const MultiPoly &p);

} // namespace gpw

namespace Eigen {

template <> struct NumTraits<gpw::MultiPoly> : GenericNumTraits<gpw::MultiPoly> {
  typedef gpw::MultiPoly Real;
  typedef gpw::MultiPoly NonInteger;
  typedef gpw::MultiPoly Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 100,
    MulCost = 400
  };
};

} // namespace Eigen
