#include "gpw/rational.hpp"

#include "gpw/error.hpp"

#include <cctype>

namespace gpw {

Rational::Rational(long num, long den) {
  if (den == 0)
    throw DivisionByZeroError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw DivisionByZeroError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational rat_add(const Rational &a, const Rational &b) { return a + b; }
Rational rat_mul(const Rational &a, const Rational &b) { return a * b; }
Rational rat_neg(const Rational &a) { return -a; }

Rational rat_inv(const Rational &a) {
  if (a.is_zero())
    throw DivisionByZeroError("inverse of zero");
  return Rational(1) / a;
}

std::string to_string(const Rational &r) { return r.raw().get_str(); }

std::ostream &operator<<(std::ostream &os, const Rational &r) {
  return os << to_string(r);
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  std::string s(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+'))
    ++i;
  bool digits = false, slash = false, den_digits = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (slash ? den_digits : digits) = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
    } else {
      throw ParseError("invalid rational literal '" + s + "'", i);
    }
  }
  if (!digits || (slash && !den_digits))
    throw ParseError("invalid rational literal '" + s + "'", 0);
  if (s[0] == '+')
    s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw ParseError("invalid rational literal '" + s + "'", 0);
  if (q.get_den() == 0)
    throw DivisionByZeroError("rational literal with zero denominator");
  return Rational(q);
}

} // namespace gpw
