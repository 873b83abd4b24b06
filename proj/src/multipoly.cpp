#include "gpw/multipoly.hpp"

namespace gpw {

namespace {

void trim(MultiPoly::Exponents &e) {
  while (!e.empty() && e.back() == 0)
    e.pop_back();
}

} // namespace

MultiPoly::MultiPoly(const Rational &c) {
  if (!c.is_zero())
    terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::variable(std::size_t index) {
  MultiPoly p;
  Exponents e(index + 1, 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

void MultiPoly::add_term(Exponents e, const Rational &c) {
  if (c.is_zero())
    return;
  trim(e);
  auto [it, inserted] = terms_.try_emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) {
  for (const auto &[e, c] : o.terms_)
    add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
  MultiPoly r;
  if (a.is_zero() || b.is_zero())
    return r;
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_) {
      MultiPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i)
        e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i)
        e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  return r;
}

MultiPoly &MultiPoly::operator*=(const MultiPoly &o) {
  *this = *this * o;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto &[e, c] : terms_)
    r.terms_.emplace(e, -c);
  return r;
}

MultiPoly poly_add(const MultiPoly &p, const MultiPoly &q) { return p + q; }
MultiPoly poly_mul(const MultiPoly &p, const MultiPoly &q) { return p * q; }
bool poly_is_zero(const MultiPoly &p) { return p.is_zero(); }

std::string to_string(const MultiPoly &p) {
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[e, c] : p.terms()) {
    if (!first)
      out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0)
      out += "-";
    first = false;
    Rational a = abs(c);
    bool constant = e.empty();
    if (constant || a != Rational(1))
      out += to_string(a);
    bool need_star = !constant && a != Rational(1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (need_star)
        out += "*";
      need_star = true;
      out += "t" + std::to_string(i);
      if (e[i] > 1)
        out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

} // namespace gpw
