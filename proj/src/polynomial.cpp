#include "gpw/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace gpw {

std::string to_string(const GradedVariable &v) {
  return "x" + std::to_string(v.index) + "@" + to_string(v.degree);
}

bool MonomialLess::operator()(const GradedMonomial &a,
                              const GradedMonomial &b) const {
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

GradedPolynomial GradedPolynomial::variable(const FiniteAbelianGroup &G,
                                            unsigned index,
                                            const GroupElement &degree) {
  return monomial(G, {GradedVariable{index, degree}});
}

GradedPolynomial GradedPolynomial::monomial(const FiniteAbelianGroup &G,
                                            GradedMonomial m,
                                            const Rational &c) {
  GradedPolynomial p(G);
  p.add_term(m, c);
  return p;
}

std::size_t GradedPolynomial::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

std::set<GradedVariable> GradedPolynomial::variables() const {
  std::set<GradedVariable> out;
  for (const auto &[m, c] : terms_)
    out.insert(m.begin(), m.end());
  return out;
}

unsigned GradedPolynomial::max_index() const {
  unsigned mx = 0;
  for (const auto &v : variables())
    mx = std::max(mx, v.index);
  return mx;
}

bool GradedPolynomial::is_multilinear() const {
  auto vars = variables();
  for (const auto &[m, c] : terms_) {
    if (m.size() != vars.size())
      return false;
    std::set<GradedVariable> seen(m.begin(), m.end());
    if (seen.size() != m.size())
      return false;
  }
  return true;
}

void GradedPolynomial::add_term(const GradedMonomial &m, const Rational &c) {
  if (m.empty())
    throw ContractError("graded monomials have length at least 1");
  for (const auto &v : m) {
    if (!group_.contains(v.degree))
      throw GroupMismatchError("variable " + to_string(v) +
                               " has a degree outside " + to_string(group_));
    if (v.index == 0)
      throw ContractError("variable indices start at 1");
  }
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

void GradedPolynomial::check_group(const GradedPolynomial &o) const {
  if (!(group_ == o.group_))
    throw GroupMismatchError("polynomials over " + to_string(group_) +
                             " and " + to_string(o.group_));
}

GradedPolynomial &GradedPolynomial::operator+=(const GradedPolynomial &o) {
  check_group(o);
  for (const auto &[m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

GradedPolynomial &GradedPolynomial::operator-=(const GradedPolynomial &o) {
  check_group(o);
  for (const auto &[m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

GradedPolynomial &GradedPolynomial::operator*=(const Rational &c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, v] : terms_)
    v *= c;
  return *this;
}

GradedPolynomial operator*(const GradedPolynomial &a,
                           const GradedPolynomial &b) {
  a.check_group(b);
  GradedPolynomial r(a.group_);
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_) {
      GradedMonomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      r.add_term(m, ca * cb);
    }
  return r;
}

GradedPolynomial GradedPolynomial::operator-() const {
  GradedPolynomial r = *this;
  return r *= Rational(-1);
}

GroupElement monomial_degree(const FiniteAbelianGroup &G,
                             const GradedMonomial &m) {
  GroupElement d = G.identity();
  for (const auto &v : m)
    d = G.add(d, v.degree);
  return d;
}

GradedPolynomial commutator(const GradedPolynomial &a,
                            const GradedPolynomial &b) {
  return a * b - b * a;
}

namespace {

class Parser {
public:
  Parser(std::string_view text, const FiniteAbelianGroup &G)
      : s_(text), G_(G) {}

  GradedPolynomial parse() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip();
      if (pos_ == s_.size())
        return GradedPolynomial(G_);
      pos_ = save;
    }
    GradedPolynomial p = poly();
    skip();
    if (pos_ != s_.size())
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError(what, pos_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c))
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected integer");
    return std::string(s_.substr(start, pos_ - start));
  }

  long integer() {
    skip();
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos_;
    }
    std::string d = digits();
    if (d.size() > 9)
      fail("integer out of range");
    long v = std::stol(d);
    return neg ? -v : v;
  }

  GradedPolynomial poly() {
    Rational sign(1);
    if (peek('-')) {
      ++pos_;
      sign = Rational(-1);
    } else if (peek('+')) {
      ++pos_;
    }
    GradedPolynomial p = sign * term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        p += term();
      } else if (peek('-')) {
        ++pos_;
        p -= term();
      } else {
        break;
      }
    }
    return p;
  }

  bool factor_start() {
    skip();
    return pos_ < s_.size() &&
           (s_[pos_] == 'x' || s_[pos_] == '[' || s_[pos_] == '(');
  }

  GradedPolynomial term() {
    skip();
    Rational coeff(1);
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::string lit = digits();
      if (peek('/')) {
        ++pos_;
        lit += "/" + digits();
      }
      coeff = parse_rational(lit);
      expect('*');
    }
    if (!factor_start())
      fail("expected a variable, '[' or '('");
    GradedPolynomial p = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        if (!factor_start())
          fail("expected a factor after '*'");
      } else if (!factor_start()) {
        break;
      }
      p = p * factor();
    }
    return coeff * p;
  }

  GradedPolynomial factor() {
    skip();
    char c = s_[pos_];
    if (c == 'x') {
      ++pos_;
      long idx = std::stol(digits());
      if (idx < 1)
        fail("variable indices start at 1");
      expect('@');
      GroupElement d = degree();
      return GradedPolynomial::variable(G_, static_cast<unsigned>(idx), d);
    }
    if (c == '[') {
      ++pos_;
      GradedPolynomial a = poly();
      expect(',');
      GradedPolynomial b = poly();
      expect(']');
      return commutator(a, b);
    }
    ++pos_; // '('
    GradedPolynomial a = poly();
    expect(')');
    return a;
  }

  GroupElement degree() {
    skip();
    std::size_t at = pos_;
    if (peek('e')) {
      ++pos_;
      return G_.identity();
    }
    expect('(');
    std::vector<int> coords{static_cast<int>(integer())};
    while (peek(',')) {
      ++pos_;
      coords.push_back(static_cast<int>(integer()));
    }
    expect(')');
    if (coords.size() != G_.rank())
      throw ParseError("unknown degree literal: " +
                           std::to_string(coords.size()) +
                           " coordinates for group " + to_string(G_),
                       at);
    return G_.element(coords);
  }

  std::string_view s_;
  const FiniteAbelianGroup &G_;
  std::size_t pos_ = 0;
};

} // namespace

GradedPolynomial parse_polynomial(std::string_view text,
                                  const FiniteAbelianGroup &G) {
  return Parser(text, G).parse();
}

std::string to_string(const GradedPolynomial &p) {
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[m, c] : p.terms()) {
    if (!first)
      out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0)
      out += "-";
    first = false;
    Rational a = abs(c);
    if (a != Rational(1))
      out += to_string(a) + "*";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i)
        out += "*";
      out += to_string(m[i]);
    }
  }
  return out;
}

std::map<GroupElement, GradedPolynomial>
g_homogeneous_components(const GradedPolynomial &g) {
  std::map<GroupElement, GradedPolynomial> out;
  for (const auto &[m, c] : g.terms()) {
    auto d = monomial_degree(g.group(), m);
    auto it = out.try_emplace(d, GradedPolynomial(g.group())).first;
    it->second.add_term(m, c);
  }
  return out;
}

std::vector<GradedPolynomial>
multihomogeneous_components(const GradedPolynomial &g) {
  std::map<std::map<GradedVariable, unsigned>, GradedPolynomial> groups;
  for (const auto &[m, c] : g.terms()) {
    std::map<GradedVariable, unsigned> md;
    for (const auto &v : m)
      ++md[v];
    auto it = groups.try_emplace(md, GradedPolynomial(g.group())).first;
    it->second.add_term(m, c);
  }
  std::vector<GradedPolynomial> out;
  for (auto &[md, p] : groups)
    out.push_back(std::move(p));
  return out;
}

Polarization polarize(const GradedPolynomial &h) {
  Polarization out{GradedPolynomial(h.group()), Rational(1), h};
  if (h.is_zero())
    return out;
  std::map<GradedVariable, unsigned> mult;
  for (const auto &v : h.terms().begin()->first)
    ++mult[v];
  // copies[v] = list of variables replacing the occurrences of v
  unsigned next = h.max_index();
  std::map<GradedVariable, std::vector<GradedVariable>> copies;
  for (const auto &[v, d] : mult) {
    std::vector<GradedVariable> c{v};
    for (unsigned k = 1; k < d; ++k)
      c.push_back(GradedVariable{++next, v.degree});
    copies[v] = std::move(c);
    for (unsigned k = 2; k <= d; ++k)
      out.constant *= Rational(static_cast<long>(k));
  }
  for (const auto &[m, c] : h.terms()) {
    std::map<GradedVariable, unsigned> check;
    for (const auto &v : m)
      ++check[v];
    if (check != mult)
      throw ContractError("polarize expects a multihomogeneous polynomial");
    // Enumerate every assignment of the occurrences of each variable to its
    // copies: one permutation of the copies per variable.
    std::vector<GradedVariable> vars;
    for (const auto &[v, d] : mult)
      vars.push_back(v);
    std::map<GradedVariable, std::vector<unsigned>> perm;
    for (const auto &v : vars) {
      std::vector<unsigned> p(mult[v]);
      for (unsigned k = 0; k < p.size(); ++k)
        p[k] = k;
      perm[v] = p;
    }
    std::function<void(std::size_t)> rec = [&](std::size_t vi) {
      if (vi == vars.size()) {
        std::map<GradedVariable, unsigned> used;
        GradedMonomial nm;
        for (const auto &v : m) {
          unsigned occ = used[v]++;
          nm.push_back(copies[v][perm[v][occ]]);
        }
        out.poly.add_term(nm, c);
        return;
      }
      auto &p = perm[vars[vi]];
      std::sort(p.begin(), p.end());
      do {
        rec(vi + 1);
      } while (std::next_permutation(p.begin(), p.end()));
      std::sort(p.begin(), p.end());
    };
    rec(0);
  }
  return out;
}

std::vector<Polarization> multilinearize_tracked(const GradedPolynomial &g) {
  std::vector<Polarization> out;
  for (const auto &[d, comp] : g_homogeneous_components(g))
    for (const auto &h : multihomogeneous_components(comp)) {
      auto p = polarize(h);
      if (!p.poly.is_zero())
        out.push_back(std::move(p));
    }
  return out;
}

std::vector<GradedPolynomial> multilinearize(const GradedPolynomial &g) {
  std::vector<GradedPolynomial> out;
  for (auto &p : multilinearize_tracked(g))
    out.push_back(std::move(p.poly));
  return out;
}

Rational FGTable::at(const GroupElement &a, const GroupElement &b) const {
  auto it = values.find({a, b});
  return it == values.end() ? Rational(0) : it->second;
}

void FGTable::set(const GroupElement &a, const GroupElement &b,
                  const Rational &v) {
  if (v.is_zero())
    values.erase({a, b});
  else
    values[{a, b}] = v;
}

GradedPolynomial fg_bracket(const FiniteAbelianGroup &G, const FGTable &f,
                            const GradedVariable &x, const GradedVariable &y) {
  GradedPolynomial p(G);
  p.add_term({x, y}, f.at(x.degree, y.degree));
  p.add_term({y, x}, -f.at(y.degree, x.degree));
  return p;
}

GradedPolynomial fg_expand(const FiniteAbelianGroup &G, const FGTable &f,
                           const GroupElement &xi, const GroupElement &zeta) {
  return fg_bracket(G, f, GradedVariable{1, xi}, GradedVariable{2, zeta});
}

GradedPolynomial left_normed(std::size_t n) {
  if (n < 2)
    throw ContractError("left-normed commutators need n >= 2");
  FiniteAbelianGroup T;
  GradedPolynomial p = GradedPolynomial::variable(T, 1, T.identity());
  for (unsigned i = 2; i <= n; ++i)
    p = commutator(p, GradedPolynomial::variable(T, i, T.identity()));
  return p;
}

GradedPolynomial product_of_commutators(std::size_t d) {
  if (d < 1)
    throw ContractError("product of commutators needs d >= 1");
  FiniteAbelianGroup T;
  auto var = [&](unsigned i) {
    return GradedPolynomial::variable(T, i, T.identity());
  };
  GradedPolynomial p = commutator(var(1), var(2));
  for (unsigned k = 2; k <= d; ++k)
    p = p * commutator(var(2 * k - 1), var(2 * k));
  return p;
}

bool ordinary_mode(const GradedPolynomial &g, const GradedAlgebra &A) {
  if (g.group() == A.group())
    return false;
  if (g.is_ungraded())
    return true;
  throw InvalidInputError("polynomial is graded by " + to_string(g.group()) +
                          " but the algebra by " + to_string(A.group()));
}

VecQ evaluate(const GradedPolynomial &g, const GradedAlgebra &A,
              const std::map<GradedVariable, VecQ> &assignment) {
  bool ordinary = ordinary_mode(g, A);
  for (const auto &v : g.variables()) {
    auto it = assignment.find(v);
    if (it == assignment.end())
      throw EvaluationContractError("no value assigned to " + to_string(v));
    check_owner(A, it->second.size());
    if (!ordinary && !is_homogeneous_of(A, it->second, v.degree))
      throw EvaluationContractError(
          "value " + element_to_string(A, it->second) + " for " +
          to_string(v) + " is not homogeneous of degree " +
          to_string(v.degree));
  }
  return evaluate_unchecked<Rational>(g, A, assignment);
}

} // namespace gpw
