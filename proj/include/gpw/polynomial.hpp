#pragma once

#include "gpw/algebra.hpp"
#include "gpw/group.hpp"
#include "gpw/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gpw {

/// x_i^(xi). Same index with different degrees are different variables.
struct GradedVariable {
  unsigned index = 1;
  GroupElement degree;

  friend auto operator<=>(const GradedVariable &,
                          const GradedVariable &) = default;
  friend bool operator==(const GradedVariable &,
                         const GradedVariable &) = default;
};

std::string to_string(const GradedVariable &v);

using GradedMonomial = std::vector<GradedVariable>;

/// Length first, then lexicographic by (index, degree coordinates).
struct MonomialLess {
  bool operator()(const GradedMonomial &a, const GradedMonomial &b) const;
};

class GradedPolynomial {
public:
  using Terms = std::map<GradedMonomial, Rational, MonomialLess>;

  GradedPolynomial() = default;
  explicit GradedPolynomial(FiniteAbelianGroup group)
      : group_(std::move(group)) {}

  static GradedPolynomial variable(const FiniteAbelianGroup &G, unsigned index,
                                   const GroupElement &degree);
  static GradedPolynomial monomial(const FiniteAbelianGroup &G,
                                   GradedMonomial m, const Rational &c = 1);

  const FiniteAbelianGroup &group() const { return group_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Maximal monomial length; 0 for the zero polynomial.
  std::size_t degree() const;
  std::set<GradedVariable> variables() const;
  unsigned max_index() const;
  bool is_multilinear() const;
  /// Trivial grading group: variables range over the whole algebra.
  bool is_ungraded() const { return group_.order() == 1; }

  void add_term(const GradedMonomial &m, const Rational &c);

  GradedPolynomial &operator+=(const GradedPolynomial &o);
  GradedPolynomial &operator-=(const GradedPolynomial &o);
  GradedPolynomial &operator*=(const Rational &c);
  friend GradedPolynomial operator+(GradedPolynomial a,
                                    const GradedPolynomial &b) {
    return a += b;
  }
  friend GradedPolynomial operator-(GradedPolynomial a,
                                    const GradedPolynomial &b) {
    return a -= b;
  }
  friend GradedPolynomial operator*(const GradedPolynomial &a,
                                    const GradedPolynomial &b);
  friend GradedPolynomial operator*(const Rational &c, GradedPolynomial a) {
    return a *= c;
  }
  GradedPolynomial operator-() const;

  friend bool operator==(const GradedPolynomial &a, const GradedPolynomial &b) {
    return a.group_ == b.group_ && a.terms_ == b.terms_;
  }

private:
  void check_group(const GradedPolynomial &o) const;

  FiniteAbelianGroup group_;
  Terms terms_;
};

GroupElement monomial_degree(const FiniteAbelianGroup &G,
                             const GradedMonomial &m);

GradedPolynomial commutator(const GradedPolynomial &a,
                            const GradedPolynomial &b);

/// Grammar:
///   poly   := term (("+"|"-") term)*
///   term   := (rational "*")? factor+
///   factor := var | "[" poly "," poly "]" | "(" poly ")"
///   var    := "x" INT "@" degree
///   degree := "e" | "(" INT ("," INT)* ")"
/// Factors may also be separated by "*". A leading sign is accepted and the
/// literal `0` is the zero polynomial.
GradedPolynomial parse_polynomial(std::string_view text,
                                  const FiniteAbelianGroup &G);

/// Canonical text; `parse_polynomial(to_string(p), p.group()) == p`.
std::string to_string(const GradedPolynomial &p);

std::map<GroupElement, GradedPolynomial>
g_homogeneous_components(const GradedPolynomial &g);

/// Components grouped by the multiplicity of each variable, in order of the
/// multidegree.
std::vector<GradedPolynomial>
multihomogeneous_components(const GradedPolynomial &g);

/// Full polarization of a multihomogeneous polynomial. Occurrences of a
/// repeated variable are spread over the original index and fresh indices of
/// the same degree; `constant` is the product of the multiplicity factorials,
/// so that substituting the original variable back gives constant * source.
struct Polarization {
  GradedPolynomial poly;
  Rational constant;
  GradedPolynomial source;
};

Polarization polarize(const GradedPolynomial &multihomogeneous);

/// G-homogeneous split, multihomogeneous split, then polarization. Zero
/// components are dropped.
std::vector<Polarization> multilinearize_tracked(const GradedPolynomial &g);
std::vector<GradedPolynomial> multilinearize(const GradedPolynomial &g);

/// Table G x G -> Q; missing entries read as zero.
struct FGTable {
  std::map<std::pair<GroupElement, GroupElement>, Rational> values;

  Rational at(const GroupElement &a, const GroupElement &b) const;
  void set(const GroupElement &a, const GroupElement &b, const Rational &v);
};

/// f(xi,zeta) x y - f(zeta,xi) y x with x = x_i^(xi), y = x_j^(zeta).
GradedPolynomial fg_bracket(const FiniteAbelianGroup &G, const FGTable &f,
                            const GradedVariable &x, const GradedVariable &y);
/// fg_bracket with x = x1^(xi), y = x2^(zeta).
GradedPolynomial fg_expand(const FiniteAbelianGroup &G, const FGTable &f,
                           const GroupElement &xi, const GroupElement &zeta);

/// [[..[x1,x2],x3..],xn] over the trivial group.
GradedPolynomial left_normed(std::size_t n);
/// [x1,x2][x3,x4]...[x_{2d-1},x_{2d}] over the trivial group.
GradedPolynomial product_of_commutators(std::size_t d);

/// Generic substitution, no homogeneity checks. Ungraded polynomials are
/// evaluated on algebras graded by any group.
template <class Scalar>
Vec<Scalar>
evaluate_unchecked(const GradedPolynomial &g, const GradedAlgebra &A,
                   const std::map<GradedVariable, Vec<Scalar>> &assignment) {
  Vec<Scalar> total = zero_element<Scalar>(A);
  for (const auto &[m, c] : g.terms()) {
    auto it = assignment.find(m.front());
    if (it == assignment.end())
      throw EvaluationContractError("no value assigned to " +
                                    to_string(m.front()));
    Vec<Scalar> acc = it->second;
    for (std::size_t p = 1; p < m.size() && !element_is_zero(acc); ++p) {
      auto jt = assignment.find(m[p]);
      if (jt == assignment.end())
        throw EvaluationContractError("no value assigned to " +
                                      to_string(m[p]));
      acc = multiply(A, acc, jt->second);
    }
    if (element_is_zero(acc))
      continue;
    Scalar sc(c);
    for (Eigen::Index i = 0; i < acc.size(); ++i)
      if (!scalar_is_zero(acc[i]))
        total[i] += sc * acc[i];
  }
  return total;
}

/// True when the polynomial is evaluated with variables ranging over the
/// whole algebra (ungraded polynomial on a graded algebra); throws
/// InvalidInputError when the groups are incompatible.
bool ordinary_mode(const GradedPolynomial &g, const GradedAlgebra &A);

/// Substitution with contract checks: every variable of g is assigned, and in
/// graded mode each value is homogeneous of the variable's degree.
VecQ evaluate(const GradedPolynomial &g, const GradedAlgebra &A,
              const std::map<GradedVariable, VecQ> &assignment);

} // namespace gpw
