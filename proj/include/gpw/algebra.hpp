#pragma once

#include "gpw/error.hpp"
#include "gpw/group.hpp"
#include "gpw/linalg.hpp"
#include "gpw/multipoly.hpp"
#include "gpw/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gpw {

/// One structure constant: coefficient of basis element `index`.
struct Term {
  std::size_t index;
  Rational coeff;

  friend bool operator==(const Term &, const Term &) = default;
};

/// e_i * e_j as a sparse combination, sorted by index, no zero coefficients.
using Product = std::vector<Term>;

/// Extra data kept by M_k(F^sigma[H]) with an elementary-canonical grading.
/// Basis element E_ij eta_h sits at index (i*k + j)*|H| + position of h in H.
struct CanonicalData {
  std::size_t k = 1;
  std::vector<GroupElement> theta;
  std::vector<GroupElement> H;
  std::map<std::pair<GroupElement, GroupElement>, Rational> sigma;

  std::size_t h_index(const GroupElement &h) const;
  const Rational &sigma_at(const GroupElement &a, const GroupElement &b) const;
  /// (i, j, h-position) of a basis index.
  std::tuple<std::size_t, std::size_t, std::size_t> decode(std::size_t b) const;
};

/// Finite-dimensional G-graded algebra given by structure constants on a
/// homogeneous basis.
class GradedAlgebra {
public:
  GradedAlgebra() = default;
  GradedAlgebra(FiniteAbelianGroup group, std::vector<std::string> labels,
                std::vector<GroupElement> degrees);

  const FiniteAbelianGroup &group() const { return group_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  const std::string &label(std::size_t i) const { return labels_.at(i); }
  const std::vector<GroupElement> &degrees() const { return degrees_; }
  const GroupElement &degree(std::size_t i) const { return degrees_.at(i); }
  std::optional<std::size_t> find_label(const std::string &label) const;

  const Product &product(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }
  void set_product(std::size_t i, std::size_t j, Product p);
  void add_product_term(std::size_t i, std::size_t j, std::size_t k,
                        const Rational &c);

  const std::optional<std::size_t> &unit() const { return unit_; }
  void set_unit(std::optional<std::size_t> u) { unit_ = u; }

  const std::optional<CanonicalData> &canonical() const { return canonical_; }
  void set_canonical(std::optional<CanonicalData> c) {
    canonical_ = std::move(c);
  }

  /// Replaces the grading; the caller re-validates.
  void regrade(FiniteAbelianGroup group, std::vector<GroupElement> degrees);

  /// Fixture name or file the algebra came from, used in reproducers.
  const std::string &name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

private:
  FiniteAbelianGroup group_;
  std::vector<std::string> labels_;
  std::vector<GroupElement> degrees_;
  std::vector<Product> table_;
  std::optional<std::size_t> unit_;
  std::optional<CanonicalData> canonical_;
  std::string name_;
};

inline bool scalar_is_zero(const Rational &r) { return r.is_zero(); }
inline bool scalar_is_zero(const MultiPoly &p) { return p.is_zero(); }

template <class Scalar> Vec<Scalar> zero_element(const GradedAlgebra &A) {
  Vec<Scalar> v(static_cast<Eigen::Index>(A.dim()));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v[i] = Scalar(0);
  return v;
}

template <class Scalar>
bool element_is_zero(const Vec<Scalar> &v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!scalar_is_zero(v[i]))
      return false;
  return true;
}

inline void check_owner(const GradedAlgebra &A, Eigen::Index n) {
  if (static_cast<std::size_t>(n) != A.dim())
    throw AlgebraMismatchError("element has " + std::to_string(n) +
                               " coordinates but the algebra has dimension " +
                               std::to_string(A.dim()));
}

/// Bilinear product from the structure constants.
template <class Scalar>
Vec<Scalar> multiply(const GradedAlgebra &A, const Vec<Scalar> &a,
                     const Vec<Scalar> &b) {
  check_owner(A, a.size());
  check_owner(A, b.size());
  Vec<Scalar> r = zero_element<Scalar>(A);
  const std::size_t n = A.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (scalar_is_zero(a[i]))
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (scalar_is_zero(b[j]))
        continue;
      const Product &p = A.product(i, j);
      if (p.empty())
        continue;
      Scalar ab = a[i] * b[j];
      for (const auto &t : p)
        r[t.index] += ab * Scalar(t.coeff);
    }
  }
  return r;
}

/// a * e_j without forming e_j.
template <class Scalar>
Vec<Scalar> multiply_right_basis(const GradedAlgebra &A, const Vec<Scalar> &a,
                                 std::size_t j) {
  Vec<Scalar> r = zero_element<Scalar>(A);
  for (std::size_t i = 0; i < A.dim(); ++i) {
    if (scalar_is_zero(a[i]))
      continue;
    for (const auto &t : A.product(i, j))
      r[t.index] += a[i] * Scalar(t.coeff);
  }
  return r;
}

/// e_i * a without forming e_i.
template <class Scalar>
Vec<Scalar> multiply_left_basis(const GradedAlgebra &A, std::size_t i,
                                const Vec<Scalar> &a) {
  Vec<Scalar> r = zero_element<Scalar>(A);
  for (std::size_t j = 0; j < A.dim(); ++j) {
    if (scalar_is_zero(a[j]))
      continue;
    for (const auto &t : A.product(i, j))
      r[t.index] += a[j] * Scalar(t.coeff);
  }
  return r;
}

template <class Scalar>
Vec<Scalar> commutator(const GradedAlgebra &A, const Vec<Scalar> &a,
                       const Vec<Scalar> &b) {
  Vec<Scalar> r = multiply(A, a, b);
  r -= multiply(A, b, a);
  return r;
}

VecQ basis_vector(const GradedAlgebra &A, std::size_t i);
VecQ product_vector(const GradedAlgebra &A, std::size_t i, std::size_t j);

/// Indices of the basis elements of degree `xi`.
std::vector<std::size_t> component_basis(const GradedAlgebra &A,
                                         const GroupElement &xi);
VecQ homogeneous_component(const GradedAlgebra &A, const VecQ &a,
                           const GroupElement &xi);
bool is_homogeneous_of(const GradedAlgebra &A, const VecQ &a,
                       const GroupElement &xi);
/// Degrees with a nonzero component, sorted.
std::vector<GroupElement> support(const GradedAlgebra &A);
std::map<GroupElement, std::vector<std::size_t>>
component_table(const GradedAlgebra &A);

struct ValidationReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks indices, degrees, the grading law, associativity on all basis
/// triples and the unit. Reports at most `limit` violations per category.
ValidationReport validate(const GradedAlgebra &A, std::size_t limit = 20);

/// Throws InvalidInputError with the first violations when invalid.
void require_valid(const GradedAlgebra &A);

GradedAlgebra direct_product(const GradedAlgebra &A, const GradedAlgebra &B);

/// Human-readable element such as `E11 - E22` or `2*e12`.
std::string element_to_string(const GradedAlgebra &A, const VecQ &v);

} // namespace gpw
