#include "gpw/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gpw {

std::size_t CanonicalData::h_index(const GroupElement &h) const {
  auto it = std::find(H.begin(), H.end(), h);
  if (it == H.end())
    throw InvalidInputError(to_string(h) + " is not in the cocycle subgroup");
  return static_cast<std::size_t>(it - H.begin());
}

const Rational &CanonicalData::sigma_at(const GroupElement &a,
                                        const GroupElement &b) const {
  auto it = sigma.find({a, b});
  if (it == sigma.end())
    throw InvalidCocycleError("cocycle has no value at (" + to_string(a) +
                              ", " + to_string(b) + ")");
  return it->second;
}

std::tuple<std::size_t, std::size_t, std::size_t>
CanonicalData::decode(std::size_t b) const {
  std::size_t h = b % H.size();
  std::size_t ij = b / H.size();
  return {ij / k, ij % k, h};
}

GradedAlgebra::GradedAlgebra(FiniteAbelianGroup group,
                             std::vector<std::string> labels,
                             std::vector<GroupElement> degrees)
    : group_(std::move(group)), labels_(std::move(labels)),
      degrees_(std::move(degrees)) {
  if (labels_.size() != degrees_.size())
    throw InvalidInputError("basis has " + std::to_string(labels_.size()) +
                            " labels but " + std::to_string(degrees_.size()) +
                            " degrees");
  for (const auto &d : degrees_)
    if (!group_.contains(d))
      throw GroupMismatchError("degree " + to_string(d) +
                               " is not an element of " + to_string(group_));
  table_.assign(labels_.size() * labels_.size(), Product{});
}

std::optional<std::size_t>
GradedAlgebra::find_label(const std::string &label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label)
      return i;
  return std::nullopt;
}

void GradedAlgebra::set_product(std::size_t i, std::size_t j, Product p) {
  if (i >= dim() || j >= dim())
    throw InvalidInputError("product index out of range");
  Product clean;
  std::sort(p.begin(), p.end(),
            [](const Term &a, const Term &b) { return a.index < b.index; });
  for (auto &t : p) {
    if (t.index >= dim())
      throw InvalidInputError("structure constant index " +
                              std::to_string(t.index) + " out of range");
    if (!clean.empty() && clean.back().index == t.index)
      clean.back().coeff += t.coeff;
    else
      clean.push_back(t);
    if (clean.back().coeff.is_zero())
      clean.pop_back();
  }
  table_[i * dim() + j] = std::move(clean);
}

void GradedAlgebra::add_product_term(std::size_t i, std::size_t j,
                                     std::size_t k, const Rational &c) {
  Product p = product(i, j);
  p.push_back({k, c});
  set_product(i, j, std::move(p));
}

void GradedAlgebra::regrade(FiniteAbelianGroup group,
                            std::vector<GroupElement> degrees) {
  if (degrees.size() != dim())
    throw InvalidInputError("regrading needs one degree per basis element");
  for (const auto &d : degrees)
    if (!group.contains(d))
      throw GroupMismatchError("degree " + to_string(d) +
                               " is not an element of " + to_string(group));
  group_ = std::move(group);
  degrees_ = std::move(degrees);
  canonical_.reset();
}

VecQ basis_vector(const GradedAlgebra &A, std::size_t i) {
  return unit_vector(static_cast<Eigen::Index>(A.dim()),
                     static_cast<Eigen::Index>(i));
}

VecQ product_vector(const GradedAlgebra &A, std::size_t i, std::size_t j) {
  VecQ v = zero_element<Rational>(A);
  for (const auto &t : A.product(i, j))
    v[t.index] = t.coeff;
  return v;
}

std::vector<std::size_t> component_basis(const GradedAlgebra &A,
                                         const GroupElement &xi) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (A.degree(i) == xi)
      out.push_back(i);
  return out;
}

VecQ homogeneous_component(const GradedAlgebra &A, const VecQ &a,
                           const GroupElement &xi) {
  check_owner(A, a.size());
  VecQ r = zero_element<Rational>(A);
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (A.degree(i) == xi)
      r[i] = a[i];
  return r;
}

bool is_homogeneous_of(const GradedAlgebra &A, const VecQ &a,
                       const GroupElement &xi) {
  check_owner(A, a.size());
  for (std::size_t i = 0; i < A.dim(); ++i)
    if (!a[i].is_zero() && !(A.degree(i) == xi))
      return false;
  return true;
}

std::vector<GroupElement> support(const GradedAlgebra &A) {
  std::set<GroupElement> s(A.degrees().begin(), A.degrees().end());
  return {s.begin(), s.end()};
}

std::map<GroupElement, std::vector<std::size_t>>
component_table(const GradedAlgebra &A) {
  std::map<GroupElement, std::vector<std::size_t>> t;
  for (std::size_t i = 0; i < A.dim(); ++i)
    t[A.degree(i)].push_back(i);
  return t;
}

namespace {

using Sparse = std::map<std::size_t, Rational>;

Sparse times_basis(const GradedAlgebra &A, const Sparse &a, std::size_t k,
                   bool right) {
  Sparse r;
  for (const auto &[i, c] : a) {
    const Product &p = right ? A.product(i, k) : A.product(k, i);
    for (const auto &t : p) {
      auto &slot = r[t.index];
      slot += c * t.coeff;
    }
  }
  for (auto it = r.begin(); it != r.end();)
    it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

Sparse to_sparse(const Product &p) {
  Sparse s;
  for (const auto &t : p)
    s.emplace(t.index, t.coeff);
  return s;
}

} // namespace

ValidationReport validate(const GradedAlgebra &A, std::size_t limit) {
  ValidationReport rep;
  const std::size_t n = A.dim();
  const auto &G = A.group();

  std::size_t grading = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      GroupElement want = G.add(A.degree(i), A.degree(j));
      for (const auto &t : A.product(i, j))
        if (!(A.degree(t.index) == want) && grading++ < limit)
          rep.violations.push_back(
              "grading law: " + A.label(i) + " * " + A.label(j) +
              " has a component on " + A.label(t.index) + " of degree " +
              to_string(A.degree(t.index)) + ", expected " + to_string(want));
    }

  std::size_t assoc = 0;
  std::vector<Sparse> rows(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rows[i * n + j] = to_sparse(A.product(i, j));
  for (std::size_t i = 0; i < n && assoc < limit; ++i)
    for (std::size_t j = 0; j < n && assoc < limit; ++j)
      for (std::size_t k = 0; k < n && assoc < limit; ++k) {
        Sparse lhs = times_basis(A, rows[i * n + j], k, true);
        Sparse rhs = times_basis(A, rows[j * n + k], i, false);
        if (lhs != rhs) {
          ++assoc;
          rep.violations.push_back("associativity: (" + A.label(i) + " " +
                                   A.label(j) + ") " + A.label(k) + " != " +
                                   A.label(i) + " (" + A.label(j) + " " +
                                   A.label(k) + ")");
        }
      }

  if (A.unit()) {
    std::size_t u = *A.unit();
    if (u >= n) {
      rep.violations.push_back("unit index out of range");
    } else {
      if (!A.degree(u).is_identity())
        rep.violations.push_back("unit " + A.label(u) +
                                 " is not of neutral degree");
      std::size_t bad = 0;
      for (std::size_t i = 0; i < n && bad < limit; ++i) {
        Product want{{i, Rational(1)}};
        if (A.product(u, i) != want || A.product(i, u) != want) {
          ++bad;
          rep.violations.push_back("unit: " + A.label(u) +
                                   " is not a two-sided identity on " +
                                   A.label(i));
        }
      }
    }
  }
  return rep;
}

void require_valid(const GradedAlgebra &A) {
  auto rep = validate(A, 3);
  if (!rep.valid()) {
    std::string msg = "algebra " + A.name() + " is invalid:";
    for (const auto &v : rep.violations)
      msg += " " + v + ";";
    throw InvalidInputError(msg);
  }
}

GradedAlgebra direct_product(const GradedAlgebra &A, const GradedAlgebra &B) {
  if (!(A.group() == B.group()))
    throw AlgebraMismatchError("direct product needs a common grading group, "
                               "got " +
                               to_string(A.group()) + " and " +
                               to_string(B.group()));
  auto labels = A.labels();
  labels.insert(labels.end(), B.labels().begin(), B.labels().end());
  auto degrees = A.degrees();
  degrees.insert(degrees.end(), B.degrees().begin(), B.degrees().end());
  GradedAlgebra P(A.group(), labels, degrees);
  const std::size_t na = A.dim(), nb = B.dim();
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      P.set_product(i, j, A.product(i, j));
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      Product p = B.product(i, j);
      for (auto &t : p)
        t.index += na;
      P.set_product(na + i, na + j, std::move(p));
    }
  P.set_name(A.name() + "x" + B.name());
  return P;
}

std::string element_to_string(const GradedAlgebra &A, const VecQ &v) {
  check_owner(A, v.size());
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const Rational &c = v[i];
    if (c.is_zero())
      continue;
    if (!first)
      os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0)
      os << "-";
    first = false;
    Rational a = abs(c);
    if (a != Rational(1))
      os << a << "*";
    os << A.label(i);
  }
  if (first)
    os << "0";
  return os.str();
}

} // namespace gpw
