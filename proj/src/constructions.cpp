#include "gpw/constructions.hpp"

#include <algorithm>
#include <bit>

namespace gpw {

const Rational &Cocycle::operator()(const GroupElement &a,
                                    const GroupElement &b) const {
  auto it = table.find({a, b});
  if (it == table.end())
    throw InvalidCocycleError("cocycle has no value at (" + to_string(a) +
                              ", " + to_string(b) + ")");
  return it->second;
}

void validate_cocycle(const Cocycle &c) {
  std::vector<GroupElement> H = c.H;
  std::sort(H.begin(), H.end());
  if (H.empty())
    throw InvalidCocycleError("cocycle subgroup is empty");
  for (const auto &a : H) {
    if (!c.group.contains(a))
      throw InvalidCocycleError(to_string(a) + " is not in " +
                                to_string(c.group));
    for (const auto &b : H)
      if (!std::binary_search(H.begin(), H.end(), c.group.add(a, b)))
        throw InvalidCocycleError("cocycle domain is not a subgroup");
  }
  for (const auto &a : H)
    for (const auto &b : H) {
      auto it = c.table.find({a, b});
      if (it == c.table.end())
        throw InvalidCocycleError("cocycle has no value at (" + to_string(a) +
                                  ", " + to_string(b) + ")");
      if (it->second.is_zero())
        throw InvalidCocycleError("cocycle vanishes at (" + to_string(a) +
                                  ", " + to_string(b) + ")");
    }
  for (const auto &a : H)
    for (const auto &b : H)
      for (const auto &x : H) {
        Rational lhs = c(a, b) * c(c.group.add(a, b), x);
        Rational rhs = c(b, x) * c(a, c.group.add(b, x));
        if (lhs != rhs)
          throw InvalidCocycleError(
              "cocycle identity fails at (" + to_string(a) + ", " +
              to_string(b) + ", " + to_string(x) + "): " + to_string(lhs) +
              " != " + to_string(rhs));
      }
}

Cocycle trivial_cocycle(const Subgroup &H) {
  Cocycle c{H.parent(), H.elements(), {}};
  for (const auto &a : c.H)
    for (const auto &b : c.H)
      c.table.emplace(std::make_pair(a, b), Rational(1));
  return c;
}

Cocycle cocycle_from_coboundary(const Subgroup &H,
                                const std::map<GroupElement, Rational> &t) {
  Cocycle c{H.parent(), H.elements(), {}};
  auto at = [&](const GroupElement &a) {
    auto it = t.find(a);
    if (it == t.end() || it->second.is_zero())
      throw InvalidCocycleError("coboundary needs a nonzero value at " +
                                to_string(a));
    return it->second;
  };
  for (const auto &a : c.H)
    for (const auto &b : c.H)
      c.table.emplace(std::make_pair(a, b),
                      at(a) * at(b) / at(c.group.add(a, b)));
  validate_cocycle(c);
  return c;
}

Cocycle pauli_cocycle() {
  FiniteAbelianGroup K({2, 2});
  Cocycle c{K, K.elements(), {}};
  for (const auto &a : c.H)
    for (const auto &b : c.H)
      c.table.emplace(std::make_pair(a, b),
                      Rational((a.coords[1] * b.coords[0]) % 2 ? -1 : 1));
  validate_cocycle(c);
  return c;
}

namespace {

std::string matrix_label(std::size_t i, std::size_t j, std::size_t k) {
  if (k <= 9)
    return "E" + std::to_string(i + 1) + std::to_string(j + 1);
  return "E" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

std::string eta_label(const GroupElement &h) {
  std::string s = "u_";
  if (h.is_identity())
    return s + "e";
  for (std::size_t i = 0; i < h.coords.size(); ++i) {
    if (i)
      s += "_";
    s += std::to_string(h.coords[i]);
  }
  return s;
}

void check_theta(const FiniteAbelianGroup &G, const ThetaTuple &theta) {
  if (theta.empty())
    throw InvalidInputError("theta tuple must have k >= 1 entries");
  for (const auto &t : theta)
    if (!G.contains(t))
      throw GroupMismatchError("theta entry " + to_string(t) +
                               " is not in " + to_string(G));
}

} // namespace

GradedAlgebra elementary_matrix_grading(const FiniteAbelianGroup &G,
                                        const ThetaTuple &theta) {
  check_theta(G, theta);
  const std::size_t k = theta.size();
  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      labels.push_back(matrix_label(i, j, k));
      degrees.push_back(G.sub(theta[j], theta[i]));
    }
  GradedAlgebra A(G, labels, degrees);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t s = 0; s < k; ++s)
        A.set_product(i * k + j, j * k + s, {{i * k + s, Rational(1)}});
  if (k == 1)
    A.set_unit(0);
  A.set_name("matrix" + std::to_string(k));
  return A;
}

GradedAlgebra twisted_group_algebra(const Cocycle &sigma) {
  return elementary_canonical(sigma.group, sigma,
                              {sigma.group.identity()});
}

GradedAlgebra elementary_canonical(const FiniteAbelianGroup &G,
                                   const Cocycle &sigma,
                                   const ThetaTuple &theta) {
  validate_cocycle(sigma);
  if (!(sigma.group == G))
    throw GroupMismatchError("cocycle lives on " + to_string(sigma.group) +
                             ", grading group is " + to_string(G));
  check_theta(G, theta);
  const std::size_t k = theta.size();
  const auto &H = sigma.H;
  const std::size_t m = H.size();
  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t h = 0; h < m; ++h) {
        std::string l;
        if (k > 1 || m == 1)
          l = matrix_label(i, j, k);
        if (m > 1)
          l += (l.empty() ? "" : ".") + eta_label(H[h]);
        labels.push_back(l);
        degrees.push_back(G.add(G.sub(theta[j], theta[i]), H[h]));
      }
  GradedAlgebra A(G, labels, degrees);
  CanonicalData meta;
  meta.k = k;
  meta.theta = theta;
  meta.H = H;
  meta.sigma = sigma.table;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t s = 0; s < k; ++s)
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < m; ++b) {
            std::size_t ab = meta.h_index(G.add(H[a], H[b]));
            A.set_product((i * k + j) * m + a, (j * k + s) * m + b,
                          {{(i * k + s) * m + ab, sigma(H[a], H[b])}});
          }
  std::size_t e = meta.h_index(G.identity());
  if (k == 1 && sigma(G.identity(), G.identity()) == Rational(1))
    A.set_unit(e);
  A.set_canonical(std::move(meta));
  A.set_name(k == 1 ? "twisted" : "canonical");
  return A;
}

GradedAlgebra pauli_m2() {
  FiniteAbelianGroup K({2, 2});
  GradedAlgebra A(K, {"I", "E11-E22", "E12+E21", "E12-E21"},
                  {K.identity(), GroupElement{1, 1}, GroupElement{0, 1},
                   GroupElement{1, 0}});
  const Rational one(1), neg(-1);
  for (std::size_t i = 0; i < 4; ++i) {
    A.set_product(0, i, {{i, one}});
    A.set_product(i, 0, {{i, one}});
  }
  // a = E11-E22, b = E12+E21, c = E12-E21
  A.set_product(1, 1, {{0, one}});
  A.set_product(2, 2, {{0, one}});
  A.set_product(3, 3, {{0, neg}});
  A.set_product(1, 2, {{3, one}});
  A.set_product(2, 1, {{3, neg}});
  A.set_product(1, 3, {{2, one}});
  A.set_product(3, 1, {{2, neg}});
  A.set_product(2, 3, {{1, neg}});
  A.set_product(3, 2, {{1, one}});
  A.set_unit(0);
  A.set_name("pauli-m2");
  return A;
}

GradedAlgebra quaternions() {
  FiniteAbelianGroup K({2, 2});
  GradedAlgebra A(K, {"1", "i", "j", "k"},
                  {K.identity(), GroupElement{0, 1}, GroupElement{1, 0},
                   GroupElement{1, 1}});
  const Rational one(1), neg(-1);
  for (std::size_t i = 0; i < 4; ++i) {
    A.set_product(0, i, {{i, one}});
    A.set_product(i, 0, {{i, one}});
  }
  for (std::size_t i = 1; i < 4; ++i)
    A.set_product(i, i, {{0, neg}});
  A.set_product(1, 2, {{3, one}});
  A.set_product(2, 1, {{3, neg}});
  A.set_product(2, 3, {{1, one}});
  A.set_product(3, 2, {{1, neg}});
  A.set_product(3, 1, {{2, one}});
  A.set_product(1, 3, {{2, neg}});
  A.set_unit(0);
  A.set_name("quaternion");
  return A;
}

GradedAlgebra witness_w3() {
  FiniteAbelianGroup Z3({3});
  GradedAlgebra A(Z3, {"u", "v", "w"},
                  {GroupElement{1}, GroupElement{2}, GroupElement{0}});
  A.set_product(0, 1, {{2, Rational(1)}});
  A.set_name("w3");
  return A;
}

GradedAlgebra nil_one_dim() {
  FiniteAbelianGroup Z2({2});
  GradedAlgebra A(Z2, {"x"}, {GroupElement{1}});
  A.set_name("nilspan");
  return A;
}

namespace {

std::vector<unsigned> grassmann_monomials(std::size_t n) {
  std::vector<unsigned> out;
  for (unsigned m = 1; m < (1u << n); ++m)
    out.push_back(m);
  std::stable_sort(out.begin(), out.end(), [](unsigned a, unsigned b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb)
      return pa < pb;
    // lexicographic on the sorted index lists
    for (unsigned x = a, y = b; x && y; x &= x - 1, y &= y - 1) {
      int la = std::countr_zero(x), lb = std::countr_zero(y);
      if (la != lb)
        return la < lb;
    }
    return false;
  });
  return out;
}

std::string grassmann_label(unsigned m, std::size_t n) {
  std::string s = "e";
  bool first = true;
  for (unsigned x = m; x; x &= x - 1) {
    if (!first && n > 9)
      s += "_";
    first = false;
    s += std::to_string(std::countr_zero(x) + 1);
  }
  return s;
}

/// Sign of w * w' as exterior monomials, 0 when they share a generator.
int grassmann_sign(unsigned a, unsigned b) {
  if (a & b)
    return 0;
  int inversions = 0;
  for (unsigned y = b; y; y &= y - 1) {
    int t = std::countr_zero(y);
    inversions += std::popcount(a >> (t + 1));
  }
  return inversions % 2 ? -1 : 1;
}

} // namespace

GradedAlgebra grassmann(std::size_t n) {
  if (n < 1 || n > 16)
    throw InvalidInputError("grassmann truncation must be in 1..16");
  FiniteAbelianGroup Z2({2});
  auto mons = grassmann_monomials(n);
  std::map<unsigned, std::size_t> pos;
  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    pos[mons[i]] = i;
    labels.push_back(grassmann_label(mons[i], n));
    degrees.push_back(GroupElement{std::popcount(mons[i]) % 2});
  }
  GradedAlgebra A(Z2, labels, degrees);
  for (std::size_t i = 0; i < mons.size(); ++i)
    for (std::size_t j = 0; j < mons.size(); ++j) {
      int s = grassmann_sign(mons[i], mons[j]);
      if (s != 0)
        A.set_product(i, j, {{pos[mons[i] | mons[j]], Rational(s)}});
    }
  A.set_name("grassmann:" + std::to_string(n));
  return A;
}

GradedAlgebra grassmann_envelope(const GradedAlgebra &A, std::size_t n) {
  const auto &f = A.group().factors();
  if (f.empty() || f.back() != 2)
    throw InvalidInputError("envelope input must be graded by a group whose "
                            "last factor is Z2, got " +
                            to_string(A.group()));
  if (n < 2)
    throw InvalidInputError("envelope truncation must be >= 2");
  FiniteAbelianGroup G(std::vector<int>(f.begin(), f.end() - 1));
  auto mons = grassmann_monomials(n);
  std::map<unsigned, std::size_t> mon_pos;
  for (std::size_t i = 0; i < mons.size(); ++i)
    mon_pos[mons[i]] = i;

  // pairs (a, w) with matching parity, ordered by a then w
  std::vector<std::pair<std::size_t, unsigned>> basis;
  std::map<std::pair<std::size_t, unsigned>, std::size_t> index;
  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
  for (std::size_t a = 0; a < A.dim(); ++a) {
    int parity = A.degree(a).coords.back();
    std::vector<int> g(A.degree(a).coords.begin(),
                       A.degree(a).coords.end() - 1);
    for (unsigned w : mons)
      if (std::popcount(w) % 2 == parity) {
        index[{a, w}] = basis.size();
        basis.emplace_back(a, w);
        labels.push_back(A.label(a) + "." + grassmann_label(w, n));
        degrees.push_back(GroupElement(g));
      }
  }
  GradedAlgebra E(G, labels, degrees);
  for (std::size_t x = 0; x < basis.size(); ++x)
    for (std::size_t y = 0; y < basis.size(); ++y) {
      auto [a, w] = basis[x];
      auto [b, v] = basis[y];
      int s = grassmann_sign(w, v);
      if (s == 0)
        continue;
      Product p;
      for (const auto &t : A.product(a, b)) {
        auto it = index.find({t.index, w | v});
        if (it == index.end())
          throw InvalidInputError("envelope input violates the grading law "
                                  "at " +
                                  A.label(a) + " * " + A.label(b));
        p.push_back({it->second, t.coeff * Rational(s)});
      }
      E.set_product(x, y, std::move(p));
    }
  E.set_name("envelope(" + A.name() + "," + std::to_string(n) + ")");
  return E;
}

GradedAlgebra prop_3_28_family(std::size_t n) {
  if (n < 1)
    throw InvalidInputError("prop328 family needs n >= 1");
  GradedAlgebra Q = quaternions();
  FiniteAbelianGroup G(std::vector<int>(n + 2, 2));
  std::vector<std::string> labels = Q.labels();
  std::vector<GroupElement> degrees;
  for (const auto &d : Q.degrees()) {
    std::vector<int> c(n + 2, 0);
    c[0] = d.coords[0];
    c[1] = d.coords[1];
    degrees.emplace_back(c);
  }
  for (std::size_t m = 1; m <= n; ++m) {
    labels.push_back("x" + std::to_string(m));
    std::vector<int> c(n + 2, 0);
    c[1 + m] = 1;
    degrees.emplace_back(c);
  }
  GradedAlgebra A(G, labels, degrees);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      A.set_product(i, j, Q.product(i, j));
  A.set_name("prop328:" + std::to_string(n));
  return A;
}

GradedAlgebra coarsen(const GradedAlgebra &A, const QuotientMap &projection) {
  if (!(projection.source == A.group()))
    throw InvalidInputError("projection is defined on " +
                            to_string(projection.source) +
                            " but the algebra is graded by " +
                            to_string(A.group()));
  std::vector<GroupElement> degrees;
  for (const auto &d : A.degrees())
    degrees.push_back(projection(d));
  GradedAlgebra B = A;
  B.regrade(projection.target, degrees);
  require_valid(B);
  B.set_name("coarsen(" + A.name() + ")");
  return B;
}

ThetaTuple example_3_16_theta() {
  return {GroupElement{0, 0}, GroupElement{1, 0}, GroupElement{0, 1},
          GroupElement{0, 4}};
}

ThetaTuple example_3_18_theta() {
  return {GroupElement{0, 0}, GroupElement{1, 0}, GroupElement{0, 1},
          GroupElement{0, 1}};
}

GradedAlgebra example_3_16() {
  auto A = elementary_matrix_grading(FiniteAbelianGroup({3, 5}),
                                     example_3_16_theta());
  A.set_name("example-3-16");
  return A;
}

GradedAlgebra example_3_18() {
  auto A = elementary_matrix_grading(FiniteAbelianGroup({3, 5}),
                                     example_3_18_theta());
  A.set_name("example-3-18");
  return A;
}

GradedAlgebra matrix_algebra(std::size_t k) {
  FiniteAbelianGroup trivial;
  auto A = elementary_matrix_grading(
      trivial, ThetaTuple(k, trivial.identity()));
  A.set_name("matrix:" + std::to_string(k));
  return A;
}

GradedAlgebra triangular(std::size_t k) {
  if (k < 1)
    throw InvalidInputError("triangular needs k >= 1");
  FiniteAbelianGroup Zk({static_cast<int>(k)});
  std::vector<std::string> labels;
  std::vector<GroupElement> degrees;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      pos[{i, j}] = labels.size();
      labels.push_back(matrix_label(i, j, k));
      degrees.push_back(Zk.element({static_cast<int>(j - i)}));
    }
  GradedAlgebra A(Zk, labels, degrees);
  for (auto [ij, x] : pos)
    for (auto [rs, y] : pos)
      if (ij.second == rs.first)
        A.set_product(x, y, {{pos[{ij.first, rs.second}], Rational(1)}});
  if (k == 1)
    A.set_unit(0);
  A.set_name("triangular:" + std::to_string(k));
  return A;
}

GradedAlgebra unitization(const GradedAlgebra &A) {
  std::vector<std::string> labels{"1"};
  labels.insert(labels.end(), A.labels().begin(), A.labels().end());
  std::vector<GroupElement> degrees{A.group().identity()};
  degrees.insert(degrees.end(), A.degrees().begin(), A.degrees().end());
  GradedAlgebra U(A.group(), labels, degrees);
  const std::size_t n = U.dim();
  for (std::size_t i = 0; i < n; ++i) {
    U.set_product(0, i, {{i, Rational(1)}});
    U.set_product(i, 0, {{i, Rational(1)}});
  }
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      Product p = A.product(i, j);
      for (auto &t : p)
        ++t.index;
      U.set_product(i + 1, j + 1, std::move(p));
    }
  U.set_unit(0);
  U.set_name("unitization(" + A.name() + ")");
  return U;
}

GradedAlgebra regraded(const GradedAlgebra &A, const FiniteAbelianGroup &G,
                       const std::vector<GroupElement> &degrees) {
  GradedAlgebra B = A;
  B.regrade(G, degrees);
  require_valid(B);
  return B;
}

GradedAlgebra zero_algebra(const FiniteAbelianGroup &G) {
  GradedAlgebra Z(G, {}, {});
  Z.set_name("zero");
  return Z;
}

} // namespace gpw
