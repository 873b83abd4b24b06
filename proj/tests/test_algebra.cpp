#include "doctest.h"

#include "gpw/constructions.hpp"
#include "gpw/error.hpp"
#include "gpw/structure.hpp"

#include "support.hpp"

#include <map>
#include <set>

using namespace gpw;

namespace {

// Coordinates of a 2x2 matrix in the basis I, E11-E22, E12+E21, E12-E21.
VecQ pauli_coords(const MatQ &m) {
  VecQ v = zero_vector(4);
  v[0] = (m(0, 0) + m(1, 1)) / Rational(2);
  v[1] = (m(0, 0) - m(1, 1)) / Rational(2);
  v[2] = (m(0, 1) + m(1, 0)) / Rational(2);
  v[3] = (m(0, 1) - m(1, 0)) / Rational(2);
  return v;
}

std::vector<MatQ> pauli_matrices() {
  using testing::matrix_unit;
  return {matrix_unit(2, 1, 1) + matrix_unit(2, 2, 2),
          matrix_unit(2, 1, 1) - matrix_unit(2, 2, 2),
          matrix_unit(2, 1, 2) + matrix_unit(2, 2, 1),
          matrix_unit(2, 1, 2) - matrix_unit(2, 2, 1)};
}

Cocycle klein_cocycle(int (*sign)(const GroupElement &, const GroupElement &)) {
  auto G = make_group({2, 2});
  Cocycle c;
  c.group = G;
  c.H = G.elements();
  for (const auto &a : c.H)
    for (const auto &b : c.H)
      c.table[{a, b}] = Rational(sign(a, b));
  return c;
}

// Structure constants of B relabelled through a bijection of basis indices.
bool same_structure(const GradedAlgebra &A, const GradedAlgebra &B,
                    const std::vector<std::size_t> &to_b) {
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      VecQ a = product_vector(A, i, j);
      VecQ b = product_vector(B, to_b[i], to_b[j]);
      for (std::size_t k = 0; k < A.dim(); ++k)
        if (a[k] != b[to_b[k]])
          return false;
    }
  return true;
}

std::size_t grassmann_index(const GradedAlgebra &E, const std::set<int> &s) {
  std::string label = "e";
  for (int i : s)
    label += std::to_string(i);
  auto idx = E.find_label(label);
  REQUIRE(idx.has_value());
  return *idx;
}

std::set<int> grassmann_set(const std::string &label) {
  std::set<int> s;
  for (std::size_t p = 1; p < label.size(); ++p)
    s.insert(label[p] - '0');
  return s;
}

std::vector<GradedAlgebra> corpus() {
  return {pauli_m2(),          quaternions(),      witness_w3(),
          nil_one_dim(),       grassmann(3),       grassmann(4),
          prop_3_28_family(2), example_3_16(),     example_3_18(),
          matrix_algebra(2),   triangular(3),      unitization(witness_w3())};
}

} // namespace

TEST_CASE("every built-in construction validates") {
  for (const auto &A : corpus()) {
    INFO(A.name());
    CHECK(validate(A).valid());
  }
}

TEST_CASE("matrix algebra agrees with matrix multiplication") {
  for (int k = 1; k <= 3; ++k) {
    auto A = matrix_algebra(static_cast<std::size_t>(k));
    REQUIRE(A.dim() == static_cast<std::size_t>(k * k));
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j)
        for (int r = 1; r <= k; ++r)
          for (int s = 1; s <= k; ++s) {
            MatQ m = testing::matrix_unit(k, i, j) * testing::matrix_unit(k, r, s);
            auto a = *A.find_label("E" + std::to_string(i) + std::to_string(j));
            auto b = *A.find_label("E" + std::to_string(r) + std::to_string(s));
            VecQ got = product_vector(A, a, b);
            for (int p = 1; p <= k; ++p)
              for (int q = 1; q <= k; ++q) {
                auto c =
                    *A.find_label("E" + std::to_string(p) + std::to_string(q));
                CHECK(got[static_cast<Eigen::Index>(c)] == m(p - 1, q - 1));
              }
          }
  }
}

TEST_CASE("pauli grading matches explicit 2x2 matrices") {
  auto P = pauli_m2();
  auto mats = pauli_matrices();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(product_vector(P, i, j) == pauli_coords(mats[i] * mats[j]));
  CHECK(P.degree(0) == GroupElement{0, 0});
  CHECK(P.degree(1) == GroupElement{1, 1});
  CHECK(P.degree(2) == GroupElement{0, 1});
  CHECK(P.degree(3) == GroupElement{1, 0});
}

TEST_CASE("pauli algebra is the twisted group algebra of its sign cocycle") {
  auto P = pauli_m2();
  // eta_g -> the basis element of degree g.
  auto sigma = klein_cocycle([](const GroupElement &a, const GroupElement &b) {
    return ((a.coords[0] + a.coords[1]) * b.coords[0]) % 2 ? -1 : 1;
  });
  validate_cocycle(sigma);
  auto T = twisted_group_algebra(sigma);
  std::vector<std::size_t> to_p(4);
  for (std::size_t i = 0; i < 4; ++i)
    to_p[i] = component_basis(P, T.degree(i)).front();
  CHECK(same_structure(T, P, to_p));

  // The built-in cocycle matches after the automorphism (i, j) -> (i, i + j).
  auto Q = twisted_group_algebra(pauli_cocycle());
  auto K = make_group({2, 2});
  for (std::size_t i = 0; i < 4; ++i) {
    const auto &d = Q.degree(i);
    GroupElement image = K.element({d.coords[0], d.coords[0] + d.coords[1]});

    to_p[i] = component_basis(P, image).front();
  }
  CHECK(same_structure(Q, P, to_p));
}

TEST_CASE("pauli cocycle follows its closed formula") {
  auto c = pauli_cocycle();
  validate_cocycle(c);
  for (const auto &a : c.H)
    for (const auto &b : c.H)
      CHECK(c(a, b) == Rational((a.coords[1] * b.coords[0]) % 2 ? -1 : 1));
}

TEST_CASE("quaternion multiplication table") {
  auto Qh = quaternions();
  auto id = [&](const char *l) { return *Qh.find_label(l); };
  auto prod = [&](const char *a, const char *b) {
    return product_vector(Qh, id(a), id(b));
  };
  auto e = [&](const char *l, int c) -> VecQ {
    return basis_vector(Qh, id(l)) * Rational(c);
  };
  CHECK(prod("i", "i") == e("1", -1));
  CHECK(prod("j", "j") == e("1", -1));
  CHECK(prod("k", "k") == e("1", -1));
  CHECK(prod("i", "j") == e("k", 1));
  CHECK(prod("j", "i") == e("k", -1));
  CHECK(prod("j", "k") == e("i", 1));
  CHECK(prod("k", "i") == e("j", 1));
  CHECK(prod("k", "j") == e("i", -1));
}

TEST_CASE("grassmann signs follow permutation parity") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto E = grassmann(n);
    CHECK(E.dim() == (std::size_t{1} << n) - 1);
    for (std::size_t a = 0; a < E.dim(); ++a)
      for (std::size_t b = 0; b < E.dim(); ++b) {
        auto S = grassmann_set(E.label(a)), T = grassmann_set(E.label(b));
        VecQ expected = zero_vector(static_cast<Eigen::Index>(E.dim()));
        bool disjoint = true;
        int inversions = 0;
        for (int s : S)
          for (int t : T) {
            if (s == t)
              disjoint = false;
            if (s > t)
              ++inversions;
          }
        if (disjoint) {
          std::set<int> U = S;
          U.insert(T.begin(), T.end());
          expected[static_cast<Eigen::Index>(grassmann_index(E, U))] =
              Rational(inversions % 2 ? -1 : 1);
        }
        CHECK(product_vector(E, a, b) == expected);
        CHECK(E.degree(a) == GroupElement{static_cast<int>(S.size() % 2)});
      }
  }
}

TEST_CASE("example-3-16 component table") {
  auto B = example_3_16();
  std::map<std::string, std::set<std::string>> expected = {
      {"e", {"E11", "E22", "E33", "E44"}},
      {"(0,4)", {"E14", "E31"}},
      {"(2,0)", {"E21"}},
      {"(0,1)", {"E13", "E41"}},
      {"(1,0)", {"E12"}},
      {"(2,1)", {"E23"}},
      {"(0,2)", {"E43"}},
      {"(1,1)", {"E42"}},
      {"(2,4)", {"E24"}},
      {"(0,3)", {"E34"}},
      {"(1,4)", {"E32"}}};
  std::map<std::string, std::set<std::string>> got;
  for (const auto &[xi, idx] : component_table(B))
    for (auto i : idx)
      got[to_string(xi)].insert(B.label(i));
  CHECK(got == expected);
  CHECK(support(B).size() == 11);
}

TEST_CASE("elementary gradings follow theta_j - theta_i") {
  auto G = make_group({3, 5});
  for (const auto &theta : {example_3_16_theta(), example_3_18_theta()}) {
    auto B = elementary_matrix_grading(G, theta);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        auto idx = *B.find_label("E" + std::to_string(i) + std::to_string(j));
        CHECK(B.degree(idx) == G.sub(theta[j - 1], theta[i - 1]));
      }
  }
  auto B = example_3_18();
  std::set<std::string> c14;
  for (auto i : component_basis(B, GroupElement{1, 4}))
    c14.insert(B.label(i));
  CHECK(c14 == std::set<std::string>{"E32", "E42"});
}

TEST_CASE("elementary canonical algebras obey the degree law") {
  auto G = make_group({2, 2});
  auto H = subgroup_generated(G, {GroupElement{1, 0}});
  auto A = elementary_canonical(G, trivial_cocycle(H),
                                {G.identity(), GroupElement{0, 1}});
  CHECK(A.dim() == 8);
  CHECK(validate(A).valid());
  REQUIRE(A.canonical().has_value());
  const auto &cd = *A.canonical();
  for (std::size_t b = 0; b < A.dim(); ++b) {
    auto [i, j, h] = cd.decode(b);
    CHECK(A.degree(b) ==
          G.add(G.sub(cd.theta[j], cd.theta[i]), cd.H[h]));
  }
  CHECK(support(A).size() == 4);
}

TEST_CASE("invalid cocycles are rejected") {
  auto c = pauli_cocycle();
  c.table[{GroupElement{1, 0}, GroupElement{0, 1}}] = Rational(2);
  CHECK_THROWS_AS(validate_cocycle(c), InvalidCocycleError);
  auto z = pauli_cocycle();
  z.table[{GroupElement{1, 1}, GroupElement{1, 1}}] = Rational(0);
  CHECK_THROWS_AS(validate_cocycle(z), InvalidCocycleError);
}

TEST_CASE("coboundary cocycles give algebras isomorphic to the group algebra") {
  auto G = make_group({4});
  auto H = subgroup_generated(G, {GroupElement{1}});
  std::map<GroupElement, Rational> t;
  for (const auto &h : H.elements())
    t[h] = Rational(h.coords[0] + 1);
  auto c = cocycle_from_coboundary(H, t);
  validate_cocycle(c);
  for (const auto &a : H.elements())
    for (const auto &b : H.elements())
      CHECK(c(a, b) == t[a] * t[b] / t[G.add(a, b)]);
  CHECK(validate(twisted_group_algebra(c)).valid());
}

TEST_CASE("validate reports grading and associativity violations") {
  auto G = make_group({2});
  GradedAlgebra A(G, {"a", "b"}, {GroupElement{1}, GroupElement{1}});
  A.add_product_term(0, 0, 1, Rational(1));
  auto r = validate(A);
  CHECK_FALSE(r.valid());
  CHECK_THROWS_AS(require_valid(A), InvalidInputError);

  GradedAlgebra N(make_group({}), {"a", "b"}, {GroupElement{}, GroupElement{}});
  N.add_product_term(0, 0, 1, Rational(1));
  N.add_product_term(0, 1, 0, Rational(1));
  CHECK_FALSE(validate(N).valid());
}

TEST_CASE("elements of the wrong length are rejected") {
  auto P = pauli_m2();
  CHECK_THROWS_AS(multiply(P, zero_vector(3), zero_vector(4)),
                  AlgebraMismatchError);
}

TEST_CASE("proposition family supports and central neutral component") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto A = prop_3_28_family(n);
    CHECK(A.dim() == 4 + n);
    CHECK(support(A).size() == n + 4);
    CHECK(neutral_component_central(A));
    CHECK(validate(A).valid());
  }
}

TEST_CASE("products, unitization, coarsening and regrading") {
  auto W = witness_w3();
  auto P = direct_product(W, triangular(3));
  CHECK(P.dim() == 9);
  CHECK(validate(P).valid());
  CHECK_THROWS_AS(direct_product(W, pauli_m2()), AlgebraMismatchError);
  auto U = unitization(W);
  CHECK(U.dim() == 4);
  CHECK(U.unit() == std::optional<std::size_t>(0));
  auto G = make_group({3});
  auto q = quotient(G, subgroup_generated(G, {GroupElement{1}}));
  auto C = coarsen(W, q);
  CHECK(support(C).size() == 1);
  CHECK(validate(C).valid());
  CHECK_THROWS_AS(regraded(W, make_group({3}),
                           {GroupElement{1}, GroupElement{1}, GroupElement{0}}),
                  InvalidInputError);
}

TEST_CASE("nilpotency, centers and Lie series") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(nilpotency_index(grassmann(n)) == std::optional<std::size_t>(n + 1));
    CHECK(is_lie_nilpotent(grassmann(n)));
  }
  CHECK(nilpotency_index(nil_one_dim()) == std::optional<std::size_t>(2));
  CHECK_FALSE(nilpotency_index(matrix_algebra(2)).has_value());
  for (std::size_t k = 1; k <= 3; ++k)
    CHECK(center(matrix_algebra(k)).dim() == 1);
  CHECK(center(quaternions()).dim() == 1);
  CHECK(center(witness_w3()).dim() == 1);
  CHECK_FALSE(is_lie_solvable(quaternions()));
  CHECK(is_lie_solvable(triangular(3)));
  CHECK_FALSE(is_lie_nilpotent(triangular(2)));
  CHECK(commutator_ideal_nilpotency(witness_w3()).has_value());
  CHECK_FALSE(commutator_ideal_nilpotency(quaternions()).has_value());
}

TEST_CASE("ideal closure is an ideal containing its seed") {
  auto T = triangular(3);
  Subspace seed(static_cast<Eigen::Index>(T.dim()));
  seed.insert(basis_vector(T, *T.find_label("E12")));
  auto I = ideal_closure(T, seed);
  CHECK(is_ideal(T, I));
  CHECK(I.contains(seed));
  CHECK(is_graded_subspace(T, I));
  CHECK(I.dim() == 2);
}

TEST_CASE("jacobson radical on known algebras") {
  for (std::size_t k = 1; k <= 3; ++k)
    CHECK(jacobson_radical(matrix_algebra(k)).is_zero());
  CHECK(jacobson_radical(quaternions()).is_zero());
  for (std::size_t k = 2; k <= 4; ++k) {
    auto T = triangular(k);
    std::vector<VecQ> strict;
    for (std::size_t b = 0; b < T.dim(); ++b)
      if (T.label(b)[1] != T.label(b)[2])
        strict.push_back(basis_vector(T, b));
    CHECK(jacobson_radical(T) ==
          Subspace::span(static_cast<Eigen::Index>(T.dim()), strict));
  }
  CHECK(jacobson_radical(grassmann(3)).dim() == 7);
  auto W = unitization(witness_w3());
  CHECK(jacobson_radical(W).dim() == 3);
}
