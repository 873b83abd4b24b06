#include "doctest.h"

#include "gpw/constructions.hpp"
#include "gpw/error.hpp"
#include "gpw/identity.hpp"
#include "gpw/structure.hpp"
#include "gpw/suites.hpp"

#include "support.hpp"

#include <random>

using namespace gpw;

namespace {

GradedPolynomial random_polynomial(const GradedAlgebra &A, std::mt19937 &rng,
                                   bool ungraded) {
  auto G = ungraded ? make_group({}) : A.group();
  auto sup = ungraded ? std::vector<GroupElement>{G.identity()} : support(A);
  std::uniform_int_distribution<std::size_t> deg(1, 3), pick(0, sup.size() - 1);
  std::uniform_int_distribution<unsigned> idx(1, 3);
  std::uniform_int_distribution<int> terms(1, 3), coef(-2, 2);
  // One degree per index, so repeated indices repeat the same variable.
  std::vector<GroupElement> deg_of(4);
  for (auto &d : deg_of)
    d = sup[pick(rng)];
  GradedPolynomial p(G);
  for (int t = terms(rng); t > 0; --t) {
    GradedMonomial m;
    for (std::size_t k = deg(rng); k > 0; --k) {
      unsigned i = idx(rng);
      m.push_back({i, deg_of[i]});
    }
    int c = coef(rng);
    p.add_term(m, Rational(c == 0 ? 1 : c));
  }
  return p;
}

void check_witness(const GradedAlgebra &A, const Verdict &v) {
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness.has_value());
  std::map<GradedVariable, VecQ> vals(v.witness->assignment.begin(),
                                      v.witness->assignment.end());
  VecQ value = evaluate_unchecked(v.witness->polynomial, A, vals);
  CHECK(value == v.witness->value);
  CHECK_FALSE(is_zero(value));
}

} // namespace

TEST_CASE("small graded identities of the pauli grading") {
  auto P = pauli_m2();
  auto K = P.group();
  CHECK(is_graded_identity(P, parse_polynomial("[x1@e,x2@e]", K)).holds);
  CHECK(is_graded_identity(
            P, parse_polynomial("x1@(0,1) x2@(1,0) + x2@(1,0) x1@(0,1)", K))
            .holds);
  auto sq = is_graded_identity(P, parse_polynomial("x1@(1,0) x1@(1,0)", K));
  check_witness(P, sq);
  CHECK(sq.method == "basis-tuples");
}

TEST_CASE("quaternion commutator fails with value 2k") {
  auto Qh = quaternions();
  auto v = is_graded_identity(
      Qh, parse_polynomial("[x1@(0,1),x2@(1,0)]", Qh.group()));
  check_witness(Qh, v);
  CHECK(v.witness->value == basis_vector(Qh, *Qh.find_label("k")) * Rational(2));
}

TEST_CASE("witness is the first failing basis tuple") {
  auto M = matrix_algebra(2);
  auto v = is_graded_identity(M, left_normed(2));
  check_witness(M, v);
  // E11 and E12 are the first non-commuting pair in index order.
  REQUIRE(v.witness->assignment.size() == 2);
  CHECK(v.witness->assignment[0].second == basis_vector(M, 0));
  CHECK(v.witness->assignment[1].second == basis_vector(M, 1));
}

TEST_CASE("tuple engine agrees with the generic oracle") {
  std::mt19937 rng(77);
  std::vector<GradedAlgebra> algebras = {pauli_m2(), quaternions(),
                                         witness_w3(), grassmann(3),
                                         nil_one_dim(), triangular(2)};
  int identities = 0, failures = 0;
  for (const auto &A : algebras)
    for (int t = 0; t < 25; ++t) {
      auto g = random_polynomial(A, rng, t % 5 == 0);
      auto a = is_graded_identity(A, g);
      auto b = is_identity_generic(A, g);
      INFO(A.name(), " ", to_string(g));
      CHECK(a.holds == b.holds);
      if (!a.holds) {
        check_witness(A, a);
        check_witness(A, b);
      }
      (a.holds ? identities : failures)++;
    }
  CHECK(identities > 0);
  CHECK(failures > 0);
}

TEST_CASE("identity holds iff every multilinear piece holds") {
  std::mt19937 rng(78);
  auto A = witness_w3();
  for (int t = 0; t < 40; ++t) {
    auto g = random_polynomial(A, rng, false);
    bool all = true;
    for (const auto &piece : multilinearize(g))
      all = all && is_graded_identity(A, piece).holds;
    CHECK(is_graded_identity(A, g).holds == all);
  }
}

TEST_CASE("structural routes agree with brute force") {
  std::vector<GradedAlgebra> algebras = {grassmann(3), witness_w3(),
                                         quaternions(), triangular(3),
                                         prop_3_28_family(1)};
  for (const auto &A : algebras)
    for (std::size_t n = 2; n <= 4; ++n) {
      auto s = left_normed_identity(A, n);
      CHECK(s.method == "structural:lower-central");
      CHECK(s.holds == is_graded_identity(A, left_normed(n)).holds);
      CHECK(check_identity(A, left_normed(n)).holds == s.holds);
      if (!s.holds)
        check_witness(A, s);
    }
  for (const auto &A : algebras)
    for (std::size_t d = 1; d <= 2; ++d) {
      auto s = commutator_product_identity(A, d);
      CHECK(s.holds ==
            is_graded_identity(A, product_of_commutators(d)).holds);
      if (!s.holds)
        check_witness(A, s);
    }
  CHECK_THROWS_AS(left_normed_identity(witness_w3(), 1), ContractError);
}

TEST_CASE("resource ceiling fails loudly") {
  EngineOptions tiny;
  tiny.max_evals = 10;
  CHECK_THROWS_AS(is_graded_identity(matrix_algebra(3), left_normed(3), tiny),
                  ResourceError);
  CHECK_THROWS_AS(is_identity_generic(matrix_algebra(3), left_normed(3), tiny),
                  ResourceError);
}

TEST_CASE("neutral centrality") {
  CHECK(is_neutral_central(pauli_m2()));
  CHECK(is_neutral_central(quaternions()));
  CHECK(is_neutral_central(witness_w3()));
  CHECK_FALSE(is_neutral_central(example_3_18()));
  CHECK(is_neutral_central(pauli_m2()) == neutral_component_central(pauli_m2()));
  CHECK(is_neutral_central(example_3_16()) ==
        neutral_component_central(example_3_16()));
}

TEST_CASE("multilinear identity search returns identities only") {
  auto Qh = quaternions();
  auto space = find_multilinear_identities(
      Qh, {GroupElement{0, 1}, GroupElement{1, 0}}, 2);
  REQUIRE(space.basis.size() == 1);
  CHECK(is_graded_identity(Qh, space.basis.front()).holds);
  // The basis vector is a multiple of x1 x2 + x2 x1.
  const auto &terms = space.basis.front().terms();
  REQUIRE(terms.size() == 2);
  CHECK(terms.begin()->second == std::next(terms.begin())->second);

  auto M = matrix_algebra(2);
  auto none = find_multilinear_identities(M, {GroupElement{}, GroupElement{}}, 2);
  CHECK(none.basis.empty());
  CHECK(none.monomials.size() == 2);
  auto w = find_multilinear_identities(witness_w3(),
                                       {GroupElement{1}, GroupElement{1}}, 2);
  CHECK(w.basis.size() == 2);
  for (const auto &p : w.basis)
    CHECK(is_graded_identity(witness_w3(), p).holds);
}

TEST_CASE("degree-2 canonical form of the worked example") {
  auto B = example_3_16();
  auto g = example_3_16_polynomial();
  REQUIRE(is_graded_identity(B, g).holds);
  auto c = degree2_canonicalize(B, g);
  CHECK(c.reconstructed_holds);
  CHECK(is_graded_identity(B, c.reconstructed).holds);
  CHECK(reconstruct(c) == c.reconstructed);
  auto fg = example_3_16_fg();
  std::size_t nonzero = 0;
  for (const auto &[k, v] : fg.values)
    if (!v.is_zero())
      ++nonzero;
  CHECK(nonzero == 5);
  CHECK(fg.at(GroupElement{1, 0}, GroupElement{0, 2}) == Rational(1));
  CHECK(fg.at(GroupElement{0, 2}, GroupElement{1, 0}) == Rational(1));
  CHECK(fg.at(GroupElement{2, 0}, GroupElement{1, 1}) == Rational(1));
  CHECK(fg.at(GroupElement{2, 1}, GroupElement{1, 1}) == Rational(1));
  CHECK(fg.at(GroupElement{0, 0}, GroupElement{0, 0}) == Rational(1));
}

TEST_CASE("degree-2 canonicalization rejects non-identities") {
  auto P = pauli_m2();
  auto g = parse_polynomial("x1@(1,0) x1@(1,0)", P.group());
  CHECK_THROWS_AS(degree2_canonicalize(P, g), NotAnIdentityError);
  auto ok = degree2_canonicalize(
      P, parse_polynomial("x1@(0,1) x2@(1,0) + x2@(1,0) x1@(0,1)", P.group()));
  CHECK(ok.reconstructed_holds);
}

TEST_CASE("one-sided pair on the nilpotent line") {
  auto N = nil_one_dim();
  auto c = degree2_canonicalize(N, parse_polynomial("x1@(1) x2@(1)", N.group()));
  CHECK(c.reconstructed_holds);
  REQUIRE(c.pairs.size() == 1);
  CHECK(c.pairs.front().kind == "f(xi,zeta) != 0 and f(zeta,xi) = 0");
}

TEST_CASE("sigma bracket matches its defining formula") {
  auto G = make_group({2, 2});
  auto K = subgroup_generated(G, {GroupElement{1, 0}, GroupElement{0, 1}});
  Cocycle sigma = pauli_cocycle();
  auto B = elementary_canonical(G, sigma, {G.identity()});
  const auto &cd = *B.canonical();
  for (std::size_t x = 0; x < B.dim(); ++x)
    for (std::size_t y = 0; y < B.dim(); ++y) {
      auto [i, j, a] = cd.decode(x);
      auto [r, s, b] = cd.decode(y);
      const auto &ha = cd.H[a], &hb = cd.H[b];
      VecQ expected = product_vector(B, x, y) / sigma(ha, hb) -
                      product_vector(B, y, x) / sigma(hb, ha);
      CHECK(sigma_bracket(B, basis_vector(B, x), basis_vector(B, y)) ==
            expected);
      CHECK(is_zero(expected));
    }
  for (const auto &xi : K.elements())
    for (const auto &zeta : K.elements())
      CHECK(sigma_identity_check(B, xi, zeta).holds);
}

TEST_CASE("describe mentions component, assignment and value") {
  auto Qh = quaternions();
  auto v = is_graded_identity(
      Qh, parse_polynomial("[x1@(0,1),x2@(1,0)]", Qh.group()));
  REQUIRE(v.witness);
  auto text = describe(Qh, *v.witness);
  CHECK(text.find("value = 2*k") != std::string::npos);
  CHECK(text.find("x1@(0,1) = i") != std::string::npos);
}
