#include "doctest.h"

#include "gpw/linalg.hpp"

#include "support.hpp"

#include <algorithm>
#include <random>

using namespace gpw;

namespace {

// Rank by straightforward elimination on a copy, kept separate from Subspace.
Eigen::Index reference_rank(MatQ m) {
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < m.cols() && rank < m.rows(); ++c) {
    Eigen::Index p = rank;
    while (p < m.rows() && m(p, c).is_zero())
      ++p;
    if (p == m.rows())
      continue;
    m.row(rank).swap(m.row(p));
    for (Eigen::Index r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c).is_zero())
        continue;
      Rational f = m(r, c) / m(rank, c);
      for (Eigen::Index k = c; k < m.cols(); ++k)
        m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

MatQ random_matrix(std::mt19937 &rng, Eigen::Index rows, Eigen::Index cols) {
  std::uniform_int_distribution<int> v(-2, 2), zero(0, 2);
  MatQ m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = zero(rng) == 0 ? Rational(0) : Rational(v(rng));
  // Low-rank rows now and then.
  if (rows > 2 && zero(rng) == 0)
    m.row(rows - 1) = m.row(0) * Rational(3) - m.row(1);
  return m;
}

std::vector<VecQ> rows_of(const MatQ &m) {
  std::vector<VecQ> out;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    out.push_back(m.row(r).transpose());
  return out;
}

} // namespace

TEST_CASE("nullspace vectors are annihilated and have the right dimension") {
  std::mt19937 rng(31);
  for (int t = 0; t < 150; ++t) {
    Eigen::Index rows = 1 + t % 5, cols = 1 + (t / 5) % 6;
    MatQ m = random_matrix(rng, rows, cols);
    Subspace N = nullspace(m);
    CHECK(static_cast<Eigen::Index>(N.dim()) == cols - reference_rank(m));
    for (const auto &v : N.rows())
      CHECK(is_zero(m * v));
    CHECK(N == nullspace(cols, rows_of(m)));
  }
}

TEST_CASE("span is in reduced row echelon form and canonical") {
  std::mt19937 rng(32);
  for (int t = 0; t < 100; ++t) {
    MatQ m = random_matrix(rng, 4, 5);
    auto gens = rows_of(m);
    Subspace S = Subspace::span(5, gens);
    CHECK(static_cast<Eigen::Index>(S.dim()) == reference_rank(m));
    for (const auto &g : gens)
      CHECK(S.contains(g));
    for (std::size_t i = 0; i < S.dim(); ++i) {
      CHECK(S.rows()[i][S.pivots()[i]] == Rational(1));
      for (std::size_t j = 0; j < S.dim(); ++j)
        if (j != i)
          CHECK(S.rows()[j][S.pivots()[i]].is_zero());
      if (i > 0)
        CHECK(S.pivots()[i - 1] < S.pivots()[i]);
    }

    // Rescaled and shuffled generators give the identical object.
    std::vector<VecQ> other = gens;
    std::shuffle(other.begin(), other.end(), rng);
    for (auto &g : other)
      g *= Rational(-5, 3);
    if (other.size() > 1)
      other[0] += other[1];
    CHECK(Subspace::span(5, other) == S);
  }
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  std::mt19937 rng(33);
  for (int t = 0; t < 100; ++t) {
    auto U = Subspace::span(5, rows_of(random_matrix(rng, 3, 5)));
    auto V = Subspace::span(5, rows_of(random_matrix(rng, 3, 5)));
    auto S = subspace_sum(U, V);
    auto I = intersection(U, V);
    CHECK(S.dim() + I.dim() == U.dim() + V.dim());
    CHECK(S.contains(U));
    CHECK(S.contains(V));
    CHECK(U.contains(I));
    CHECK(V.contains(I));
  }
}

TEST_CASE("reduce leaves a residual outside the pivots") {
  Subspace S(3);
  CHECK(S.insert(unit_vector(3, 0)));
  CHECK_FALSE(S.insert(unit_vector(3, 0) * Rational(2)));
  VecQ v = zero_vector(3);
  v[0] = 4;
  v[2] = 1;
  VecQ r = S.reduce(v);
  CHECK(r[0].is_zero());
  CHECK(r[2] == Rational(1));
  CHECK(Subspace::full(3).dim() == 3);
  CHECK(Subspace(3).is_zero());
}
