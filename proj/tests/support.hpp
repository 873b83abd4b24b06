#pragma once

#include "gpw/algebra.hpp"
#include "gpw/linalg.hpp"
#include "gpw/rational.hpp"

#include <random>
#include <vector>

namespace testing {

inline gpw::Rational random_rational(std::mt19937 &rng, int range = 5,
                                     int den = 3) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> d(1, den);
  return gpw::Rational(num(rng), d(rng));
}

inline gpw::VecQ random_element(const gpw::GradedAlgebra &A, std::mt19937 &rng,
                                int range = 3) {
  gpw::VecQ v = gpw::zero_vector(static_cast<Eigen::Index>(A.dim()));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v[i] = random_rational(rng, range, 2);
  return v;
}

/// Random element of the component of degree xi.
inline gpw::VecQ random_homogeneous(const gpw::GradedAlgebra &A,
                                    const gpw::GroupElement &xi,
                                    std::mt19937 &rng) {
  gpw::VecQ v = gpw::zero_vector(static_cast<Eigen::Index>(A.dim()));
  for (std::size_t i : gpw::component_basis(A, xi))
    v[static_cast<Eigen::Index>(i)] = random_rational(rng, 3, 2);
  return v;
}

/// k x k unit matrix E_ij (1-based).
inline gpw::MatQ matrix_unit(int k, int i, int j) {
  gpw::MatQ m(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c)
      m(r, c) = gpw::Rational(0);
  m(i - 1, j - 1) = gpw::Rational(1);
  return m;
}

} // namespace testing
