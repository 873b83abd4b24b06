#pragma once

#include "gpw/rational.hpp"

#include <Eigen/Core>

#include <vector>

namespace gpw {

template <class Scalar> using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VecQ = Vec<Rational>;
using MatQ = Mat<Rational>;

VecQ zero_vector(Eigen::Index n);
VecQ unit_vector(Eigen::Index n, Eigen::Index i);
bool is_zero(const VecQ &v);

/// Linear subspace of Q^n kept in reduced row echelon form. Rows are sorted by
/// pivot column and every pivot is 1 with zeros above and below, so two equal
/// subspaces have identical rows.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(Eigen::Index ambient) : ambient_(ambient) {}

  static Subspace full(Eigen::Index ambient);
  static Subspace span(Eigen::Index ambient, const std::vector<VecQ> &vectors);

  Eigen::Index ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<VecQ> &rows() const { return rows_; }
  const std::vector<Eigen::Index> &pivots() const { return pivots_; }

  /// Residual of `v` after elimination against the rows.
  VecQ reduce(VecQ v) const;
  bool contains(const VecQ &v) const;
  /// Adds `v`; returns true when the dimension grew.
  bool insert(const VecQ &v);
  bool contains(const Subspace &other) const;

  MatQ matrix() const;

  friend bool operator==(const Subspace &a, const Subspace &b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ &&
           a.rows_ == b.rows_;
  }

private:
  Eigen::Index ambient_ = 0;
  std::vector<VecQ> rows_;
  std::vector<Eigen::Index> pivots_;
};

Subspace subspace_sum(const Subspace &a, const Subspace &b);
Subspace intersection(const Subspace &a, const Subspace &b);

/// { x : m * x = 0 } as a subspace of Q^{m.cols()}.
Subspace nullspace(const MatQ &m);
/// Same, with the constraints given as a list of rows.
Subspace nullspace(Eigen::Index cols, const std::vector<VecQ> &constraints);

} // namespace gpw
