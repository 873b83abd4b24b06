#include "gpw/linalg.hpp"

#include "gpw/error.hpp"

#include <algorithm>

namespace gpw {

VecQ zero_vector(Eigen::Index n) {
  VecQ v(n);
  for (Eigen::Index i = 0; i < n; ++i)
    v[i] = Rational(0);
  return v;
}

VecQ unit_vector(Eigen::Index n, Eigen::Index i) {
  VecQ v = zero_vector(n);
  v[i] = Rational(1);
  return v;
}

bool is_zero(const VecQ &v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v[i].is_zero())
      return false;
  return true;
}

Subspace Subspace::full(Eigen::Index ambient) {
  Subspace s(ambient);
  for (Eigen::Index i = 0; i < ambient; ++i) {
    s.rows_.push_back(unit_vector(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(Eigen::Index ambient,
                        const std::vector<VecQ> &vectors) {
  Subspace s(ambient);
  for (const auto &v : vectors)
    s.insert(v);
  return s;
}

namespace {

void axpy(VecQ &v, const Rational &c, const VecQ &row, Eigen::Index from) {
  for (Eigen::Index j = from; j < v.size(); ++j)
    if (!row[j].is_zero())
      v[j] -= c * row[j];
}

} // namespace

VecQ Subspace::reduce(VecQ v) const {
  if (v.size() != ambient_)
    throw ContractError("vector length " + std::to_string(v.size()) +
                        " does not match subspace ambient dimension " +
                        std::to_string(ambient_));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Eigen::Index p = pivots_[r];
    if (v[p].is_zero())
      continue;
    Rational c = v[p];
    axpy(v, c, rows_[r], p);
  }
  return v;
}

bool Subspace::contains(const VecQ &v) const { return gpw::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace &other) const {
  for (const auto &r : other.rows_)
    if (!contains(r))
      return false;
  return true;
}

bool Subspace::insert(const VecQ &v) {
  VecQ w = reduce(v);
  Eigen::Index p = 0;
  while (p < w.size() && w[p].is_zero())
    ++p;
  if (p == w.size())
    return false;
  Rational inv = rat_inv(w[p]);
  for (Eigen::Index j = p; j < w.size(); ++j)
    if (!w[j].is_zero())
      w[j] *= inv;
  for (auto &row : rows_)
    if (!row[p].is_zero()) {
      Rational c = row[p];
      axpy(row, c, w, p);
    }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(w));
  return true;
}

MatQ Subspace::matrix() const {
  MatQ m(static_cast<Eigen::Index>(rows_.size()), ambient_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    m.row(static_cast<Eigen::Index>(r)) = rows_[r].transpose();
  return m;
}

Subspace subspace_sum(const Subspace &a, const Subspace &b) {
  if (a.ambient() != b.ambient())
    throw ContractError("subspace ambient dimensions differ");
  Subspace s = a;
  for (const auto &r : b.rows())
    s.insert(r);
  return s;
}

Subspace intersection(const Subspace &a, const Subspace &b) {
  if (a.ambient() != b.ambient())
    throw ContractError("subspace ambient dimensions differ");
  // Solve sum_i x_i a_i = sum_j y_j b_j; the intersection is spanned by the
  // a-side combinations.
  const Eigen::Index n = a.ambient();
  const Eigen::Index da = static_cast<Eigen::Index>(a.dim());
  const Eigen::Index db = static_cast<Eigen::Index>(b.dim());
  std::vector<VecQ> constraints;
  for (Eigen::Index c = 0; c < n; ++c) {
    VecQ row = zero_vector(da + db);
    for (Eigen::Index i = 0; i < da; ++i)
      row[i] = a.rows()[i][c];
    for (Eigen::Index j = 0; j < db; ++j)
      row[da + j] = -b.rows()[j][c];
    constraints.push_back(std::move(row));
  }
  Subspace sol = nullspace(da + db, constraints);
  Subspace out(n);
  for (const auto &x : sol.rows()) {
    VecQ v = zero_vector(n);
    for (Eigen::Index i = 0; i < da; ++i)
      if (!x[i].is_zero())
        v += x[i] * a.rows()[i];
    out.insert(v);
  }
  return out;
}

Subspace nullspace(Eigen::Index cols, const std::vector<VecQ> &constraints) {
  Subspace rowspace(cols);
  for (const auto &c : constraints)
    rowspace.insert(c);
  const auto &piv = rowspace.pivots();
  Subspace out(cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : piv)
    is_pivot[p] = true;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    VecQ v = unit_vector(cols, f);
    for (std::size_t r = 0; r < piv.size(); ++r)
      v[piv[r]] = -rowspace.rows()[r][f];
    out.insert(v);
  }
  return out;
}

Subspace nullspace(const MatQ &m) {
  std::vector<VecQ> rows;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    rows.push_back(m.row(r).transpose());
  return nullspace(m.cols(), rows);
}

} // namespace gpw
