#include "gpw/structure.hpp"

#include <deque>

namespace gpw {

namespace {

Eigen::Index n_of(const GradedAlgebra &A) {
  return static_cast<Eigen::Index>(A.dim());
}

} // namespace

Subspace product_span(const GradedAlgebra &A, const Subspace &U,
                      const Subspace &V) {
  Subspace out(n_of(A));
  for (const auto &u : U.rows())
    for (const auto &v : V.rows()) {
      out.insert(multiply(A, u, v));
      if (out.dim() == A.dim())
        return out;
    }
  return out;
}

Subspace bracket_span(const GradedAlgebra &A, const Subspace &U,
                      const Subspace &V) {
  Subspace out(n_of(A));
  for (const auto &u : U.rows())
    for (const auto &v : V.rows()) {
      out.insert(commutator(A, u, v));
      if (out.dim() == A.dim())
        return out;
    }
  return out;
}

std::vector<Subspace> power_chain(const GradedAlgebra &A, const Subspace &S) {
  std::vector<Subspace> chain{S};
  while (!chain.back().is_zero()) {
    Subspace next = product_span(A, chain.back(), S);
    if (next == chain.back())
      break;
    chain.push_back(std::move(next));
  }
  return chain;
}

std::optional<std::size_t> nilpotency_index(const GradedAlgebra &A,
                                            const Subspace &S) {
  if (S.is_zero())
    return 1;
  auto chain = power_chain(A, S);
  if (!chain.back().is_zero())
    return std::nullopt;
  return chain.size();
}

std::vector<Subspace> power_chain(const GradedAlgebra &A) {
  return power_chain(A, Subspace::full(n_of(A)));
}

std::optional<std::size_t> nilpotency_index(const GradedAlgebra &A) {
  return nilpotency_index(A, Subspace::full(n_of(A)));
}

Subspace center(const GradedAlgebra &A) {
  // z = sum_j z_j e_j commutes with e_i iff sum_j z_j (e_j e_i - e_i e_j) = 0.
  const std::size_t n = A.dim();
  std::vector<VecQ> constraints;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<VecQ> rows(n, zero_vector(n_of(A)));
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto &t : A.product(j, i))
        rows[t.index][j] += t.coeff;
      for (const auto &t : A.product(i, j))
        rows[t.index][j] -= t.coeff;
    }
    for (auto &r : rows)
      if (!is_zero(r))
        constraints.push_back(std::move(r));
  }
  return nullspace(n_of(A), constraints);
}

Subspace component_subspace(const GradedAlgebra &A, const GroupElement &xi) {
  Subspace s(n_of(A));
  for (auto i : component_basis(A, xi))
    s.insert(basis_vector(A, i));
  return s;
}

bool neutral_component_central(const GradedAlgebra &A) {
  return center(A).contains(component_subspace(A, A.group().identity()));
}

Subspace ideal_closure(const GradedAlgebra &A, const Subspace &S) {
  Subspace out(n_of(A));
  std::deque<VecQ> work;
  for (const auto &r : S.rows())
    if (out.insert(r))
      work.push_back(r);
  while (!work.empty() && out.dim() < A.dim()) {
    VecQ v = std::move(work.front());
    work.pop_front();
    for (std::size_t j = 0; j < A.dim(); ++j) {
      VecQ a = multiply_right_basis(A, v, j);
      if (out.insert(a))
        work.push_back(std::move(a));
      VecQ b = multiply_left_basis(A, j, v);
      if (out.insert(b))
        work.push_back(std::move(b));
    }
  }
  return out;
}

bool is_ideal(const GradedAlgebra &A, const Subspace &S) {
  for (const auto &v : S.rows())
    for (std::size_t j = 0; j < A.dim(); ++j)
      if (!S.contains(multiply_right_basis(A, v, j)) ||
          !S.contains(multiply_left_basis(A, j, v)))
        return false;
  return true;
}

Subspace commutator_span(const GradedAlgebra &A) {
  Subspace out(n_of(A));
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = i + 1; j < A.dim(); ++j)
      out.insert(product_vector(A, i, j) - product_vector(A, j, i));
  return out;
}

Subspace commutator_ideal(const GradedAlgebra &A) {
  return ideal_closure(A, commutator_span(A));
}

std::optional<std::size_t> commutator_ideal_nilpotency(const GradedAlgebra &A) {
  return nilpotency_index(A, commutator_ideal(A));
}

LieSeries lie_series(const GradedAlgebra &A) {
  LieSeries s;
  Subspace whole = Subspace::full(n_of(A));
  s.lower_central.push_back(commutator_span(A));
  while (!s.lower_central.back().is_zero()) {
    Subspace next = bracket_span(A, s.lower_central.back(), whole);
    if (next == s.lower_central.back())
      break;
    s.lower_central.push_back(std::move(next));
  }
  s.nilpotent = s.lower_central.back().is_zero();
  s.derived.push_back(s.lower_central.front());
  while (!s.derived.back().is_zero()) {
    Subspace next = bracket_span(A, s.derived.back(), s.derived.back());
    if (next == s.derived.back())
      break;
    s.derived.push_back(std::move(next));
  }
  s.solvable = s.derived.back().is_zero();
  return s;
}

bool is_lie_nilpotent(const GradedAlgebra &A) { return lie_series(A).nilpotent; }
bool is_lie_solvable(const GradedAlgebra &A) { return lie_series(A).solvable; }

Subspace jacobson_radical(const GradedAlgebra &A) {
  const std::size_t n = A.dim();
  // tr(L_{e_i} L_{e_j}) = sum_k sum_m [e_j e_k]_m [e_i e_m]_k.
  std::vector<VecQ> constraints;
  auto coeff = [&](std::size_t a, std::size_t b, std::size_t k) {
    for (const auto &t : A.product(a, b))
      if (t.index == k)
        return t.coeff;
    return Rational(0);
  };
  for (std::size_t j = 0; j < n; ++j) {
    VecQ row = zero_vector(n_of(A));
    for (std::size_t i = 0; i < n; ++i) {
      Rational tr(0);
      for (std::size_t k = 0; k < n; ++k)
        for (const auto &t : A.product(j, k)) {
          Rational c = coeff(i, t.index, k);
          if (!c.is_zero())
            tr += t.coeff * c;
        }
      row[i] = tr;
    }
    constraints.push_back(std::move(row));
  }
  VecQ trace_row = zero_vector(n_of(A));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      trace_row[i] += coeff(i, k, k);
  constraints.push_back(trace_row);

  Subspace rad = nullspace(n_of(A), constraints);
  if (!is_ideal(A, rad))
    throw InconsistencyError("trace-form kernel of " + A.name() +
                             " is not an ideal; the structure constants do "
                             "not define an associative algebra");
  if (!nilpotency_index(A, rad))
    throw InconsistencyError("trace-form kernel of " + A.name() +
                             " is not nilpotent");
  return rad;
}

bool is_graded_subspace(const GradedAlgebra &A, const Subspace &S) {
  for (const auto &r : S.rows())
    for (const auto &xi : support(A))
      if (!S.contains(homogeneous_component(A, r, xi)))
        return false;
  return true;
}

} // namespace gpw
