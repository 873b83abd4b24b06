#pragma once

#include "gpw/algebra.hpp"
#include "gpw/linalg.hpp"

#include <optional>
#include <vector>

namespace gpw {

/// span{u v : u in U, v in V}.
Subspace product_span(const GradedAlgebra &A, const Subspace &U,
                      const Subspace &V);
/// span{[u, v] : u in U, v in V}.
Subspace bracket_span(const GradedAlgebra &A, const Subspace &U,
                      const Subspace &V);

/// A, A^2, A^3, ... up to the first zero or repeated term.
std::vector<Subspace> power_chain(const GradedAlgebra &A);
/// Least n with A^n = 0, or nullopt when A is not nilpotent. The zero
/// algebra has index 1.
std::optional<std::size_t> nilpotency_index(const GradedAlgebra &A);

/// Powers of a subspace viewed as a (not necessarily unital) subalgebra.
std::vector<Subspace> power_chain(const GradedAlgebra &A, const Subspace &S);
std::optional<std::size_t> nilpotency_index(const GradedAlgebra &A,
                                            const Subspace &S);

Subspace center(const GradedAlgebra &A);
Subspace component_subspace(const GradedAlgebra &A, const GroupElement &xi);
/// A_e contained in Z(A), decided on subspaces.
bool neutral_component_central(const GradedAlgebra &A);

/// Smallest two-sided ideal containing S.
Subspace ideal_closure(const GradedAlgebra &A, const Subspace &S);
bool is_ideal(const GradedAlgebra &A, const Subspace &S);

Subspace commutator_span(const GradedAlgebra &A);
Subspace commutator_ideal(const GradedAlgebra &A);
std::optional<std::size_t> commutator_ideal_nilpotency(const GradedAlgebra &A);

struct LieSeries {
  /// L_1 = [A,A], L_{k+1} = [L_k, A], until zero or stable.
  std::vector<Subspace> lower_central;
  /// D_1 = [A,A], D_{k+1} = [D_k, D_k], until zero or stable.
  std::vector<Subspace> derived;
  bool nilpotent = false;
  bool solvable = false;
};

LieSeries lie_series(const GradedAlgebra &A);
bool is_lie_nilpotent(const GradedAlgebra &A);
bool is_lie_solvable(const GradedAlgebra &A);

/// Kernel of the trace form (x, y) -> tr(L_x L_y) together with tr(L_x) = 0,
/// checked to be a nilpotent two-sided ideal. Throws InconsistencyError when
/// that check fails.
Subspace jacobson_radical(const GradedAlgebra &A);

/// S equals the sum of its intersections with the homogeneous components.
bool is_graded_subspace(const GradedAlgebra &A, const Subspace &S);

} // namespace gpw
