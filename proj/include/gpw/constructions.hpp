#pragma once

#include "gpw/algebra.hpp"
#include "gpw/group.hpp"

#include <map>
#include <vector>

namespace gpw {

/// 2-cocycle sigma: H x H -> Q*, H a subgroup of `group`.
struct Cocycle {
  FiniteAbelianGroup group;
  std::vector<GroupElement> H;
  std::map<std::pair<GroupElement, GroupElement>, Rational> table;

  const Rational &operator()(const GroupElement &a, const GroupElement &b) const;
};

/// Throws InvalidCocycleError unless the table is total on H x H, nonzero,
/// H is closed, and sigma(a,b) sigma(a+b,c) = sigma(b,c) sigma(a,b+c).
void validate_cocycle(const Cocycle &c);
Cocycle trivial_cocycle(const Subgroup &H);
/// sigma(a,b) = t(a) t(b) / t(a+b).
Cocycle cocycle_from_coboundary(const Subgroup &H,
                                const std::map<GroupElement, Rational> &t);
/// sigma((i1,j1),(i2,j2)) = (-1)^(j1*i2) on the Klein group.
Cocycle pauli_cocycle();

using ThetaTuple = std::vector<GroupElement>;

/// M_k with deg(E_ij) = theta_j - theta_i.
GradedAlgebra elementary_matrix_grading(const FiniteAbelianGroup &G,
                                        const ThetaTuple &theta);
/// Basis eta_h, eta_a eta_b = sigma(a,b) eta_{a+b}.
GradedAlgebra twisted_group_algebra(const Cocycle &sigma);
/// M_k(F^sigma[H]) with deg(E_ij eta_h) = theta_j - theta_i + h.
GradedAlgebra elementary_canonical(const FiniteAbelianGroup &G,
                                   const Cocycle &sigma,
                                   const ThetaTuple &theta);

/// M_2 with the Klein grading by Pauli-type matrices.
GradedAlgebra pauli_m2();
/// Quaternions over Q with i at (0,1), j at (1,0), k at (1,1).
GradedAlgebra quaternions();
/// Z_3-graded span{u, v, w}: deg u = 1, deg v = 2, deg w = 0, uv = w.
GradedAlgebra witness_w3();
/// Z_2-graded span{x}, deg x = 1, x^2 = 0.
GradedAlgebra nil_one_dim();
/// Non-unital Grassmann algebra on n generators, Z_2-graded by parity.
GradedAlgebra grassmann(std::size_t n);
/// E^G(A) = A_0 (x) E_0 + A_1 (x) E_1 over the first factors of A's group.
GradedAlgebra grassmann_envelope(const GradedAlgebra &A, std::size_t n);

/// Quaternions times n copies of nil_one_dim over (Z_2)^{n+2}.
GradedAlgebra prop_3_28_family(std::size_t n);
/// Pushes every degree through the projection.
GradedAlgebra coarsen(const GradedAlgebra &A, const QuotientMap &projection);

/// Concrete matrices of the worked examples over Z_3 x Z_5.
GradedAlgebra example_3_16();
GradedAlgebra example_3_18();
ThetaTuple example_3_16_theta();
ThetaTuple example_3_18_theta();

/// M_k with the trivial grading.
GradedAlgebra matrix_algebra(std::size_t k);
/// Upper triangular k x k matrices, Z_k-graded by deg(E_ij) = j - i.
GradedAlgebra triangular(std::size_t k);
/// A with an adjoined unit `1` of neutral degree at index 0.
GradedAlgebra unitization(const GradedAlgebra &A);
/// Same structure constants, new group and degrees; validated.
GradedAlgebra regraded(const GradedAlgebra &A, const FiniteAbelianGroup &G,
                       const std::vector<GroupElement> &degrees);
/// The zero algebra over G.
GradedAlgebra zero_algebra(const FiniteAbelianGroup &G);

} // namespace gpw
