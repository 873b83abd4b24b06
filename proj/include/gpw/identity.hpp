#pragma once

#include "gpw/algebra.hpp"
#include "gpw/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gpw {

struct EngineOptions {
  /// Ceiling on basis-tuple evaluations (and on generic monomial counts).
  std::size_t max_evals = 10'000'000;

  /// Defaults, overridden by the GPW_MAX_EVALS environment variable.
  static EngineOptions from_env();
};

struct Witness {
  /// Which piece of the input failed, e.g. "degree (1,0), x1@(1,0)*x2@(0,2)".
  std::string component;
  /// The polynomial that was evaluated (multilinear piece or the input).
  GradedPolynomial polynomial;
  std::vector<std::pair<GradedVariable, VecQ>> assignment;
  VecQ value;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  /// "basis-tuples", "generic", "structural:lower-central",
  /// "structural:commutator-powers", "sigma-bracket".
  std::string method;
  std::size_t evaluations = 0;
};

/// Raised by degree2_canonicalize when its input is not an identity.
class NotAnIdentityError : public Error {
public:
  explicit NotAnIdentityError(Verdict v)
      : Error("not-an-identity",
              "polynomial is not a graded identity of the algebra"),
        verdict_(std::move(v)) {}
  const Verdict &verdict() const { return verdict_; }

private:
  Verdict verdict_;
};

/// Decides g on A: G-homogeneous split, multihomogeneous split, full
/// polarization, then evaluation of every multilinear piece on all tuples of
/// homogeneous basis elements (all basis elements for an ungraded g). The
/// first failing tuple in lexicographic order is the witness.
Verdict is_graded_identity(const GradedAlgebra &A, const GradedPolynomial &g,
                           const EngineOptions &opts = EngineOptions::from_env());

/// Independent oracle: substitutes generic elements with polynomial
/// coefficients and checks every coordinate for zero.
Verdict is_identity_generic(const GradedAlgebra &A, const GradedPolynomial &g,
                            const EngineOptions &opts = EngineOptions::from_env());

/// [x1,...,xn] decided through the lower central series.
Verdict left_normed_identity(const GradedAlgebra &A, std::size_t n);
/// [x1,x2]...[x_{2d-1},x_{2d}] decided through powers of span{[a,b]}.
Verdict commutator_product_identity(const GradedAlgebra &A, std::size_t d);

/// Dispatches left-normed commutators and commutator products to the
/// structural routes and everything else to is_graded_identity.
Verdict check_identity(const GradedAlgebra &A, const GradedPolynomial &g,
                       const EngineOptions &opts = EngineOptions::from_env());

/// [x@e, y@xi] holds for every xi in the support (brute force).
bool is_neutral_central(const GradedAlgebra &A);

struct IdentitySpace {
  std::vector<GroupElement> degrees;
  /// Monomials x_{s(1)}...x_{s(n)} in the order of the coefficient vectors.
  std::vector<GradedMonomial> monomials;
  std::vector<GradedPolynomial> basis;
};

/// Multilinear identities sum_s c_s x_{s(1)}...x_{s(n)} with variable i of
/// degree degrees[i-1].
IdentitySpace find_multilinear_identities(
    const GradedAlgebra &A, const std::vector<GroupElement> &degrees,
    std::size_t max_n = 4,
    const EngineOptions &opts = EngineOptions::from_env());

struct PairCase {
  unsigned r = 0, s = 0;
  Rational lambda_rs, lambda_sr;
  /// "f(xi,zeta) != 0 and f(zeta,xi) = 0" and its mirror, "both nonzero",
  /// or "zero".
  std::string kind;
};

struct Degree2Canonical {
  GradedPolynomial source;
  std::map<std::pair<unsigned, unsigned>, Rational> gamma;
  std::map<unsigned, Rational> delta;
  FGTable fg;
  bool commutative_neutral = false;
  /// One line per variable explaining why its linear coefficient vanishes.
  std::vector<std::string> linear_certificates;
  std::vector<PairCase> pairs;
  std::vector<unsigned> representatives;
  std::vector<std::string> notes;
  GradedPolynomial reconstructed;
  bool reconstructed_holds = false;
};

/// Rewrites a degree-2 identity into the shape
///   sum_{r<s} gamma_rs [x_r, x_s]_f + sum_k delta_k x_k^2
/// following the constructive argument for degree-2 identities.
Degree2Canonical degree2_canonicalize(
    const GradedAlgebra &A, const GradedPolynomial &g,
    const EngineOptions &opts = EngineOptions::from_env());

/// sum_k delta_k x_k^2 + sum_{r<s} gamma_rs [x_r, x_s]_f over the variables
/// of `source`.
GradedPolynomial reconstruct(const Degree2Canonical &c);

/// (1/sigma(a,b)) X Y - (1/sigma(b,a)) Y X on basis elements X = E_ij eta_a,
/// Y = E_rs eta_b, extended bilinearly.
VecQ sigma_bracket(const GradedAlgebra &B, const VecQ &a, const VecQ &b);
/// sigma_bracket vanishes on all pairs of basis elements of B_xi x B_zeta.
Verdict sigma_identity_check(const GradedAlgebra &B, const GroupElement &xi,
                             const GroupElement &zeta);

std::string describe(const GradedAlgebra &A, const Witness &w);

} // namespace gpw
