#pragma once

#include "gpw/algebra.hpp"
#include "gpw/identity.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gpw {

enum class ClaimStatus { pass, fail, out_of_scope };

std::string to_string(ClaimStatus s);

/// Enough to replay a failed claim through `gpw check`.
struct Reproducer {
  std::string algebra;
  /// Algebra file contents when `algebra` is not a built-in fixture name.
  std::string algebra_text;
  std::string polynomial;
  /// Polynomial over the trivial group, evaluated on the whole algebra.
  bool ungraded = false;
  std::string witness;
};

struct ClaimReport {
  std::string id;
  ClaimStatus status = ClaimStatus::pass;
  std::string details;
  double runtime_ms = 0;
  std::optional<Reproducer> reproducer;
};

std::vector<std::string> suite_names();

/// Throws UsageError for unknown names. Reports are sorted by claim id.
std::vector<ClaimReport> run_suite(const std::string &name,
                                   const EngineOptions &opts =
                                       EngineOptions::from_env());

/// Any report with status fail.
bool has_failures(const std::vector<ClaimReport> &reports);

nlohmann::ordered_json report_json(const std::string &suite,
                           const std::vector<ClaimReport> &reports,
                           bool timings);
std::string report_text(const std::vector<ClaimReport> &reports, bool timings);

/// Reproducer for a failing verdict of `g` on `A`.
Reproducer make_reproducer(const GradedAlgebra &A, const GradedPolynomial &g,
                           const Verdict &v);

/// The polynomial of the Z_3 x Z_5 worked example: sum over r < s of
/// f-commutators plus squares of the variables outside the listed degrees.
GradedPolynomial example_3_16_polynomial();
FGTable example_3_16_fg();

} // namespace gpw
