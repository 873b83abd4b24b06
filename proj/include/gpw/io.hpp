#pragma once

#include "gpw/algebra.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace gpw {

/// Text format, one key per line, `#` starts a comment:
///
///   name: pauli-m2
///   group: [2, 2]
///   basis: [I, E11-E22, E12+E21, E12-E21]
///   degrees: [e, (0,1), (1,0), (1,1)]
///   unit: I
///   products:
///     0 0 -> [(0, 1)]
///     1 2 -> [(3, 1)]
///   cocycle:
///     k: 1
///     theta: [e]
///     H: [e, (0,1)]
///     sigma (e, e) -> 1
///
/// Indices in `products` are 0-based positions in `basis`; omitted pairs
/// multiply to zero. The `cocycle` block is optional and restores the data of
/// an elementary-canonical algebra.
GradedAlgebra read_algebra(std::istream &in);
GradedAlgebra parse_algebra(std::string_view text);
void write_algebra(std::ostream &out, const GradedAlgebra &A);
std::string format_algebra(const GradedAlgebra &A);

GradedAlgebra load_algebra(const std::string &path);
void save_algebra(const GradedAlgebra &A, const std::string &path);

/// Built-in fixture by CLI name (`pauli-m2`, `grassmann:3`, ...) or, failing
/// that, an algebra file. Throws InvalidInputError for unknown names.
GradedAlgebra resolve_algebra(const std::string &name_or_path);
std::vector<std::string> fixture_names();

} // namespace gpw
