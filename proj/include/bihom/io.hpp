#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bihom/algebra.hpp"
#include "bihom/constructions.hpp"

namespace bihom {

// Line-oriented .alg format:
//
//   version 1
//   [group]        Z2 x Z2          (0 for the trivial group)
//   [bicharacter]  1 2 -1           (1-based generator indices; default +1)
//   [basis]        H 0              (name followed by degree coordinates)
//   [product]      H X -> 2 X       (only the stated ordered pairs are nonzero)
//   [alpha]        X -> 4 X         (unlisted basis vectors are fixed)
//   [beta]
//   [kind]         lie | associative | generic
//
// '#' starts a comment. Syntax errors raise ParseError with the line number;
// odd products or maps and invalid bicharacters raise ValidationError.

ColourAlgebra parse_algebra(std::string_view text);

/// Canonical text: fixed section order, basis in declaration order, products
/// in index order, nonzero terms only, [alpha]/[beta] lines only for columns
/// that differ from the identity.
std::string serialize_algebra(const ColourAlgebra& a);

/// Lines `x -> c1 z1 + c2 z2 ...`; unlisted basis vectors map to themselves.
Matrix parse_map(std::string_view text, const GradedBasis& basis);

/// Lines `g h v` with comma separated degree coordinates.
MultiplierTable parse_multiplier(std::string_view text, const GradingGroup& group);

/// Lines `g v`.
OmegaTable parse_omega(std::string_view text, const GradingGroup& group);

/// Throws ParseError (line 0) when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

}  // namespace bihom
