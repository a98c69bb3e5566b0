#pragma once

#include <string_view>

#include "hcrep/uea/pbw.hpp"

namespace hcrep::uea {

/// Parses sums of products such as "E(a)*F(a)*F(a) - 1/2*H(a)^2 + 3". Atoms
/// are basis labels E(root), F(root), H(letter), rationals, and parenthesized
/// subexpressions; "^k" raises an atom to a nonnegative integer power. The
/// result is in PBW normal form. Throws InvalidInput on syntax errors.
Element parse_expression(const PBWAlgebra& alg, std::string_view text);

}  // namespace hcrep::uea
