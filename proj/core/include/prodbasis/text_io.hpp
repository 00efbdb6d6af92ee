#pragma once

// Plain-text encodings shared by the CLI and the tests.
//
//   scalar        GF(p): decimal residue; Q: "num/den" (den omitted when 1)
//   field         "GF(p)" or "Q"
//   matrix        "<rows> <cols> <field>" then rows of whitespace-separated scalars
//   sym matrix    "sym <rows> <cols> Q <d1xd2x...>" then rows
//   vector        "shape d1 d2 ... dn; <field>; c_0 c_1 ..."  (one line, row-major coords)
//   subspace      "subspace shape d1 ... dn; <field>" then "gen <vector>" / "cogen <vector>" lines
//   vector list   one vector per line
//
// Blank lines and lines starting with '#' are ignored by every reader.

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prodbasis/construct.hpp"
#include "prodbasis/gpt.hpp"
#include "prodbasis/linalg.hpp"
#include "prodbasis/tensor.hpp"

namespace prodbasis::text {

std::string format_matrix(const Matrix& m);
Matrix parse_matrix(std::string_view text);

std::string format_sym_matrix(const SymMatrix& m);
SymMatrix parse_sym_matrix(std::string_view text);

std::string format_vector(const TensorVector& v);
TensorVector parse_vector(std::string_view line);

std::string format_vector_list(std::span<const TensorVector> vs);
std::vector<TensorVector> parse_vector_list(std::string_view text);

/// Vector list with a "# factors:" comment before each product vector.
std::string format_product_tuple(const ProductTuple& t);

std::string format_subspace(const Subspace& s);
Subspace parse_subspace(std::string_view text);

std::string format_factors(std::span<const Vec> factors);

}  // namespace prodbasis::text
