#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "manyval/formula.hpp"
#include "manyval/matrix.hpp"
#include "manyval/partition.hpp"

namespace manyval {

// The matrix specification language (.mvl). Clause-oriented, "." terminates
// clauses, "#" starts a comment, whitespace between tokens is insignificant:
//
//   logic "<name>".
//   values: v1, v2, ..., vk.
//   designated: d1, ..., dm.
//   op <name>/<arity> {
//     (a1,...,an) -> r.      # arity-1 entries may omit the parentheses
//   }
//
// Value and operation tokens are maximal runs of characters excluding
// whitespace, the punctuation  , . { } ( ) : / # "  and the arrow "->".
// Table entries may appear in any order; conflicting duplicates are errors,
// duplicates with equal outputs are warnings.
Matrix parse_logic(std::string_view text, std::vector<Issue>* warnings = nullptr);

// Canonical form: values and designated in declaration order, operations in
// declaration order, table entries in row-major declaration order. The
// result re-parses to a structurally equal matrix.
std::string serialize_logic(const Matrix& m);

// Formula syntax: atoms are identifiers (letter, then letters/digits/
// underscores); ~ negation, & conjunction, | disjunction; parentheses.
// Precedence ~ > & > |, binary operators left-associative.
Formula parse_formula(std::string_view text);

// One LaTeX tabular per operation. When classes is given it must partition
// m's values; values in the same class get the same color command and
// designated values are set in bold. Output compiles inside any document
// that loads xcolor.
std::string emit_latex_tables(const Matrix& m, const Partition* classes = nullptr);

}  // namespace manyval
