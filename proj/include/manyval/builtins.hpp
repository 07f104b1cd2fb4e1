#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "manyval/matrix.hpp"

namespace manyval {

// One of the sixteen 7-valued variants of fc: the designated fde component
// `differentiated` (B or T) keeps all four ac2 pairings, every other fde
// value is paired only with the dominant ac2 value `dominant`. `starred`
// flips the designation status of the other designated fde value's pair.
struct SevenValuedSpec {
  char differentiated = 'B';  // 'B' or 'T'
  char dominant = 'b';        // 'b', 't', 'f' or 'n'
  bool starred = false;

  std::string matrix_name() const;  // e.g. "fc7:Bt*"
};

// name is one of: kw3, nc, fde, ac2, fc. Throws Error on anything else.
Matrix build_builtin(std::string_view name);

Matrix build_seven_valued(const SevenValuedSpec& spec);

// Resolves "builtin:<name>" or "builtin:fc7:<V><v>[*]" references; returns
// nullopt when the string is not a builtin reference at all, throws Error
// when it is one but names no builtin.
std::optional<Matrix> resolve_builtin(std::string_view reference);

// All sixteen seven-valued specs in a fixed order (B before T, dominant in
// ac2 declaration order, unstarred before starred).
std::vector<SevenValuedSpec> all_seven_valued_specs();

}  // namespace manyval
