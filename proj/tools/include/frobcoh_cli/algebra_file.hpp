#pragma once

// Line-oriented algebra definition files:
//
//   # comment
//   field Q | field Qi | field GF <p>
//   basis <name>+
//   unit <lincomb>
//   mul <name> <name> = <lincomb>      (exactly one per ordered pair)
//   counit <name> = <scalar>           (default 0)
//
//   lincomb := 0 | term (+ term)*      term := [<scalar> *] <name>

#include <string>
#include <string_view>

#include "frobcoh/frobenius.hpp"

namespace frobcoh::cli {

/// Throws ParseError ("line L, column C: ..."), DuplicateMulLine and
/// UnknownBasisName.
AlgebraPresentation parse_algebra_file(std::string_view text, std::string id = "file");

/// Canonical text: field, basis, unit, every mul line in basis order, then
/// the nonzero counit values.
std::string print_algebra_file(const AlgebraPresentation& pres);

}  // namespace frobcoh::cli
