#pragma once

// Text serialization of algebras.
//
// Grammar (line oriented; '#' starts a comment, blank lines are skipped):
//
//   algebra <name>
//   kind <semiring|reslat|mv>
//   size <n>
//   zero <index>
//   one <index>          (absent for mv; the unit there is neg(zero))
//   op <opname>
//   <n rows of n whitespace-separated entries>   (1 row for unary ops)
//   ...
//   end
//
// Parsing is total over the grammar: any table whose entries are in range
// parses, whether or not the algebra satisfies any laws. Emission is
// canonical (single spaces, fixed op order), so parse(emit(a)) == a.

#include <string>
#include <string_view>

#include "reslat/algebra.hpp"

namespace reslat {

Algebra parse_algebra(std::string_view text);  // throws parse_error
std::string emit_algebra(const Algebra& alg);

}  // namespace reslat
