#pragma once

// Canonical forms under element relabeling. Two algebras are isomorphic iff
// their canonical keys agree. Admissible relabelings respect the designated
// constants: zero moves to index 0 and one to index n-1 (for mv only zero is
// pinned, since the unit is derived from the tables). The canonical key is
// the lexicographically least [kind, n, flattened tables] over all
// admissible relabelings.

#include <string>
#include <vector>

#include "reslat/algebra.hpp"

namespace reslat {

std::vector<int> canonical_key(const Algebra& alg);
Algebra canonical_form(const Algebra& alg);   // keeps the original name
std::string canonicalize(const Algebra& alg); // emit(canonical form named "canonical")

}  // namespace reslat
