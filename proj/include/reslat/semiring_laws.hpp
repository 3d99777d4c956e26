#pragma once

// Law suites for semiring tables: the base axioms, the variety flags that
// carve out the class this library studies (idempotent, commutative
// addition-absorbing-the-unit), and the isotonicity of multiplication in
// the induced order.

#include <utility>

#include "reslat/algebra.hpp"
#include "reslat/report.hpp"

namespace reslat {

// Base semiring axioms, in report order:
//   add_assoc, add_comm, add_neutral, mul_assoc, mul_neutral,
//   distrib_left   x*(y+z) = x*y + x*z
//   distrib_right  (x+y)*z = x*z + y*z
//   annihilation   x*0 = 0*x = 0
LawReport check_semiring(const SemiringAlg& alg);

// Variety flags on top of the base axioms, in report order:
//   idempotent   x+x = x
//   commutative  x*y = y*x
//   simple       x+1 = 1
//   completely_distributive  (automatic on a finite carrier once the other
//     flags hold; reported with an explanatory note)
struct VarietyFlags {
    LawEntry idempotent;
    LawEntry commutative;
    LawEntry simple;
    LawEntry completely_distributive;

    bool all() const;
    LawReport report() const;
};

VarietyFlags check_variety_flags(const SemiringAlg& alg);

// Multiplication is isotone in the induced order: a <= b implies a*c <= b*c
// and c*a <= c*b. Single entry named "isotone" with witness (a, b, c).
// Requires the induced order to exist (add idempotent/commutative/assoc).
LawEntry check_isotone(const SemiringAlg& alg);

}  // namespace reslat
