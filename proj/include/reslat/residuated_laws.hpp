#pragma once

// Law suites for residuated-lattice tables and mv tables, plus the
// negation x -> 0 and its derived laws, the optional laws that carve out
// familiar subclasses, and the Boolean-algebra test.

#include <utility>

#include "reslat/algebra.hpp"
#include "reslat/report.hpp"

namespace reslat {

// Full residuated-lattice suite, in report order:
//   join_assoc, join_comm, join_idem,
//   meet_assoc, meet_comm, meet_idem,
//   absorb_join   x join (x meet y) = x
//   absorb_meet   x meet (x join y) = x
//   join_zero     x join 0 = x
//   join_one      x join 1 = 1
//   meet_one      x meet 1 = x
//   meet_zero     x meet 0 = 0
//   odot_assoc, odot_comm, odot_neutral,
//   adjointness   x odot y <= z  iff  x <= y -> z   (witness (x, y, z))
//   meet_order_consistent   x meet y = x  iff  x <= y
// The last two need the join order, so they are omitted when the join
// entries fail.
LawReport check_residuated(const ReslatAlg& alg);

// neg(x) = res(x, zero).
UnOp negation_of(const ReslatAlg& alg);

// Laws of the residuum and the derived negation, in report order:
//   residuum_greatest  res(a,b) is the greatest x with x odot a <= b; (a, b)
//   neg_zero           neg(0) = 1
//   neg_one            neg(1) = 0
//   neg_contra         x odot neg(x) = 0
//   neg_double_intro   x <= neg(neg(x))
//   neg_antitone       x <= y implies neg(y) <= neg(x)
LawReport check_negation_laws(const ReslatAlg& alg);

enum class OptionalLaw { double_negation, idempotent, prelinear, divisible };

const char* optional_law_name(OptionalLaw law);

// Single-entry checks:
//   double_negation  neg(neg(x)) = x                 witness (x)
//   idempotent       x odot x = x                    witness (x)
//   prelinear        (x -> y) join (y -> x) = 1      witness (x, y)
//   divisible        x meet y = x odot (x -> y)      witness (x, y)
LawEntry check_optional_law(const ReslatAlg& alg, OptionalLaw law);

// Boolean-algebra test, in report order:
//   lattice_distributive   x meet (y join z) = (x meet y) join (x meet z)
//   complement_join        x join neg(x) = 1
//   complement_meet        x meet neg(x) = 0
// First component is the conjunction of the three.
std::pair<bool, LawReport> check_boolean(const ReslatAlg& alg);

// mv suite, in report order:
//   oplus_assoc, oplus_comm,
//   oplus_zero     x oplus 0 = x
//   oplus_top      x oplus neg(0) = neg(0)
//   neg_involution neg(neg(x)) = x
//   mv_exchange    neg(neg(x) oplus y) oplus y = neg(neg(y) oplus x) oplus x
LawReport check_mv(const MvAlg& alg);

// Derives the residuated lattice of an mv value:
//   x odot y = neg(neg(x) oplus neg(y)),   x -> y = neg(x) oplus y,
//   x join y = (x -> y) -> y,              x meet y = neg(neg(x) join neg(y)),
//   1 = neg(0).
// Throws law_violation carrying the first failing check_mv entry.
ReslatAlg mv_to_reslat(const MvAlg& alg);

}  // namespace reslat
