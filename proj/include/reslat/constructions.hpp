#pragma once

// The two-way passage between semirings and residuated lattices, the
// summation-defined negation map, the double-negation shift conditions
// that make the semiring-to-lattice direction work, and the round-trip
// law suites that certify the two directions are mutually inverse.

#include <utility>

#include "reslat/algebra.hpp"
#include "reslat/report.hpp"

namespace reslat {

// Residuated lattice -> semiring: add = join, mul = odot. Validates the
// lattice first (throws law_violation with the first failing entry).
SemiringAlg to_semiring(const ReslatAlg& alg);

// res(a, b) = the sum of every x with a*x <= b, equivalently the greatest
// such x when mul is isotone. Requires the induced order.
BinOp residuum_from(const SemiringAlg& alg);

// Semiring -> residuated lattice: join = add, meet from the induced order,
// odot = mul, res = residuum_from. Requires the variety flags idempotent,
// commutative and simple (throws law_violation with the first failing flag),
// and requires the induced order to be a lattice with top = 1.
ReslatAlg to_residuated_lattice(const SemiringAlg& alg);

// n(x) = the sum of every y with x*y = 0.
UnOp negation_map(const SemiringAlg& alg);

// The double-negation shift laws, in report order:
//   dnl_i    n(n(x)) = x                       witness (x)
//   dnl_ii   x * n(x * n(y)) <= y              witness (x, y)
//   dnl_iii  x * n(x + y) = 0                  witness (x, y)
// Requires the variety flags.
LawReport check_dnl(const SemiringAlg& alg);

// Semiring -> residuated lattice, with meet and res defined through the
// negation map alone:
//   x meet y = n(n(x) + n(y)),   x -> y = n(x * n(y)).
// Throws law_violation with the first failing dnl entry when the shift laws
// fail.
ReslatAlg dnl_to_residuated_lattice(const SemiringAlg& alg);

// Round-trip certification.
// Semiring input: precondition entries (base axioms + flags) when failing,
// then the dnl entries, then
//   constructed_reslat_valid, roundtrip_add_identity, roundtrip_mul_identity.
// Residuated-lattice input: failing base entries, then double_negation, the
// dnl entries of the extracted semiring, then
//   roundtrip_join_identity, roundtrip_meet_identity,
//   roundtrip_odot_identity, roundtrip_res_identity.
// mv input: std::invalid_argument (convert first).
LawReport roundtrip(const Algebra& alg);

// x * n(n(y) + n(z)) = n(n(x*y) + n(x*z)) over all triples; witness (x,y,z).
std::pair<bool, std::vector<int>> check_prelinearity_identity(const SemiringAlg& alg);

}  // namespace reslat
