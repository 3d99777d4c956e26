#pragma once

// Hand-computed reference algebras. Every table here was worked out by hand,
// independently of the library code, and is frozen: tests compare library
// output against these values, never the other way around.
//
// The carriers use ascending indices. Unless noted otherwise, index 0 is
// the zero element and the highest index is the unit.

#include <string>

#include "reslat/algebra.hpp"

namespace fixtures {

// Two-element Boolean structure: add = or, mul = and.
reslat::Algebra b2_semiring();
reslat::Algebra b2_reslat();
reslat::Algebra b2_mv();

// Three-element chain 0 < 1 < 2 with mul = min (the order-static structure).
reslat::Algebra g3_semiring();
reslat::Algebra g3_reslat();

// Three-element chain with the truncated-sum structure: mul(1,1) = 0.
reslat::Algebra l3_semiring();
reslat::Algebra l3_reslat();
reslat::Algebra l3_mv();

// Four-element diamond 0 < {1, 2} < 3, complemented.
reslat::Algebra b4_semiring();
reslat::Algebra b4_reslat();

// Three-element chain 0 < 1 < 2 where the unit is the middle element 1, so
// x + 1 = 1 fails at the top element.
reslat::Algebra n3_semiring();

// Six-element order that is bounded but not a lattice: 0 < {1,2} < {3,4} < 5
// with 1,2 incomparable and 3,4 incomparable.
reslat::OrderRel hexagon_order();

// Deliberately broken variants used to pin witness values.
reslat::Algebra b2_reslat_res_all_one();  // res constantly 1
reslat::Algebra b2_semiring_mul_broken(); // mul(1,1) = 0
reslat::Algebra b2_mv_neg_identity();     // neg = identity map

// Path to a file inside the source-tree fixture directory.
std::string fixture_path(const std::string& filename);

}  // namespace fixtures
