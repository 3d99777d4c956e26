#pragma once

// Order theory over finite tables: the partial order induced by an
// idempotent commutative addition (x <= y iff x + y = y), suprema of
// subsets, and the derived meet table when the order is a lattice.

#include <vector>

#include "reslat/tables.hpp"

namespace reslat {

// Builds x <= y iff add(x, y) == y. Requires add to be idempotent,
// commutative and associative (checked in that order); otherwise throws
// law_violation with law "add_idem" / "add_comm" / "add_assoc".
OrderRel induced_order(const BinOp& add);

// Least upper bound of a subset. The empty subset yields the order's bottom.
// Throws law_violation "no_upper_bound" (witness: the subset) when the set of
// upper bounds is empty, "no_least_upper_bound" (witness: two incomparable
// minimal upper bounds) when it has no least element, and "no_least_element"
// for the empty subset of an order without bottom.
int supremum(const OrderRel& order, const std::vector<int>& subset);

// Binary-meet table for a lattice order. Throws law_violation
// "not_a_lattice" with witness (x, y, m1, m2) when elements x, y have two
// maximal lower bounds m1 < m2 (or none at all, then witness (x, y)).
BinOp meet_table(const OrderRel& order);

}  // namespace reslat
