#include "fixtures.hpp"

namespace fixtures {

using reslat::Algebra;
using reslat::BinOp;
using reslat::Carrier;
using reslat::MvAlg;
using reslat::OrderRel;
using reslat::ReslatAlg;
using reslat::SemiringAlg;
using reslat::UnOp;

namespace {

BinOp rows(const std::vector<std::vector<int>>& r) { return BinOp::from_rows(r); }

}  // namespace

Algebra b2_semiring() {
    Carrier c(2, 0, 1);
    return Algebra("b2", SemiringAlg{c, rows({{0, 1}, {1, 1}}), rows({{0, 0}, {0, 1}})});
}

Algebra b2_reslat() {
    Carrier c(2, 0, 1);
    return Algebra("b2", ReslatAlg{c,
                                   rows({{0, 1}, {1, 1}}),    // join = or
                                   rows({{0, 0}, {0, 1}}),    // meet = and
                                   rows({{0, 0}, {0, 1}}),    // odot = and
                                   rows({{1, 1}, {0, 1}})});  // res = implication
}

Algebra b2_mv() {
    Carrier c = Carrier::unchecked(2, 0, 1);
    return Algebra("b2", MvAlg{c, rows({{0, 1}, {1, 1}}), UnOp(2, {1, 0})});
}

Algebra g3_semiring() {
    Carrier c(3, 0, 2);
    return Algebra("g3", SemiringAlg{c, rows({{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}),
                                     rows({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}})});
}

Algebra g3_reslat() {
    Carrier c(3, 0, 2);
    return Algebra("g3", ReslatAlg{c, rows({{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}),
                                   rows({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}}),
                                   rows({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}}),
                                   rows({{2, 2, 2}, {0, 2, 2}, {0, 1, 2}})});
}

Algebra l3_semiring() {
    Carrier c(3, 0, 2);
    return Algebra("l3", SemiringAlg{c, rows({{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}),
                                     rows({{0, 0, 0}, {0, 0, 1}, {0, 1, 2}})});
}

Algebra l3_reslat() {
    Carrier c(3, 0, 2);
    return Algebra("l3", ReslatAlg{c, rows({{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}),
                                   rows({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}}),
                                   rows({{0, 0, 0}, {0, 0, 1}, {0, 1, 2}}),
                                   rows({{2, 2, 2}, {1, 2, 2}, {0, 1, 2}})});
}

Algebra l3_mv() {
    Carrier c = Carrier::unchecked(3, 0, 2);
    return Algebra("l3", MvAlg{c, rows({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}), UnOp(3, {2, 1, 0})});
}

Algebra b4_semiring() {
    Carrier c(4, 0, 3);
    return Algebra("b4",
                   SemiringAlg{c,
                               rows({{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}}),
                               rows({{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}})});
}

Algebra b4_reslat() {
    Carrier c(4, 0, 3);
    return Algebra("b4",
                   ReslatAlg{c,
                             rows({{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}}),
                             rows({{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}}),
                             rows({{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}}),
                             rows({{3, 3, 3, 3}, {2, 3, 2, 3}, {1, 1, 3, 3}, {0, 1, 2, 3}})});
}

Algebra n3_semiring() {
    Carrier c(3, 0, 1);
    return Algebra("n3", SemiringAlg{c, rows({{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}),
                                     rows({{0, 0, 0}, {0, 1, 2}, {0, 2, 2}})});
}

OrderRel hexagon_order() {
    // 0 < {1,2} < {3,4} < 5; within a level incomparable; 1 < 3, 1 < 4,
    // 2 < 3, 2 < 4 all hold, so {1,2} has two minimal upper bounds.
    std::vector<char> leq = {
        1, 1, 1, 1, 1, 1,  //
        0, 1, 0, 1, 1, 1,  //
        0, 0, 1, 1, 1, 1,  //
        0, 0, 0, 1, 0, 1,  //
        0, 0, 0, 0, 1, 1,  //
        0, 0, 0, 0, 0, 1,  //
    };
    return OrderRel(6, leq);
}

Algebra b2_reslat_res_all_one() {
    Carrier c(2, 0, 1);
    return Algebra("b2-bad-res", ReslatAlg{c, rows({{0, 1}, {1, 1}}), rows({{0, 0}, {0, 1}}),
                                           rows({{0, 0}, {0, 1}}), rows({{1, 1}, {1, 1}})});
}

Algebra b2_semiring_mul_broken() {
    Carrier c(2, 0, 1);
    return Algebra("b2-bad-mul",
                   SemiringAlg{c, rows({{0, 1}, {1, 1}}), rows({{0, 0}, {0, 0}})});
}

Algebra b2_mv_neg_identity() {
    Carrier c = Carrier::unchecked(2, 0, 0);
    return Algebra("b2-bad-neg", MvAlg{c, rows({{0, 1}, {1, 1}}), UnOp(2, {0, 1})});
}

std::string fixture_path(const std::string& filename) {
    return std::string(RESLAT_FIXTURE_DIR) + "/" + filename;
}

}  // namespace fixtures
