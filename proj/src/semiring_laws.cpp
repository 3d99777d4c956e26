#include "reslat/semiring_laws.hpp"

#include "reslat/order.hpp"

namespace reslat {

LawReport check_semiring(const SemiringAlg& alg) {
    const int n = alg.carrier.size();
    const int zero = alg.carrier.zero();
    const int one = alg.carrier.one();
    const BinOp& add = alg.add;
    const BinOp& mul = alg.mul;

    LawReport report;
    report.degenerate = alg.carrier.degenerate();
    report.add(detail::law3("add_assoc", n, [&](int x, int y, int z) {
        return add(add(x, y), z) == add(x, add(y, z));
    }));
    report.add(detail::law2("add_comm", n, [&](int x, int y) {
        return add(x, y) == add(y, x);
    }));
    report.add(detail::law1("add_neutral", n, [&](int x) {
        return add(x, zero) == x && add(zero, x) == x;
    }));
    report.add(detail::law3("mul_assoc", n, [&](int x, int y, int z) {
        return mul(mul(x, y), z) == mul(x, mul(y, z));
    }));
    report.add(detail::law1("mul_neutral", n, [&](int x) {
        return mul(x, one) == x && mul(one, x) == x;
    }));
    report.add(detail::law3("distrib_left", n, [&](int x, int y, int z) {
        return mul(x, add(y, z)) == add(mul(x, y), mul(x, z));
    }));
    report.add(detail::law3("distrib_right", n, [&](int x, int y, int z) {
        return mul(add(x, y), z) == add(mul(x, z), mul(y, z));
    }));
    report.add(detail::law1("annihilation", n, [&](int x) {
        return mul(x, zero) == zero && mul(zero, x) == zero;
    }));
    return report;
}

bool VarietyFlags::all() const {
    return idempotent.pass && commutative.pass && simple.pass && completely_distributive.pass;
}

LawReport VarietyFlags::report() const {
    LawReport r;
    r.add(idempotent);
    r.add(commutative);
    r.add(simple);
    r.add(completely_distributive);
    return r;
}

VarietyFlags check_variety_flags(const SemiringAlg& alg) {
    const int n = alg.carrier.size();
    const int one = alg.carrier.one();
    const BinOp& add = alg.add;
    const BinOp& mul = alg.mul;

    VarietyFlags flags;
    flags.idempotent = detail::law1("idempotent", n, [&](int x) { return add(x, x) == x; });
    flags.commutative = detail::law2("commutative", n, [&](int x, int y) {
        return mul(x, y) == mul(y, x);
    });
    flags.simple = detail::law1("simple", n, [&](int x) { return add(x, one) == one; });

    // Finite carriers admit no infinitary phenomena: once addition is
    // idempotent, multiplication commutative and the base distributivity
    // laws hold, distribution over every finite sum follows by induction.
    LawReport base = check_semiring(alg);
    LawEntry cd;
    cd.name = "completely_distributive";
    cd.note = "automatic on a finite carrier";
    const LawEntry* first_fail = nullptr;
    for (const LawEntry* e : {&flags.idempotent, &flags.commutative}) {
        if (!e->pass && !first_fail) first_fail = e;
    }
    if (!first_fail) {
        for (const LawEntry& e : base.entries) {
            if (!e.pass) {
                first_fail = &e;
                break;
            }
        }
    }
    if (first_fail) {
        cd.pass = false;
        cd.witness = first_fail->witness;
        cd.note = "prerequisite " + first_fail->name + " failed";
    }
    flags.completely_distributive = cd;
    return flags;
}

LawEntry check_isotone(const SemiringAlg& alg) {
    const int n = alg.carrier.size();
    const BinOp& mul = alg.mul;
    OrderRel order = induced_order(alg.add);
    return detail::law3("isotone", n, [&](int a, int b, int c) {
        if (!order.leq(a, b)) return true;
        return order.leq(mul(a, c), mul(b, c)) && order.leq(mul(c, a), mul(c, b));
    });
}

}  // namespace reslat
