#include "reslat/residuated_laws.hpp"

#include <stdexcept>

#include "reslat/order.hpp"

namespace reslat {

namespace {

// Order used by the adjointness and consistency entries: x <= y iff
// join(x, y) = y. Valid only when the join entries pass.
bool join_order_usable(const LawReport& report) {
    for (const char* name : {"join_assoc", "join_comm", "join_idem"}) {
        const LawEntry* e = report.find(name);
        if (!e || !e->pass) return false;
    }
    return true;
}

}  // namespace

LawReport check_residuated(const ReslatAlg& alg) {
    const int n = alg.carrier.size();
    const int zero = alg.carrier.zero();
    const int one = alg.carrier.one();
    const BinOp& join = alg.join;
    const BinOp& meet = alg.meet;
    const BinOp& odot = alg.odot;
    const BinOp& res = alg.res;

    LawReport report;
    report.degenerate = alg.carrier.degenerate();
    report.add(detail::law3("join_assoc", n, [&](int x, int y, int z) {
        return join(join(x, y), z) == join(x, join(y, z));
    }));
    report.add(detail::law2("join_comm", n, [&](int x, int y) {
        return join(x, y) == join(y, x);
    }));
    report.add(detail::law1("join_idem", n, [&](int x) { return join(x, x) == x; }));
    report.add(detail::law3("meet_assoc", n, [&](int x, int y, int z) {
        return meet(meet(x, y), z) == meet(x, meet(y, z));
    }));
    report.add(detail::law2("meet_comm", n, [&](int x, int y) {
        return meet(x, y) == meet(y, x);
    }));
    report.add(detail::law1("meet_idem", n, [&](int x) { return meet(x, x) == x; }));
    report.add(detail::law2("absorb_join", n, [&](int x, int y) {
        return join(x, meet(x, y)) == x;
    }));
    report.add(detail::law2("absorb_meet", n, [&](int x, int y) {
        return meet(x, join(x, y)) == x;
    }));
    report.add(detail::law1("join_zero", n, [&](int x) { return join(x, zero) == x; }));
    report.add(detail::law1("join_one", n, [&](int x) { return join(x, one) == one; }));
    report.add(detail::law1("meet_one", n, [&](int x) { return meet(x, one) == x; }));
    report.add(detail::law1("meet_zero", n, [&](int x) { return meet(x, zero) == zero; }));
    report.add(detail::law3("odot_assoc", n, [&](int x, int y, int z) {
        return odot(odot(x, y), z) == odot(x, odot(y, z));
    }));
    report.add(detail::law2("odot_comm", n, [&](int x, int y) {
        return odot(x, y) == odot(y, x);
    }));
    report.add(detail::law1("odot_neutral", n, [&](int x) {
        return odot(x, one) == x && odot(one, x) == x;
    }));

    if (join_order_usable(report)) {
        auto leq = [&](int x, int y) { return join(x, y) == y; };
        report.add(detail::law3("adjointness", n, [&](int x, int y, int z) {
            return leq(odot(x, y), z) == leq(x, res(y, z));
        }));
        report.add(detail::law2("meet_order_consistent", n, [&](int x, int y) {
            return (meet(x, y) == x) == leq(x, y);
        }));
    }
    return report;
}

UnOp negation_of(const ReslatAlg& alg) {
    const int n = alg.carrier.size();
    std::vector<int> table(n);
    for (int x = 0; x < n; ++x) table[x] = alg.res(x, alg.carrier.zero());
    return UnOp(n, std::move(table));
}

LawReport check_negation_laws(const ReslatAlg& alg) {
    const int n = alg.carrier.size();
    const int zero = alg.carrier.zero();
    const int one = alg.carrier.one();
    const BinOp& join = alg.join;
    const BinOp& odot = alg.odot;
    const BinOp& res = alg.res;
    UnOp neg = negation_of(alg);
    auto leq = [&](int x, int y) { return join(x, y) == y; };

    LawReport report;
    report.degenerate = alg.carrier.degenerate();
    report.add(detail::law2("residuum_greatest", n, [&](int a, int b) {
        // res(a, b) must qualify and dominate every qualifying x.
        if (!leq(odot(res(a, b), a), b)) return false;
        for (int x = 0; x < n; ++x) {
            if (leq(odot(x, a), b) && !leq(x, res(a, b))) return false;
        }
        return true;
    }));
    report.add(detail::law0("neg_zero", neg(zero) == one));
    report.add(detail::law0("neg_one", neg(one) == zero));
    report.add(detail::law1("neg_contra", n, [&](int a) {
        return odot(a, neg(a)) == zero;
    }));
    report.add(detail::law1("neg_double_intro", n, [&](int a) {
        return leq(a, neg(neg(a)));
    }));
    report.add(detail::law2("neg_antitone", n, [&](int a, int b) {
        if (!leq(a, b)) return true;
        return leq(neg(b), neg(a));
    }));
    return report;
}

const char* optional_law_name(OptionalLaw law) {
    switch (law) {
        case OptionalLaw::double_negation: return "double_negation";
        case OptionalLaw::idempotent: return "idempotent";
        case OptionalLaw::prelinear: return "prelinear";
        case OptionalLaw::divisible: return "divisible";
    }
    throw std::invalid_argument("unhandled optional law");
}

LawEntry check_optional_law(const ReslatAlg& alg, OptionalLaw law) {
    const int n = alg.carrier.size();
    const int one = alg.carrier.one();
    const BinOp& join = alg.join;
    const BinOp& meet = alg.meet;
    const BinOp& odot = alg.odot;
    const BinOp& res = alg.res;
    UnOp neg = negation_of(alg);

    switch (law) {
        case OptionalLaw::double_negation:
            return detail::law1("double_negation", n, [&](int x) {
                return neg(neg(x)) == x;
            });
        case OptionalLaw::idempotent:
            return detail::law1("idempotent", n, [&](int x) { return odot(x, x) == x; });
        case OptionalLaw::prelinear:
            return detail::law2("prelinear", n, [&](int x, int y) {
                return join(res(x, y), res(y, x)) == one;
            });
        case OptionalLaw::divisible:
            return detail::law2("divisible", n, [&](int x, int y) {
                return meet(x, y) == odot(x, res(x, y));
            });
    }
    throw std::invalid_argument("unhandled optional law");
}

std::pair<bool, LawReport> check_boolean(const ReslatAlg& alg) {
    const int n = alg.carrier.size();
    const int zero = alg.carrier.zero();
    const int one = alg.carrier.one();
    const BinOp& join = alg.join;
    const BinOp& meet = alg.meet;
    UnOp neg = negation_of(alg);

    LawReport report;
    report.degenerate = alg.carrier.degenerate();
    report.add(detail::law3("lattice_distributive", n, [&](int x, int y, int z) {
        return meet(x, join(y, z)) == join(meet(x, y), meet(x, z));
    }));
    report.add(detail::law1("complement_join", n, [&](int x) {
        return join(x, neg(x)) == one;
    }));
    report.add(detail::law1("complement_meet", n, [&](int x) {
        return meet(x, neg(x)) == zero;
    }));
    return {report.passed(), report};
}

LawReport check_mv(const MvAlg& alg) {
    const int n = alg.carrier.size();
    const int zero = alg.carrier.zero();
    const BinOp& oplus = alg.oplus;
    const UnOp& neg = alg.neg;
    const int top = neg(zero);

    LawReport report;
    report.degenerate = alg.carrier.degenerate();
    report.add(detail::law3("oplus_assoc", n, [&](int x, int y, int z) {
        return oplus(oplus(x, y), z) == oplus(x, oplus(y, z));
    }));
    report.add(detail::law2("oplus_comm", n, [&](int x, int y) {
        return oplus(x, y) == oplus(y, x);
    }));
    report.add(detail::law1("oplus_zero", n, [&](int x) { return oplus(x, zero) == x; }));
    report.add(detail::law1("oplus_top", n, [&](int x) { return oplus(x, top) == top; }));
    report.add(detail::law1("neg_involution", n, [&](int x) { return neg(neg(x)) == x; }));
    report.add(detail::law2("mv_exchange", n, [&](int x, int y) {
        return oplus(neg(oplus(neg(x), y)), y) == oplus(neg(oplus(neg(y), x)), x);
    }));
    return report;
}

ReslatAlg mv_to_reslat(const MvAlg& alg) {
    LawReport suite = check_mv(alg);
    for (const LawEntry& e : suite.entries) {
        if (!e.pass)
            throw law_violation(e.name, e.witness, "mv laws fail; cannot derive a lattice");
    }
    const int n = alg.carrier.size();
    const BinOp& oplus = alg.oplus;
    const UnOp& neg = alg.neg;
    auto impl = [&](int x, int y) { return oplus(neg(x), y); };

    std::vector<int> join_flat(static_cast<std::size_t>(n) * n);
    std::vector<int> meet_flat(static_cast<std::size_t>(n) * n);
    std::vector<int> odot_flat(static_cast<std::size_t>(n) * n);
    std::vector<int> res_flat(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const int i = x * n + y;
            join_flat[i] = impl(impl(x, y), y);
            odot_flat[i] = neg(oplus(neg(x), neg(y)));
            res_flat[i] = impl(x, y);
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            meet_flat[x * n + y] = neg(join_flat[neg(x) * n + neg(y)]);
        }
    }
    Carrier carrier(n, alg.carrier.zero(), neg(alg.carrier.zero()));
    return ReslatAlg{carrier, BinOp(n, std::move(join_flat)), BinOp(n, std::move(meet_flat)),
                     BinOp(n, std::move(odot_flat)), BinOp(n, std::move(res_flat))};
}

}  // namespace reslat
