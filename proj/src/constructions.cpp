#include "reslat/constructions.hpp"

#include <stdexcept>

#include "reslat/order.hpp"
#include "reslat/residuated_laws.hpp"
#include "reslat/semiring_laws.hpp"

namespace reslat {

namespace {

void require_report(const LawReport& report, const char* context) {
    for (const LawEntry& e : report.entries) {
        if (!e.pass)
            throw law_violation(e.name, e.witness, std::string(context) + " law fails");
    }
}

void require_flags(const SemiringAlg& alg) {
    require_report(check_semiring(alg), "semiring");
    VarietyFlags flags = check_variety_flags(alg);
    for (const LawEntry* e : {&flags.idempotent, &flags.commutative, &flags.simple}) {
        if (!e->pass)
            throw law_violation(e->name, e->witness, "required variety flag fails");
    }
}

}  // namespace

SemiringAlg to_semiring(const ReslatAlg& alg) {
    require_report(check_residuated(alg), "residuated lattice");
    return SemiringAlg{alg.carrier, alg.join, alg.odot};
}

BinOp residuum_from(const SemiringAlg& alg) {
    const int n = alg.carrier.size();
    OrderRel order = induced_order(alg.add);
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            std::vector<int> qualifying;
            for (int x = 0; x < n; ++x) {
                if (order.leq(alg.mul(a, x), b)) qualifying.push_back(x);
            }
            flat[a * n + b] = supremum(order, qualifying);
        }
    }
    return BinOp(n, std::move(flat));
}

ReslatAlg to_residuated_lattice(const SemiringAlg& alg) {
    require_flags(alg);
    OrderRel order = induced_order(alg.add);
    BinOp meet = meet_table(order);
    BinOp res = residuum_from(alg);
    return ReslatAlg{alg.carrier, alg.add, std::move(meet), alg.mul, std::move(res)};
}

UnOp negation_map(const SemiringAlg& alg) {
    const int n = alg.carrier.size();
    const int zero = alg.carrier.zero();
    OrderRel order = induced_order(alg.add);
    std::vector<int> table(n);
    for (int x = 0; x < n; ++x) {
        std::vector<int> annihilators;
        for (int y = 0; y < n; ++y) {
            if (alg.mul(x, y) == zero) annihilators.push_back(y);
        }
        table[x] = supremum(order, annihilators);
    }
    return UnOp(n, std::move(table));
}

LawReport check_dnl(const SemiringAlg& alg) {
    const int n = alg.carrier.size();
    const int zero = alg.carrier.zero();
    const BinOp& add = alg.add;
    const BinOp& mul = alg.mul;
    UnOp neg = negation_map(alg);

    LawReport report;
    report.degenerate = alg.carrier.degenerate();
    report.add(detail::law1("dnl_i", n, [&](int x) { return neg(neg(x)) == x; }));
    // The inequality form u <= y is taken additively as u + y = y.
    report.add(detail::law2("dnl_ii", n, [&](int x, int y) {
        const int u = mul(x, neg(mul(x, neg(y))));
        return add(u, y) == y;
    }));
    report.add(detail::law2("dnl_iii", n, [&](int x, int y) {
        return mul(x, neg(add(x, y))) == zero;
    }));
    return report;
}

ReslatAlg dnl_to_residuated_lattice(const SemiringAlg& alg) {
    require_flags(alg);
    LawReport dnl = check_dnl(alg);
    for (const LawEntry& e : dnl.entries) {
        if (!e.pass)
            throw law_violation(e.name, e.witness, "double-negation shift law fails");
    }
    const int n = alg.carrier.size();
    UnOp neg = negation_map(alg);
    std::vector<int> meet_flat(static_cast<std::size_t>(n) * n);
    std::vector<int> res_flat(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            meet_flat[x * n + y] = neg(alg.add(neg(x), neg(y)));
            res_flat[x * n + y] = neg(alg.mul(x, neg(y)));
        }
    }
    return ReslatAlg{alg.carrier, alg.add, BinOp(n, std::move(meet_flat)), alg.mul,
                     BinOp(n, std::move(res_flat))};
}

namespace {

LawEntry table_identity(const char* name, const BinOp& got, const BinOp& expected) {
    return detail::law2(name, got.size(), [&](int x, int y) {
        return got(x, y) == expected(x, y);
    });
}

LawReport roundtrip_semiring(const SemiringAlg& alg) {
    LawReport report;
    report.degenerate = alg.carrier.degenerate();

    LawReport base = check_semiring(alg);
    VarietyFlags flags = check_variety_flags(alg);
    bool precondition_ok = true;
    for (const LawEntry& e : base.entries) {
        if (!e.pass) {
            report.add(e);
            precondition_ok = false;
        }
    }
    for (const LawEntry* e : {&flags.idempotent, &flags.commutative, &flags.simple}) {
        if (!e->pass) {
            report.add(*e);
            precondition_ok = false;
        }
    }
    if (!precondition_ok) return report;

    LawReport dnl = check_dnl(alg);
    report.append(dnl);
    if (!dnl.passed()) return report;

    ReslatAlg lattice = dnl_to_residuated_lattice(alg);
    LawReport lattice_suite = check_residuated(lattice);
    LawEntry valid = detail::law0("constructed_reslat_valid", lattice_suite.passed());
    if (!valid.pass) {
        for (const LawEntry& e : lattice_suite.entries) {
            if (!e.pass) {
                valid.witness = e.witness;
                valid.note = "first failing lattice law: " + e.name;
                break;
            }
        }
    }
    report.add(valid);
    if (!valid.pass) return report;

    SemiringAlg back = to_semiring(lattice);
    report.add(table_identity("roundtrip_add_identity", back.add, alg.add));
    report.add(table_identity("roundtrip_mul_identity", back.mul, alg.mul));
    return report;
}

LawReport roundtrip_reslat(const ReslatAlg& alg) {
    LawReport report;
    report.degenerate = alg.carrier.degenerate();

    LawReport base = check_residuated(alg);
    bool precondition_ok = true;
    for (const LawEntry& e : base.entries) {
        if (!e.pass) {
            report.add(e);
            precondition_ok = false;
        }
    }
    if (!precondition_ok) return report;

    LawEntry dn = check_optional_law(alg, OptionalLaw::double_negation);
    report.add(dn);
    if (!dn.pass) return report;

    SemiringAlg mid = to_semiring(alg);
    LawReport dnl = check_dnl(mid);
    report.append(dnl);
    if (!dnl.passed()) return report;

    ReslatAlg back = dnl_to_residuated_lattice(mid);
    report.add(table_identity("roundtrip_join_identity", back.join, alg.join));
    report.add(table_identity("roundtrip_meet_identity", back.meet, alg.meet));
    report.add(table_identity("roundtrip_odot_identity", back.odot, alg.odot));
    report.add(table_identity("roundtrip_res_identity", back.res, alg.res));
    return report;
}

}  // namespace

LawReport roundtrip(const Algebra& alg) {
    switch (alg.kind()) {
        case Kind::semiring: return roundtrip_semiring(alg.semiring());
        case Kind::reslat: return roundtrip_reslat(alg.reslat());
        case Kind::mv:
            throw std::invalid_argument(
                "round trips are defined for semiring and reslat inputs; convert mv first");
    }
    throw std::invalid_argument("unhandled kind");
}

std::pair<bool, std::vector<int>> check_prelinearity_identity(const SemiringAlg& alg) {
    const int n = alg.carrier.size();
    UnOp neg = negation_map(alg);
    const BinOp& add = alg.add;
    const BinOp& mul = alg.mul;
    LawEntry entry = detail::law3("prelinearity_identity", n, [&](int x, int y, int z) {
        const int lhs = mul(x, neg(add(neg(y), neg(z))));
        const int rhs = neg(add(neg(mul(x, y)), neg(mul(x, z))));
        return lhs == rhs;
    });
    return {entry.pass, entry.witness};
}

}  // namespace reslat
