#include "reslat/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "reslat/canonical.hpp"
#include "reslat/constructions.hpp"
#include "reslat/order.hpp"
#include "reslat/residuated_laws.hpp"
#include "reslat/semiring_laws.hpp"

namespace reslat {

std::string enum_kind_name(EnumKind kind) {
    switch (kind) {
        case EnumKind::semiring_cis: return "semiring_cis";
        case EnumKind::reslat: return "reslat";
        case EnumKind::dnl_semiring: return "dnl_semiring";
        case EnumKind::semiring_ci: return "semiring_ci";
    }
    throw std::invalid_argument("unhandled enumeration kind");
}

EnumKind enum_kind_from_name(const std::string& name) {
    if (name == "semiring_cis") return EnumKind::semiring_cis;
    if (name == "reslat") return EnumKind::reslat;
    if (name == "dnl_semiring") return EnumKind::dnl_semiring;
    if (name == "semiring_ci" || name == "semiring_commutative_idempotent")
        return EnumKind::semiring_ci;
    throw std::invalid_argument("unknown enumeration kind: " + name);
}

namespace {

struct OrderCandidate {
    OrderRel order;
    BinOp join;
};

BinOp join_table_of(const OrderRel& order) {
    const int n = order.size();
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            flat[x * n + y] = supremum(order, {x, y});
        }
    }
    return BinOp(n, std::move(flat));
}

// Lexicographically least relabeling of the relation under permutations
// fixing index 0 and index n-1, applied so every isomorphism class of orders
// is explored on exactly one labeling.
std::vector<char> order_min_form(const OrderRel& order) {
    const int n = order.size();
    std::vector<int> middles;
    for (int x = 1; x < n - 1; ++x) middles.push_back(x);

    std::vector<char> best;
    std::vector<int> pi(n);
    std::vector<int> targets = middles;
    do {
        for (int x = 0; x < n; ++x) pi[x] = x;
        for (std::size_t i = 0; i < middles.size(); ++i) pi[middles[i]] = targets[i];
        std::vector<char> flat(static_cast<std::size_t>(n) * n, 0);
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                if (order.leq(x, y)) flat[pi[x] * n + pi[y]] = 1;
            }
        }
        if (best.empty() || flat < best) best = std::move(flat);
    } while (std::next_permutation(targets.begin(), targets.end()));
    return best;
}

// All lattice orders on {0..n-1} with least element 0, one labeling per
// isomorphism class (under permutations fixing 0 and n-1). With pin_top the
// greatest element is required to sit at index n-1.
std::vector<OrderCandidate> bounded_lattice_orders(int n, bool pin_top) {
    std::vector<OrderCandidate> result;
    if (n == 1) {
        OrderRel trivial(1, {1});
        result.push_back({trivial, join_table_of(trivial)});
        return result;
    }

    const int hi = pin_top ? n - 2 : n - 1;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= hi; ++i) {
        for (int j = i + 1; j <= hi; ++j) pairs.push_back({i, j});
    }

    std::vector<std::vector<char>> seen;
    std::vector<int> state(pairs.size(), 0);  // 0: i<j, 1: i>j, 2: incomparable
    while (true) {
        std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
        for (int x = 0; x < n; ++x) {
            leq[x * n + x] = 1;
            leq[0 * n + x] = 1;
            if (pin_top) leq[x * n + (n - 1)] = 1;
        }
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            auto [i, j] = pairs[p];
            if (state[p] == 0) leq[i * n + j] = 1;
            if (state[p] == 1) leq[j * n + i] = 1;
        }
        OrderRel rel(n, std::move(leq));
        if (rel.transitive()) {
            bool lattice = true;
            try {
                meet_table(rel);
                BinOp join = join_table_of(rel);
                std::vector<char> key = order_min_form(rel);
                if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
                    seen.push_back(key);
                    OrderRel canon(n, key);
                    result.push_back({canon, join_table_of(canon)});
                }
            } catch (const law_violation&) {
                lattice = false;
            }
            (void)lattice;
        }

        // advance the mixed-radix state
        std::size_t p = 0;
        while (p < state.size() && state[p] == 2) {
            state[p] = 0;
            ++p;
        }
        if (p == state.size()) break;
        ++state[p];
    }
    return result;
}

// Depth-first completion of the multiplication table on one fixed order.
// Cells on the zero row/column and the unit row/column are forced; the rest
// are filled symmetrically with pruning by isotonicity and by partial
// associativity/distributivity checks.
void mul_search(const OrderCandidate& cand, bool require_simple,
                std::vector<SemiringAlg>& out) {
    const OrderRel& order = cand.order;
    const BinOp& join = cand.join;
    const int n = order.size();
    const Carrier carrier = (n == 1) ? Carrier(1, 0, 0) : Carrier(n, 0, n - 1);

    std::vector<int> mul(static_cast<std::size_t>(n) * n, -1);
    auto cell = [&mul, n](int x, int y) -> int& { return mul[x * n + y]; };
    for (int x = 0; x < n; ++x) {
        cell(0, x) = 0;
        cell(x, 0) = 0;
    }
    for (int x = 0; x < n; ++x) {
        cell(n - 1, x) = x;
        cell(x, n - 1) = x;
    }
    cell(0, n - 1) = 0;
    cell(n - 1, 0) = 0;

    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= n - 2; ++i) {
        for (int j = i; j <= n - 2; ++j) cells.push_back({i, j});
    }

    const bool one_is_top = order.top() && *order.top() == n - 1;

    auto isotone_ok = [&](int i, int j, int v) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                const int known = cell(a, b);
                if (known < 0) continue;
                if (order.leq(a, i) && order.leq(b, j) && !order.leq(known, v)) return false;
                if (order.leq(i, a) && order.leq(j, b) && !order.leq(v, known)) return false;
                if (order.leq(a, j) && order.leq(b, i) && !order.leq(known, v)) return false;
                if (order.leq(j, a) && order.leq(i, b) && !order.leq(v, known)) return false;
            }
        }
        return true;
    };

    auto partial_laws_ok = [&]() {
        for (int x = 0; x < n; ++x) {
            for (int y = 0; y < n; ++y) {
                const int xy = cell(x, y);
                for (int z = 0; z < n; ++z) {
                    if (xy >= 0) {
                        const int left = cell(xy, z);
                        const int yz = cell(y, z);
                        if (left >= 0 && yz >= 0) {
                            const int right = cell(x, yz);
                            if (right >= 0 && left != right) return false;
                        }
                    }
                    const int xs = cell(x, join(y, z));
                    const int a = cell(x, y);
                    const int b = cell(x, z);
                    if (xs >= 0 && a >= 0 && b >= 0 && xs != join(a, b)) return false;
                }
            }
        }
        return true;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            BinOp mulop(n, mul);
            SemiringAlg alg{carrier, join, mulop};
            if (!check_semiring(alg).passed()) return;
            VarietyFlags flags = check_variety_flags(alg);
            if (!flags.idempotent.pass || !flags.commutative.pass) return;
            if (require_simple && !flags.simple.pass) return;
            out.push_back(std::move(alg));
            return;
        }
        auto [i, j] = cells[k];
        for (int v = 0; v < n; ++v) {
            if (one_is_top && !(order.leq(v, i) && order.leq(v, j))) continue;
            if (!isotone_ok(i, j, v)) continue;
            cell(i, j) = v;
            cell(j, i) = v;
            if (partial_laws_ok()) rec(k + 1);
            cell(i, j) = -1;
            cell(j, i) = -1;
        }
    };
    rec(0);
}

void check_guard(int size, const EnumOptions& options) {
    if (size < 1) throw std::invalid_argument("size must be at least 1");
    if (size > options.size_guard)
        throw resource_limit_error("size " + std::to_string(size) +
                                   " exceeds the resource guard of " +
                                   std::to_string(options.size_guard));
}

std::vector<Algebra> rename_stream(std::vector<Algebra> stream, const std::string& kind_label,
                                   int size) {
    int idx = 0;
    for (Algebra& alg : stream) {
        alg.rename(kind_label + "_n" + std::to_string(size) + "_" + std::to_string(idx));
        ++idx;
    }
    return stream;
}

std::vector<Algebra> enumerate_semirings(int size, bool require_simple,
                                         const EnumOptions& options) {
    check_guard(size, options);
    std::map<std::vector<int>, Algebra> by_key;
    for (const OrderCandidate& cand : bounded_lattice_orders(size, require_simple)) {
        std::vector<SemiringAlg> found;
        mul_search(cand, require_simple, found);
        for (SemiringAlg& s : found) {
            Algebra canon = canonical_form(Algebra("candidate", std::move(s)));
            by_key.emplace(canonical_key(canon), std::move(canon));
        }
    }
    std::vector<Algebra> stream;
    stream.reserve(by_key.size());
    for (auto& [key, alg] : by_key) stream.push_back(std::move(alg));
    return stream;
}

}  // namespace

std::vector<Algebra> enumerate_algebras(EnumKind kind, int size, const EnumOptions& options) {
    switch (kind) {
        case EnumKind::semiring_cis:
            return rename_stream(enumerate_semirings(size, true, options), "semiring_cis", size);
        case EnumKind::semiring_ci:
            return rename_stream(enumerate_semirings(size, false, options), "semiring_ci", size);
        case EnumKind::dnl_semiring: {
            std::vector<Algebra> filtered;
            for (Algebra& alg : enumerate_semirings(size, true, options)) {
                if (check_dnl(alg.semiring()).passed()) filtered.push_back(std::move(alg));
            }
            return rename_stream(std::move(filtered), "dnl_semiring", size);
        }
        case EnumKind::reslat: {
            std::map<std::vector<int>, Algebra> by_key;
            for (const Algebra& alg : enumerate_semirings(size, true, options)) {
                ReslatAlg lattice = to_residuated_lattice(alg.semiring());
                if (!check_residuated(lattice).passed())
                    throw algebra_error(
                        "internal error: a constructed lattice failed its law suite");
                Algebra canon = canonical_form(Algebra("candidate", std::move(lattice)));
                by_key.emplace(canonical_key(canon), std::move(canon));
            }
            std::vector<Algebra> stream;
            stream.reserve(by_key.size());
            for (auto& [key, alg] : by_key) stream.push_back(std::move(alg));
            return rename_stream(std::move(stream), "reslat", size);
        }
    }
    throw std::invalid_argument("unhandled enumeration kind");
}

namespace {

template <class F>
LawEntry guarded(const std::string& name, F&& body) {
    try {
        return body();
    } catch (const law_violation& e) {
        LawEntry entry;
        entry.name = name;
        entry.pass = false;
        entry.witness = e.witness();
        entry.note = "precondition " + e.law() + " failed";
        return entry;
    }
}

LawEntry renamed(LawEntry entry, const std::string& name) {
    entry.name = name;
    return entry;
}

LawEntry composite(const std::string& name, const LawReport& report) {
    LawEntry entry;
    entry.name = name;
    entry.pass = report.passed();
    if (!entry.pass) {
        for (const LawEntry& e : report.entries) {
            if (!e.pass) {
                entry.witness = e.witness;
                entry.note = "first failing component: " + e.name;
                break;
            }
        }
    }
    return entry;
}

LawEntry found_or_fail(const LawReport& report, const std::string& name,
                       const std::string& lookup) {
    if (const LawEntry* e = report.find(lookup)) return renamed(*e, name);
    LawEntry entry;
    entry.name = name;
    entry.pass = false;
    entry.note = "not evaluated: join semilattice laws fail";
    return entry;
}

const std::vector<std::string>& semiring_base_names() {
    static const std::vector<std::string> names = {
        "add_assoc", "add_comm",      "add_neutral",   "mul_assoc",
        "mul_neutral", "distrib_left", "distrib_right", "annihilation"};
    return names;
}

const std::vector<std::string>& reslat_base_names() {
    static const std::vector<std::string> names = {
        "join_assoc", "join_comm", "join_idem", "meet_assoc", "meet_comm", "meet_idem",
        "absorb_join", "absorb_meet", "join_zero", "join_one", "meet_one", "meet_zero",
        "odot_assoc", "odot_comm", "odot_neutral", "adjointness", "meet_order_consistent"};
    return names;
}

LawEntry eval_semiring_law(const std::string& law, const SemiringAlg& alg) {
    const auto& base = semiring_base_names();
    if (std::find(base.begin(), base.end(), law) != base.end()) {
        return *check_semiring(alg).find(law);
    }
    if (law == "idempotent") return check_variety_flags(alg).idempotent;
    if (law == "commutative") return check_variety_flags(alg).commutative;
    if (law == "simple") return check_variety_flags(alg).simple;
    if (law == "completely_distributive")
        return check_variety_flags(alg).completely_distributive;
    if (law == "isotone")
        return guarded(law, [&] { return check_isotone(alg); });
    if (law == "dnl_i" || law == "dnl_axiom_i")
        return guarded(law, [&] { return renamed(*check_dnl(alg).find("dnl_i"), law); });
    if (law == "dnl_ii" || law == "dnl_axiom_ii")
        return guarded(law, [&] { return renamed(*check_dnl(alg).find("dnl_ii"), law); });
    if (law == "dnl_iii" || law == "dnl_axiom_iii")
        return guarded(law, [&] { return renamed(*check_dnl(alg).find("dnl_iii"), law); });
    if (law == "dnl")
        return guarded(law, [&] { return composite(law, check_dnl(alg)); });
    if (law == "prelinearity_identity")
        return guarded(law, [&] {
            auto [pass, witness] = check_prelinearity_identity(alg);
            LawEntry entry;
            entry.name = law;
            entry.pass = pass;
            entry.witness = witness;
            return entry;
        });
    if (law == "adjointness_of_constructed_reslat")
        return guarded(law, [&] {
            ReslatAlg lattice = to_residuated_lattice(alg);
            return found_or_fail(check_residuated(lattice), law, "adjointness");
        });
    throw std::invalid_argument("unknown law '" + law + "' for kind semiring");
}

LawEntry eval_reslat_law(const std::string& law, const ReslatAlg& alg) {
    const auto& base = reslat_base_names();
    if (std::find(base.begin(), base.end(), law) != base.end()) {
        return found_or_fail(check_residuated(alg), law, law);
    }
    for (const char* name :
         {"residuum_greatest", "neg_zero", "neg_one", "neg_contra", "neg_double_intro",
          "neg_antitone"}) {
        if (law == name) return *check_negation_laws(alg).find(law);
    }
    if (law == "double_negation")
        return check_optional_law(alg, OptionalLaw::double_negation);
    if (law == "idempotent") return check_optional_law(alg, OptionalLaw::idempotent);
    if (law == "prelinear") return check_optional_law(alg, OptionalLaw::prelinear);
    if (law == "divisible") return check_optional_law(alg, OptionalLaw::divisible);
    for (const char* name : {"lattice_distributive", "complement_join", "complement_meet"}) {
        if (law == name) return *check_boolean(alg).second.find(law);
    }
    if (law == "boolean") return composite(law, check_boolean(alg).second);
    throw std::invalid_argument("unknown law '" + law + "' for kind reslat");
}

LawEntry eval_mv_law(const std::string& law, const MvAlg& alg) {
    for (const char* name : {"oplus_assoc", "oplus_comm", "oplus_zero", "oplus_top",
                             "neg_involution", "mv_exchange"}) {
        if (law == name) return *check_mv(alg).find(law);
    }
    if (law == "mv") return composite(law, check_mv(alg));
    throw std::invalid_argument("unknown law '" + law + "' for kind mv");
}

}  // namespace

LawEntry eval_law(const std::string& law, const Algebra& alg) {
    switch (alg.kind()) {
        case Kind::semiring: return eval_semiring_law(law, alg.semiring());
        case Kind::reslat: return eval_reslat_law(law, alg.reslat());
        case Kind::mv: return eval_mv_law(law, alg.mv());
    }
    throw std::invalid_argument("unhandled kind");
}

std::vector<std::string> known_laws(Kind kind) {
    switch (kind) {
        case Kind::semiring: {
            std::vector<std::string> names = semiring_base_names();
            for (const char* extra :
                 {"idempotent", "commutative", "simple", "completely_distributive", "isotone",
                  "dnl_i", "dnl_ii", "dnl_iii", "dnl_axiom_i", "dnl_axiom_ii", "dnl_axiom_iii",
                  "dnl", "prelinearity_identity", "adjointness_of_constructed_reslat"})
                names.push_back(extra);
            return names;
        }
        case Kind::reslat: {
            std::vector<std::string> names = reslat_base_names();
            for (const char* extra :
                 {"residuum_greatest", "neg_zero", "neg_one", "neg_contra", "neg_double_intro",
                  "neg_antitone", "double_negation", "idempotent", "prelinear", "divisible",
                  "lattice_distributive", "complement_join", "complement_meet", "boolean"})
                names.push_back(extra);
            return names;
        }
        case Kind::mv:
            return {"oplus_assoc", "oplus_comm", "oplus_zero", "oplus_top", "neg_involution",
                    "mv_exchange", "mv"};
    }
    throw std::invalid_argument("unhandled kind");
}

std::int64_t SweepReport::total_instances() const {
    std::int64_t total = 0;
    for (const SweepSizeStats& s : per_size) total += s.instances;
    return total;
}

namespace {

void record_failure(SweepReport& report, int size, const Algebra& alg, const LawEntry& entry) {
    report.failures.push_back({size, alg.name(), entry.name, entry.witness});
}

void record_first_failure(SweepReport& report, int size, const Algebra& alg,
                          const LawReport& suite) {
    for (const LawEntry& e : suite.entries) {
        if (!e.pass) {
            record_failure(report, size, alg, e);
            return;
        }
    }
}

}  // namespace

std::vector<std::string> known_sweeps() {
    return {"T1", "C1", "T4", "T5", "T6", "T7i", "T7ii", "C2", "C3"};
}

SweepReport sweep_verify(const std::string& id, int max_size, const EnumOptions& options) {
    const auto ids = known_sweeps();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw std::invalid_argument("unknown sweep id: " + id);
    if (max_size < 1) throw std::invalid_argument("max size must be at least 1");

    SweepReport report;
    report.id = id;
    for (int size = 1; size <= max_size; ++size) {
        SweepSizeStats stats;
        stats.size = size;
        const std::size_t failures_before = report.failures.size();

        if (id == "T1") {
            for (const Algebra& alg : enumerate_algebras(EnumKind::reslat, size, options)) {
                ++stats.instances;
                SemiringAlg extracted = to_semiring(alg.reslat());
                LawReport suite = check_semiring(extracted);
                suite.append(check_variety_flags(extracted).report());
                if (!suite.passed()) record_first_failure(report, size, alg, suite);
            }
        } else if (id == "C1") {
            for (const Algebra& alg :
                 enumerate_algebras(EnumKind::semiring_cis, size, options)) {
                ++stats.instances;
                try {
                    ReslatAlg lattice = to_residuated_lattice(alg.semiring());
                    LawReport suite = check_residuated(lattice);
                    if (!suite.passed()) record_first_failure(report, size, alg, suite);
                } catch (const law_violation& e) {
                    LawEntry entry;
                    entry.name = e.law();
                    entry.witness = e.witness();
                    record_failure(report, size, alg, entry);
                }
            }
        } else if (id == "T4") {
            for (const Algebra& alg :
                 enumerate_algebras(EnumKind::dnl_semiring, size, options)) {
                ++stats.instances;
                ReslatAlg via_negation = dnl_to_residuated_lattice(alg.semiring());
                ReslatAlg via_order = to_residuated_lattice(alg.semiring());
                LawEntry meets = detail::law2("construction_agreement_meet", size,
                                              [&](int x, int y) {
                                                  return via_negation.meet(x, y) ==
                                                         via_order.meet(x, y);
                                              });
                LawEntry res = detail::law2("construction_agreement_res", size,
                                            [&](int x, int y) {
                                                return via_negation.res(x, y) ==
                                                       via_order.res(x, y);
                                            });
                if (!meets.pass) record_failure(report, size, alg, meets);
                else if (!res.pass) record_failure(report, size, alg, res);
            }
        } else if (id == "T5") {
            for (const Algebra& alg : enumerate_algebras(EnumKind::reslat, size, options)) {
                ++stats.instances;
                const ReslatAlg& lattice = alg.reslat();
                const bool idem = check_optional_law(lattice, OptionalLaw::idempotent).pass;
                const bool same_tables = lattice.odot == lattice.meet;
                const bool distributive =
                    check_boolean(lattice).second.find("lattice_distributive")->pass;
                if (idem != (same_tables && distributive)) {
                    LawEntry entry;
                    entry.name = "odot_idempotent_equivalence";
                    record_failure(report, size, alg, entry);
                }
            }
        } else if (id == "T6") {
            for (const Algebra& alg : enumerate_algebras(EnumKind::reslat, size, options)) {
                if (!check_optional_law(alg.reslat(), OptionalLaw::double_negation).pass)
                    continue;
                ++stats.instances;
                SemiringAlg extracted = to_semiring(alg.reslat());
                LawReport suite = check_dnl(extracted);
                if (!suite.passed()) record_first_failure(report, size, alg, suite);
            }
        } else if (id == "T7i") {
            for (const Algebra& alg :
                 enumerate_algebras(EnumKind::dnl_semiring, size, options)) {
                ++stats.instances;
                LawReport suite = roundtrip(alg);
                if (!suite.passed()) record_first_failure(report, size, alg, suite);
            }
        } else if (id == "T7ii") {
            for (const Algebra& alg : enumerate_algebras(EnumKind::reslat, size, options)) {
                if (!check_optional_law(alg.reslat(), OptionalLaw::double_negation).pass)
                    continue;
                ++stats.instances;
                LawReport suite = roundtrip(alg);
                if (!suite.passed()) record_first_failure(report, size, alg, suite);
            }
        } else if (id == "C2") {
            for (const Algebra& alg : enumerate_algebras(EnumKind::reslat, size, options)) {
                const ReslatAlg& lattice = alg.reslat();
                if (!check_optional_law(lattice, OptionalLaw::idempotent).pass) continue;
                if (!check_optional_law(lattice, OptionalLaw::double_negation).pass) continue;
                ++stats.instances;
                auto [pass, suite] = check_boolean(lattice);
                if (!pass) record_first_failure(report, size, alg, suite);
            }
        } else if (id == "C3") {
            for (const Algebra& alg :
                 enumerate_algebras(EnumKind::dnl_semiring, size, options)) {
                ++stats.instances;
                auto [identity_holds, witness] = check_prelinearity_identity(alg.semiring());
                const bool lattice_prelinear =
                    check_optional_law(dnl_to_residuated_lattice(alg.semiring()),
                                       OptionalLaw::prelinear)
                        .pass;
                if (identity_holds != lattice_prelinear) {
                    LawEntry entry;
                    entry.name = "prelinearity_equivalence";
                    entry.witness = witness;
                    record_failure(report, size, alg, entry);
                }
            }
        }

        stats.failures = static_cast<std::int64_t>(report.failures.size() - failures_before);
        report.per_size.push_back(stats);
    }
    return report;
}

std::optional<std::pair<Algebra, LawEntry>> find_counterexample(EnumKind kind,
                                                               const std::string& law,
                                                               int max_size,
                                                               const EnumOptions& options) {
    Kind algebra_kind = (kind == EnumKind::reslat) ? Kind::reslat : Kind::semiring;
    const auto names = known_laws(algebra_kind);
    if (std::find(names.begin(), names.end(), law) == names.end())
        throw std::invalid_argument("unknown law '" + law + "' for kind '" +
                                    kind_name(algebra_kind) + "'");
    if (max_size < 1) throw std::invalid_argument("max size must be at least 1");

    for (int size = 1; size <= max_size; ++size) {
        for (const Algebra& alg : enumerate_algebras(kind, size, options)) {
            LawEntry entry = eval_law(law, alg);
            if (!entry.pass) return std::make_pair(alg, entry);
        }
    }
    return std::nullopt;
}

}  // namespace reslat
