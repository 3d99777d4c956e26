#include "reslat/order.hpp"

#include <algorithm>

namespace reslat {

OrderRel induced_order(const BinOp& add) {
    const int n = add.size();
    for (int x = 0; x < n; ++x) {
        if (add(x, x) != x)
            throw law_violation("add_idem", {x}, "addition is not idempotent");
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (add(x, y) != add(y, x))
                throw law_violation("add_comm", {x, y}, "addition is not commutative");
        }
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                if (add(add(x, y), z) != add(x, add(y, z)))
                    throw law_violation("add_assoc", {x, y, z}, "addition is not associative");
            }
        }
    }
    std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            leq[x * n + y] = (add(x, y) == y) ? 1 : 0;
        }
    }
    return OrderRel(n, std::move(leq));
}

int supremum(const OrderRel& order, const std::vector<int>& subset) {
    const int n = order.size();
    if (subset.empty()) {
        if (auto b = order.bottom()) return *b;
        throw law_violation("no_least_element", {},
                            "empty subset has no supremum: the order has no least element");
    }
    std::vector<int> uppers;
    for (int u = 0; u < n; ++u) {
        bool above_all = true;
        for (int s : subset) {
            if (!order.leq(s, u)) {
                above_all = false;
                break;
            }
        }
        if (above_all) uppers.push_back(u);
    }
    if (uppers.empty())
        throw law_violation("no_upper_bound", subset, "subset has no upper bound");
    for (int candidate : uppers) {
        bool least = true;
        for (int u : uppers) {
            if (!order.leq(candidate, u)) {
                least = false;
                break;
            }
        }
        if (least) return candidate;
    }
    // No least upper bound: witness two incomparable minimal upper bounds.
    std::vector<int> minimal;
    for (int u : uppers) {
        bool is_minimal = true;
        for (int v : uppers) {
            if (v != u && order.leq(v, u)) {
                is_minimal = false;
                break;
            }
        }
        if (is_minimal) minimal.push_back(u);
    }
    throw law_violation("no_least_upper_bound", {minimal[0], minimal[1]},
                        "subset has upper bounds but no least one");
}

BinOp meet_table(const OrderRel& order) {
    const int n = order.size();
    std::vector<int> flat(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            std::vector<int> lowers;
            for (int l = 0; l < n; ++l) {
                if (order.leq(l, x) && order.leq(l, y)) lowers.push_back(l);
            }
            if (lowers.empty())
                throw law_violation("not_a_lattice", {x, y},
                                    "two elements have no common lower bound");
            int greatest = -1;
            for (int candidate : lowers) {
                bool above_all = true;
                for (int l : lowers) {
                    if (!order.leq(l, candidate)) {
                        above_all = false;
                        break;
                    }
                }
                if (above_all) {
                    greatest = candidate;
                    break;
                }
            }
            if (greatest < 0) {
                std::vector<int> maximal;
                for (int l : lowers) {
                    bool is_maximal = true;
                    for (int m : lowers) {
                        if (m != l && order.leq(l, m)) {
                            is_maximal = false;
                            break;
                        }
                    }
                    if (is_maximal) maximal.push_back(l);
                }
                throw law_violation("not_a_lattice", {x, y, maximal[0], maximal[1]},
                                    "two elements lack a greatest lower bound");
            }
            flat[x * n + y] = greatest;
        }
    }
    return BinOp(n, std::move(flat));
}

}  // namespace reslat
