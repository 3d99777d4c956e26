#include "naive_oracle.hpp"

#include <algorithm>
#include <optional>

#include "reslat/algebra.hpp"
#include "reslat/canonical.hpp"
#include "reslat/residuated_laws.hpp"

namespace oracle {

namespace {

using reslat::Algebra;
using reslat::BinOp;
using reslat::Carrier;
using reslat::ReslatAlg;
using reslat::SemiringAlg;

// Flat n*n tables handled as raw vectors; t[x*n+y] is x (op) y.

bool add_laws_ok(const std::vector<int>& add, int n, bool require_simple) {
    const int zero = 0;
    const int one = n - 1;
    for (int x = 0; x < n; ++x) {
        if (add[x * n + x] != x) return false;                      // x + x = x
        if (add[x * n + zero] != x || add[zero * n + x] != x) return false;
        if (require_simple && add[x * n + one] != one) return false;
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (add[x * n + y] != add[y * n + x]) return false;
            for (int z = 0; z < n; ++z) {
                if (add[add[x * n + y] * n + z] != add[x * n + add[y * n + z]]) return false;
            }
        }
    }
    return true;
}

bool mul_laws_ok(const std::vector<int>& add, const std::vector<int>& mul, int n) {
    const int zero = 0;
    const int one = n - 1;
    for (int x = 0; x < n; ++x) {
        if (mul[x * n + one] != x || mul[one * n + x] != x) return false;
        if (mul[x * n + zero] != zero || mul[zero * n + x] != zero) return false;
    }
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (mul[x * n + y] != mul[y * n + x]) return false;
            for (int z = 0; z < n; ++z) {
                if (mul[mul[x * n + y] * n + z] != mul[x * n + mul[y * n + z]]) return false;
                if (mul[x * n + add[y * n + z]] !=
                    add[mul[x * n + y] * n + mul[x * n + z]])
                    return false;
                if (mul[add[x * n + y] * n + z] !=
                    add[mul[x * n + z] * n + mul[y * n + z]])
                    return false;
            }
        }
    }
    return true;
}

std::vector<int> semiring_key(const std::vector<int>& add, const std::vector<int>& mul, int n) {
    Carrier carrier = (n == 1) ? Carrier(1, 0, 0) : Carrier(n, 0, n - 1);
    Algebra alg("oracle", SemiringAlg{carrier, BinOp(n, add), BinOp(n, mul)});
    return reslat::canonical_key(alg);
}

void sort_and_keep(std::vector<std::vector<int>>& keys) {
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
}

// Ranges the cells listed in `free_cells` of a table over all of {0..n-1},
// invoking the sink for every combination.
template <class Sink>
void range_cells(std::vector<int>& table, const std::vector<std::pair<int, int>>& free_cells,
                 int n, std::size_t k, Sink&& sink) {
    if (k == free_cells.size()) {
        sink();
        return;
    }
    auto [i, j] = free_cells[k];
    for (int v = 0; v < n; ++v) {
        table[i * n + j] = v;
        table[j * n + i] = v;
        range_cells(table, free_cells, n, k + 1, sink);
    }
}

}  // namespace

std::vector<std::vector<int>> naive_semiring_keys(int n, bool require_simple) {
    const std::size_t total = static_cast<std::size_t>(n) * n;
    std::vector<std::vector<int>> keys;

    // Every table over the carrier, encoded as a base-n counter.
    std::vector<int> add(total, 0);
    while (true) {
        if (add_laws_ok(add, n, require_simple)) {
            std::vector<int> mul(total, 0);
            while (true) {
                if (mul_laws_ok(add, mul, n)) keys.push_back(semiring_key(add, mul, n));
                std::size_t p = 0;
                while (p < total && mul[p] == n - 1) mul[p++] = 0;
                if (p == total) break;
                ++mul[p];
            }
        }
        std::size_t p = 0;
        while (p < total && add[p] == n - 1) add[p++] = 0;
        if (p == total) break;
        ++add[p];
    }
    sort_and_keep(keys);
    return keys;
}

std::vector<std::vector<int>> forced_cell_semiring_keys(int n, bool require_simple) {
    const std::size_t total = static_cast<std::size_t>(n) * n;
    const int zero = 0;
    const int one = n - 1;
    std::vector<std::vector<int>> keys;

    std::vector<int> add(total, 0);
    std::vector<int> mul(total, 0);
    for (int x = 0; x < n; ++x) {
        add[x * n + x] = x;
        add[x * n + zero] = x;
        add[zero * n + x] = x;
        if (require_simple) {
            add[x * n + one] = one;
            add[one * n + x] = one;
        }
        mul[x * n + one] = x;
        mul[one * n + x] = x;
        mul[x * n + zero] = zero;
        mul[zero * n + x] = zero;
    }

    std::vector<std::pair<int, int>> add_cells;
    const int add_hi = require_simple ? n - 2 : n - 1;
    for (int i = 1; i <= add_hi; ++i) {
        for (int j = i + 1; j <= add_hi; ++j) add_cells.push_back({i, j});
    }
    std::vector<std::pair<int, int>> mul_cells;
    for (int i = 1; i <= n - 2; ++i) {
        for (int j = i; j <= n - 2; ++j) mul_cells.push_back({i, j});
    }

    range_cells(add, add_cells, n, 0, [&] {
        if (!add_laws_ok(add, n, require_simple)) return;
        range_cells(mul, mul_cells, n, 0, [&] {
            if (mul_laws_ok(add, mul, n)) keys.push_back(semiring_key(add, mul, n));
        });
    });
    sort_and_keep(keys);
    return keys;
}

std::vector<std::vector<int>> naive_reslat_keys(int n) {
    const std::size_t total = static_cast<std::size_t>(n) * n;
    const int zero = 0;
    const int one = n - 1;
    std::vector<std::vector<int>> keys;

    // Off-diagonal bits of the relation, driven as a binary counter.
    std::vector<std::pair<int, int>> slots;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x != y) slots.push_back({x, y});
        }
    }
    std::vector<char> bits(slots.size(), 0);

    while (true) {
        std::vector<char> leq(total, 0);
        for (int x = 0; x < n; ++x) leq[x * n + x] = 1;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if (bits[s]) leq[slots[s].first * n + slots[s].second] = 1;
        }

        auto LE = [&](int x, int y) { return leq[x * n + y] != 0; };
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            if (!LE(zero, x) || !LE(x, one)) ok = false;  // bounds
        }
        for (int x = 0; x < n && ok; ++x) {
            for (int y = 0; y < n && ok; ++y) {
                if (x != y && LE(x, y) && LE(y, x)) ok = false;  // antisymmetry
                if (!LE(x, y)) continue;
                for (int z = 0; z < n; ++z) {
                    if (LE(y, z) && !LE(x, z)) {
                        ok = false;  // transitivity
                        break;
                    }
                }
            }
        }

        // Join and meet tables; reject non-lattices.
        std::vector<int> join(total, 0);
        std::vector<int> meet(total, 0);
        for (int x = 0; x < n && ok; ++x) {
            for (int y = 0; y < n && ok; ++y) {
                int least_upper = -1;
                int greatest_lower = -1;
                for (int c = 0; c < n; ++c) {
                    if (LE(x, c) && LE(y, c)) {
                        bool least = true;
                        for (int u = 0; u < n; ++u) {
                            if (LE(x, u) && LE(y, u) && !LE(c, u)) {
                                least = false;
                                break;
                            }
                        }
                        if (least) least_upper = c;
                    }
                    if (LE(c, x) && LE(c, y)) {
                        bool greatest = true;
                        for (int l = 0; l < n; ++l) {
                            if (LE(l, x) && LE(l, y) && !LE(l, c)) {
                                greatest = false;
                                break;
                            }
                        }
                        if (greatest) greatest_lower = c;
                    }
                }
                if (least_upper < 0 || greatest_lower < 0) {
                    ok = false;
                } else {
                    join[x * n + y] = least_upper;
                    meet[x * n + y] = greatest_lower;
                }
            }
        }

        if (ok) {
            // odot: unit row forced by the literal monoid axiom; everything
            // else (zero row included) ranges freely over symmetric tables.
            std::vector<int> odot(total, 0);
            for (int x = 0; x < n; ++x) {
                odot[x * n + one] = x;
                odot[one * n + x] = x;
            }
            std::vector<std::pair<int, int>> cells;
            for (int i = 0; i <= n - 2; ++i) {
                for (int j = i; j <= n - 2; ++j) cells.push_back({i, j});
            }
            range_cells(odot, cells, n, 0, [&] {
                // Derive the residuum as the greatest qualifying element.
                std::vector<int> res(total, 0);
                for (int a = 0; a < n; ++a) {
                    for (int b = 0; b < n; ++b) {
                        int greatest = -1;
                        for (int c = 0; c < n; ++c) {
                            if (!LE(odot[c * n + a], b)) continue;
                            bool dominates = true;
                            for (int x = 0; x < n; ++x) {
                                if (LE(odot[x * n + a], b) && !LE(x, c)) {
                                    dominates = false;
                                    break;
                                }
                            }
                            if (dominates) {
                                greatest = c;
                                break;
                            }
                        }
                        if (greatest < 0) return;  // no maximum: adjointness unsatisfiable
                        res[a * n + b] = greatest;
                    }
                }
                Carrier carrier = (n == 1) ? Carrier(1, 0, 0) : Carrier(n, 0, n - 1);
                ReslatAlg alg{carrier, BinOp(n, join), BinOp(n, meet), BinOp(n, odot),
                              BinOp(n, res)};
                if (!reslat::check_residuated(alg).passed()) return;
                keys.push_back(reslat::canonical_key(Algebra("oracle", alg)));
            });
        }

        std::size_t s = 0;
        while (s < bits.size() && bits[s]) bits[s++] = 0;
        if (s == bits.size()) break;
        bits[s] = 1;
    }
    sort_and_keep(keys);
    return keys;
}

}  // namespace oracle
