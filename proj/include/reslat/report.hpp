#pragma once

// Law reports: an ordered list of named checks, each PASS or FAIL with a
// witness tuple, rendered in a stable line format that the CLI prints
// verbatim. Also the generic table-scan helpers that produce the
// lexicographically least witness for laws in 0 to 3 variables.

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace reslat {

struct LawEntry {
    std::string name;
    bool pass = true;
    std::vector<int> witness;     // least failing tuple; empty when pass
    std::string note;             // optional annotation rendered as a NOTE line

    friend bool operator==(const LawEntry&, const LawEntry&) = default;
};

struct LawReport {
    std::vector<LawEntry> entries;
    bool degenerate = false;      // one-element carrier; rendered as a NOTE

    bool passed() const;
    const LawEntry* find(const std::string& name) const;
    void add(LawEntry entry);
    void append(const LawReport& other);  // entries only; degenerate is or-ed
};

std::string render_witness(const std::vector<int>& witness);
std::string render_report(const LawReport& report);

namespace detail {

// Scan helpers. Each evaluates the predicate over all tuples in row-major
// order (last variable fastest) and reports the first failure, which is the
// lexicographically least one.

inline LawEntry law0(std::string name, bool ok, std::string note = {}) {
    LawEntry e;
    e.name = std::move(name);
    e.pass = ok;
    e.note = std::move(note);
    return e;
}

template <class Pred>
LawEntry law1(std::string name, int n, Pred&& holds) {
    LawEntry e;
    e.name = std::move(name);
    for (int x = 0; x < n; ++x) {
        if (!holds(x)) {
            e.pass = false;
            e.witness = {x};
            return e;
        }
    }
    return e;
}

template <class Pred>
LawEntry law2(std::string name, int n, Pred&& holds) {
    LawEntry e;
    e.name = std::move(name);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (!holds(x, y)) {
                e.pass = false;
                e.witness = {x, y};
                return e;
            }
        }
    }
    return e;
}

template <class Pred>
LawEntry law3(std::string name, int n, Pred&& holds) {
    LawEntry e;
    e.name = std::move(name);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                if (!holds(x, y, z)) {
                    e.pass = false;
                    e.witness = {x, y, z};
                    return e;
                }
            }
        }
    }
    return e;
}

}  // namespace detail
}  // namespace reslat
