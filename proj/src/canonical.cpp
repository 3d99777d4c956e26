#include "reslat/canonical.hpp"

#include <algorithm>

#include "reslat/io.hpp"

namespace reslat {

namespace {

int kind_code(Kind kind) {
    switch (kind) {
        case Kind::semiring: return 0;
        case Kind::reslat: return 1;
        case Kind::mv: return 2;
    }
    return -1;
}

// Key of one concrete labeling: [kind, n, tables in emission order]. The
// constants need no slots because admissible relabelings pin them.
std::vector<int> labeling_key(const Algebra& alg) {
    std::vector<int> key;
    key.push_back(kind_code(alg.kind()));
    key.push_back(alg.carrier().size());
    auto push_bin = [&key](const BinOp& op) {
        key.insert(key.end(), op.flat().begin(), op.flat().end());
    };
    switch (alg.kind()) {
        case Kind::semiring:
            push_bin(alg.semiring().add);
            push_bin(alg.semiring().mul);
            break;
        case Kind::reslat:
            push_bin(alg.reslat().join);
            push_bin(alg.reslat().meet);
            push_bin(alg.reslat().odot);
            push_bin(alg.reslat().res);
            break;
        case Kind::mv:
            push_bin(alg.mv().oplus);
            key.insert(key.end(), alg.mv().neg.table().begin(), alg.mv().neg.table().end());
            break;
    }
    return key;
}

// All permutations sending zero to 0 and, for kinds with a stored unit on a
// carrier larger than 1, one to n-1.
template <class Visit>
void for_each_admissible(const Algebra& alg, Visit&& visit) {
    const int n = alg.carrier().size();
    const int zero = alg.carrier().zero();
    const bool pin_one = alg.kind() != Kind::mv && n > 1;
    const int one = alg.carrier().one();

    std::vector<int> sources;
    std::vector<int> targets;
    for (int x = 0; x < n; ++x) {
        if (x == zero) continue;
        if (pin_one && x == one) continue;
        sources.push_back(x);
    }
    for (int t = 0; t < n; ++t) {
        if (t == 0) continue;
        if (pin_one && t == n - 1) continue;
        targets.push_back(t);
    }

    std::vector<int> pi(n, -1);
    pi[zero] = 0;
    if (pin_one) pi[one] = n - 1;

    std::sort(targets.begin(), targets.end());
    do {
        for (std::size_t i = 0; i < sources.size(); ++i) pi[sources[i]] = targets[i];
        visit(pi);
    } while (std::next_permutation(targets.begin(), targets.end()));
}

std::pair<std::vector<int>, std::vector<int>> best_labeling(const Algebra& alg) {
    std::vector<int> best_key;
    std::vector<int> best_pi;
    for_each_admissible(alg, [&](const std::vector<int>& pi) {
        std::vector<int> key = labeling_key(permute(alg, pi));
        if (best_key.empty() || key < best_key) {
            best_key = std::move(key);
            best_pi = pi;
        }
    });
    return {std::move(best_key), std::move(best_pi)};
}

}  // namespace

std::vector<int> canonical_key(const Algebra& alg) { return best_labeling(alg).first; }

Algebra canonical_form(const Algebra& alg) {
    return permute(alg, best_labeling(alg).second);
}

std::string canonicalize(const Algebra& alg) {
    Algebra canon = canonical_form(alg);
    canon.rename("canonical");
    return emit_algebra(canon);
}

}  // namespace reslat
