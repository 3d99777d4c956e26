#include "reslat/algebra.hpp"

#include <stdexcept>

namespace reslat {

std::string kind_name(Kind kind) {
    switch (kind) {
        case Kind::semiring: return "semiring";
        case Kind::reslat: return "reslat";
        case Kind::mv: return "mv";
    }
    throw std::invalid_argument("unhandled kind");
}

Kind kind_from_name(const std::string& name) {
    if (name == "semiring") return Kind::semiring;
    if (name == "reslat") return Kind::reslat;
    if (name == "mv") return Kind::mv;
    throw std::invalid_argument("unknown kind: " + name);
}

Algebra::Algebra(std::string name, SemiringAlg alg)
    : name_(std::move(name)), variant_(std::move(alg)) {}

Algebra::Algebra(std::string name, ReslatAlg alg)
    : name_(std::move(name)), variant_(std::move(alg)) {}

Algebra::Algebra(std::string name, MvAlg alg)
    : name_(std::move(name)), variant_(std::move(alg)) {}

Kind Algebra::kind() const {
    if (std::holds_alternative<SemiringAlg>(variant_)) return Kind::semiring;
    if (std::holds_alternative<ReslatAlg>(variant_)) return Kind::reslat;
    return Kind::mv;
}

const Carrier& Algebra::carrier() const {
    if (auto* s = std::get_if<SemiringAlg>(&variant_)) return s->carrier;
    if (auto* r = std::get_if<ReslatAlg>(&variant_)) return r->carrier;
    return std::get<MvAlg>(variant_).carrier;
}

const SemiringAlg& Algebra::semiring() const { return std::get<SemiringAlg>(variant_); }
const ReslatAlg& Algebra::reslat() const { return std::get<ReslatAlg>(variant_); }
const MvAlg& Algebra::mv() const { return std::get<MvAlg>(variant_); }

namespace {

void check_permutation(const std::vector<int>& pi, int n) {
    if (static_cast<int>(pi.size()) != n)
        throw algebra_error("permutation has wrong length");
    std::vector<char> seen(n, 0);
    for (int v : pi) {
        if (v < 0 || v >= n || seen[v])
            throw algebra_error("not a permutation");
        seen[v] = 1;
    }
}

BinOp permute_bin(const BinOp& op, const std::vector<int>& pi) {
    const int n = op.size();
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            flat[pi[x] * n + pi[y]] = pi[op(x, y)];
        }
    }
    return BinOp(n, std::move(flat));
}

UnOp permute_un(const UnOp& op, const std::vector<int>& pi) {
    const int n = op.size();
    std::vector<int> table(n);
    for (int x = 0; x < n; ++x) table[pi[x]] = pi[op(x)];
    return UnOp(n, std::move(table));
}

}  // namespace

Algebra permute(const Algebra& alg, const std::vector<int>& pi) {
    const int n = alg.carrier().size();
    check_permutation(pi, n);
    switch (alg.kind()) {
        case Kind::semiring: {
            const auto& s = alg.semiring();
            Carrier carrier(n, pi[s.carrier.zero()], pi[s.carrier.one()]);
            return Algebra(alg.name(),
                           SemiringAlg{carrier, permute_bin(s.add, pi), permute_bin(s.mul, pi)});
        }
        case Kind::reslat: {
            const auto& r = alg.reslat();
            Carrier carrier(n, pi[r.carrier.zero()], pi[r.carrier.one()]);
            return Algebra(alg.name(),
                           ReslatAlg{carrier, permute_bin(r.join, pi), permute_bin(r.meet, pi),
                                     permute_bin(r.odot, pi), permute_bin(r.res, pi)});
        }
        case Kind::mv: {
            const auto& m = alg.mv();
            Carrier carrier =
                Carrier::unchecked(n, pi[m.carrier.zero()], pi[m.carrier.one()]);
            return Algebra(alg.name(),
                           MvAlg{carrier, permute_bin(m.oplus, pi), permute_un(m.neg, pi)});
        }
    }
    throw std::invalid_argument("unhandled kind");
}

bool tables_equal(const Algebra& a, const Algebra& b) {
    return a.variant_ == b.variant_;
}

}  // namespace reslat
