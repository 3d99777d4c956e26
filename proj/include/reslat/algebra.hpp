#pragma once

// Tagged containers for the three structure kinds this library handles:
// semirings (add, mul), residuated lattices (join, meet, odot, res) and
// mv values (oplus, neg). No laws are checked here; these are raw tables
// plus a name, and the law suites live in the *_laws headers.

#include <string>
#include <variant>
#include <vector>

#include "reslat/tables.hpp"

namespace reslat {

enum class Kind { semiring, reslat, mv };

std::string kind_name(Kind kind);
Kind kind_from_name(const std::string& name);  // throws parse_error-free std::invalid_argument

struct SemiringAlg {
    Carrier carrier;
    BinOp add;
    BinOp mul;

    friend bool operator==(const SemiringAlg&, const SemiringAlg&) = default;
};

struct ReslatAlg {
    Carrier carrier;
    BinOp join;
    BinOp meet;
    BinOp odot;
    BinOp res;

    friend bool operator==(const ReslatAlg&, const ReslatAlg&) = default;
};

// For mv the unit is not stored in the file; carrier.one() is set to neg(zero)
// at construction time.
struct MvAlg {
    Carrier carrier;
    BinOp oplus;
    UnOp neg;

    friend bool operator==(const MvAlg&, const MvAlg&) = default;
};

class Algebra {
public:
    Algebra(std::string name, SemiringAlg alg);
    Algebra(std::string name, ReslatAlg alg);
    Algebra(std::string name, MvAlg alg);

    const std::string& name() const noexcept { return name_; }
    void rename(std::string name) { name_ = std::move(name); }

    Kind kind() const;
    const Carrier& carrier() const;

    const SemiringAlg& semiring() const;  // throws std::bad_variant_access on kind mismatch
    const ReslatAlg& reslat() const;
    const MvAlg& mv() const;

private:
    std::string name_;
    std::variant<SemiringAlg, ReslatAlg, MvAlg> variant_;

    friend bool tables_equal(const Algebra&, const Algebra&);
};

// Relabel every element through the permutation pi (pi[x] is the new index of
// old element x). Tables transform by t'(pi(x), pi(y)) = pi(t(x, y)) and the
// designated constants move with pi.
Algebra permute(const Algebra& alg, const std::vector<int>& pi);

// Same kind and identical tables/constants; names are ignored.
bool tables_equal(const Algebra& a, const Algebra& b);

}  // namespace reslat
