#pragma once

// Exhaustive enumeration of the finite members of each class up to
// isomorphism, the named-law evaluation registry used by the sweep and
// counterexample-search commands, and the sweep driver itself.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reslat/algebra.hpp"
#include "reslat/report.hpp"

namespace reslat {

enum class EnumKind {
    semiring_cis,   // addition idempotent + mul commutative + x+1 = 1
    reslat,         // residuated lattices
    dnl_semiring,   // semiring_cis members satisfying the shift laws
    semiring_ci,    // no x+1 = 1 requirement
};

std::string enum_kind_name(EnumKind kind);
EnumKind enum_kind_from_name(const std::string& name);  // throws std::invalid_argument

struct EnumOptions {
    int size_guard = 6;  // refuse sizes above this (RESLAT_MAX_SIZE overrides)
};

// All members of the class with the given carrier size, one per isomorphism
// class, in canonical form, sorted ascending by canonical key, named
// "<kind>_n<size>_<index>". Throws resource_limit_error above the guard.
std::vector<Algebra> enumerate_algebras(EnumKind kind, int size, const EnumOptions& options = {});

// Evaluates a named law against one algebra. Names are dispatched on the
// algebra's kind; unknown names throw std::invalid_argument listing nothing.
// Returns the law entry (pass/witness).
LawEntry eval_law(const std::string& law, const Algebra& alg);

std::vector<std::string> known_laws(Kind kind);

struct SweepSizeStats {
    int size = 0;
    std::int64_t instances = 0;
    std::int64_t failures = 0;
};

struct SweepFailure {
    int size = 0;
    std::string algebra_name;
    std::string law;
    std::vector<int> witness;
};

struct SweepReport {
    std::string id;
    std::vector<SweepSizeStats> per_size;
    std::vector<SweepFailure> failures;

    std::int64_t total_instances() const;
    bool passed() const { return failures.empty(); }
};

// Sweep ids:
//   T1   every lattice's extracted semiring passes the full flag suite
//   C1   every semiring's constructed lattice passes the residuated suite
//   T4   the negation-based and order-based constructions agree
//   T5   odot idempotent iff odot = meet and the lattice is distributive
//   T6   extracted semirings of double-negation lattices pass the shift laws
//   T7i  semiring -> lattice -> semiring is the identity
//   T7ii lattice -> semiring -> lattice is the identity
//   C2   idempotent double-negation lattices are Boolean
//   C3   the product-negation identity tracks prelinearity of the expansion
SweepReport sweep_verify(const std::string& id, int max_size, const EnumOptions& options = {});

std::vector<std::string> known_sweeps();

// First member of the class (by enumeration order) where the law fails;
// nullopt when none exists up to max_size.
std::optional<std::pair<Algebra, LawEntry>> find_counterexample(
    EnumKind kind, const std::string& law, int max_size, const EnumOptions& options = {});

}  // namespace reslat
