#include <doctest.h>

#include <vector>

#include "fixtures.hpp"
#include "reslat/algebra.hpp"
#include "reslat/semiring_laws.hpp"

using namespace reslat;

namespace {

const char* kBaseEntries[] = {"add_assoc",    "add_comm",     "add_neutral",
                              "mul_assoc",    "mul_neutral",  "distrib_left",
                              "distrib_right", "annihilation"};

}  // namespace

TEST_CASE("the base suite passes on every bundled semiring") {
    for (const Algebra& alg : {fixtures::b2_semiring(), fixtures::g3_semiring(),
                               fixtures::l3_semiring(), fixtures::b4_semiring(),
                               fixtures::n3_semiring()}) {
        LawReport report = check_semiring(alg.semiring());
        CHECK(report.passed());
        REQUIRE(report.entries.size() == 8);
        for (std::size_t i = 0; i < report.entries.size(); ++i) {
            CHECK(report.entries[i].name == kBaseEntries[i]);
        }
    }
}

TEST_CASE("variety flags hold on the bounded chains and the diamond") {
    for (const Algebra& alg : {fixtures::b2_semiring(), fixtures::g3_semiring(),
                               fixtures::l3_semiring(), fixtures::b4_semiring()}) {
        VarietyFlags flags = check_variety_flags(alg.semiring());
        CHECK(flags.idempotent.pass);
        CHECK(flags.commutative.pass);
        CHECK(flags.simple.pass);
        CHECK(flags.completely_distributive.pass);
        CHECK(flags.completely_distributive.note == "automatic on a finite carrier");
        CHECK(flags.all());
    }
}

TEST_CASE("a floating top breaks only the absorption flag") {
    VarietyFlags flags = check_variety_flags(fixtures::n3_semiring().semiring());
    CHECK(flags.idempotent.pass);
    CHECK(flags.commutative.pass);
    CHECK_FALSE(flags.simple.pass);
    CHECK(flags.simple.witness == std::vector<int>{2});
    // Distributivity over arbitrary joins does not depend on absorption.
    CHECK(flags.completely_distributive.pass);
    CHECK(flags.completely_distributive.note == "automatic on a finite carrier");
    CHECK_FALSE(flags.all());
    LawReport report = flags.report();
    REQUIRE(report.entries.size() == 4);
    CHECK(report.entries[0].name == "idempotent");
    CHECK(report.entries[1].name == "commutative");
    CHECK(report.entries[2].name == "simple");
    CHECK(report.entries[3].name == "completely_distributive");
}

TEST_CASE("a broken unit row is caught with the least witness") {
    Algebra broken = fixtures::b2_semiring_mul_broken();
    LawReport report = check_semiring(broken.semiring());
    CHECK_FALSE(report.passed());
    const LawEntry* entry = report.find("mul_neutral");
    REQUIRE(entry != nullptr);
    CHECK_FALSE(entry->pass);
    CHECK(entry->witness == std::vector<int>{1});
    // Everything else about the constant-zero multiplication is fine.
    for (const char* name : {"mul_assoc", "distrib_left", "distrib_right", "annihilation"}) {
        const LawEntry* other = report.find(name);
        REQUIRE(other != nullptr);
        CHECK(other->pass);
    }
}

TEST_CASE("witnesses are the first failing tuple in row-major order") {
    // add(1,1) = 0 breaks idempotence exactly at 1; add stays commutative.
    SemiringAlg xor_like{Carrier(2, 0, 1), BinOp::from_rows({{0, 1}, {1, 0}}),
                         BinOp::from_rows({{0, 0}, {0, 1}})};
    VarietyFlags flags = check_variety_flags(xor_like);
    CHECK_FALSE(flags.idempotent.pass);
    CHECK(flags.idempotent.witness == std::vector<int>{1});
    // A commutative idempotent but non-associative addition: the scan runs
    // (a,b,c) row-major with c fastest, so the first failing triple is
    // (1,1,2), where (1+1)+2 = 0 but 1+(1+2) = 1.
    SemiringAlg skewed{Carrier(3, 0, 2),
                       BinOp::from_rows({{0, 1, 2}, {1, 1, 0}, {2, 0, 2}}),
                       BinOp::constant(3, 0)};
    LawReport base = check_semiring(skewed);
    const LawEntry* assoc = base.find("add_assoc");
    REQUIRE(assoc != nullptr);
    CHECK_FALSE(assoc->pass);
    CHECK(assoc->witness == std::vector<int>{1, 1, 2});
}

TEST_CASE("multiplication is isotone for the induced order on all fixtures") {
    for (const Algebra& alg : {fixtures::b2_semiring(), fixtures::g3_semiring(),
                               fixtures::l3_semiring(), fixtures::b4_semiring(),
                               fixtures::n3_semiring()}) {
        LawEntry entry = check_isotone(alg.semiring());
        CHECK(entry.name == "isotone");
        CHECK(entry.pass);
    }
}

TEST_CASE("isotonicity checking needs a usable additive order") {
    SemiringAlg alg{Carrier(2, 0, 1), BinOp::from_rows({{0, 1}, {1, 0}}),
                    BinOp::from_rows({{0, 0}, {0, 1}})};
    CHECK_THROWS_AS(check_isotone(alg), law_violation);
}

TEST_CASE("the degenerate one-point semiring satisfies everything") {
    SemiringAlg alg{Carrier(1, 0, 0), BinOp::constant(1, 0), BinOp::constant(1, 0)};
    CHECK(check_semiring(alg).passed());
    VarietyFlags flags = check_variety_flags(alg);
    CHECK(flags.all());
}
