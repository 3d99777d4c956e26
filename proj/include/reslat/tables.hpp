#pragma once

// Finite carriers and total operation tables. Everything is a small value
// type; validity checks are plain full scans, which is fine at the sizes
// this library targets.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reslat {

class algebra_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input text did not conform to the algebra file grammar.
class parse_error : public algebra_error {
public:
    parse_error(int line, int column, const std::string& message);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

// A required law or structural precondition does not hold. Carries the law
// name and the lexicographically least witness tuple.
class law_violation : public algebra_error {
public:
    law_violation(std::string law, std::vector<int> witness, const std::string& message);
    const std::string& law() const noexcept { return law_; }
    const std::vector<int>& witness() const noexcept { return witness_; }

private:
    std::string law_;
    std::vector<int> witness_;
};

// Requested size exceeds the configured search guard.
class resource_limit_error : public algebra_error {
public:
    using algebra_error::algebra_error;
};

// Universe {0, ..., size-1} with designated constants 0 and 1. The constants
// may sit at any index; they coincide only on a one-element carrier.
class Carrier {
public:
    Carrier(int size, int zero_idx, int one_idx);

    // Skips the zero != one distinctness check. Needed for mv values, where
    // 1 is the derived element neg(0) and may collide with 0 in ill-formed
    // input that still has to parse and then fail its law suite.
    static Carrier unchecked(int size, int zero_idx, int one_idx);

    int size() const noexcept { return size_; }
    int zero() const noexcept { return zero_; }
    int one() const noexcept { return one_; }
    bool degenerate() const noexcept { return size_ == 1; }

    friend bool operator==(const Carrier&, const Carrier&) = default;

private:
    Carrier() = default;
    int size_ = 1;
    int zero_ = 0;
    int one_ = 0;
};

// Total binary operation as an n-by-n lookup table, row = left operand.
class BinOp {
public:
    BinOp(int n, std::vector<int> flat);
    static BinOp from_rows(const std::vector<std::vector<int>>& rows);
    static BinOp constant(int n, int value);

    int size() const noexcept { return n_; }
    int operator()(int x, int y) const { return flat_[x * n_ + y]; }
    const std::vector<int>& flat() const noexcept { return flat_; }

    friend bool operator==(const BinOp&, const BinOp&) = default;

private:
    int n_;
    std::vector<int> flat_;
};

// Total unary operation as a length-n table.
class UnOp {
public:
    UnOp(int n, std::vector<int> table);

    int size() const noexcept { return static_cast<int>(table_.size()); }
    int operator()(int x) const { return table_[x]; }
    const std::vector<int>& table() const noexcept { return table_; }

    friend bool operator==(const UnOp&, const UnOp&) = default;

private:
    std::vector<int> table_;
};

// Binary relation on {0..n-1} kept as a flat boolean matrix. Helper scans
// let callers verify the partial-order axioms explicitly.
class OrderRel {
public:
    OrderRel(int n, std::vector<char> leq);

    int size() const noexcept { return n_; }
    bool leq(int x, int y) const { return leq_[x * n_ + y] != 0; }

    bool reflexive() const;
    bool antisymmetric() const;
    bool transitive() const;

    std::optional<int> bottom() const;  // least element, if any
    std::optional<int> top() const;     // greatest element, if any

    const std::vector<char>& flat() const noexcept { return leq_; }

    friend bool operator==(const OrderRel&, const OrderRel&) = default;

private:
    int n_;
    std::vector<char> leq_;
};

}  // namespace reslat
