#include "reslat/tables.hpp"

#include <algorithm>
#include <sstream>

namespace reslat {

namespace {

std::string locate(int line, int column, const std::string& message) {
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << message;
    return os.str();
}

std::string tag(const std::string& law, const std::vector<int>& witness,
                const std::string& message) {
    std::ostringstream os;
    os << message << " [" << law << " witness=(";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) os << ",";
        os << witness[i];
    }
    os << ")]";
    return os.str();
}

}  // namespace

parse_error::parse_error(int line, int column, const std::string& message)
    : algebra_error(locate(line, column, message)), line_(line), column_(column) {}

law_violation::law_violation(std::string law, std::vector<int> witness,
                             const std::string& message)
    : algebra_error(tag(law, witness, message)),
      law_(std::move(law)),
      witness_(std::move(witness)) {}

Carrier::Carrier(int size, int zero_idx, int one_idx) {
    if (size < 1) throw algebra_error("carrier size must be at least 1");
    if (zero_idx < 0 || zero_idx >= size) throw algebra_error("zero index out of range");
    if (one_idx < 0 || one_idx >= size) throw algebra_error("one index out of range");
    if (size > 1 && zero_idx == one_idx)
        throw algebra_error("zero and one must differ on a carrier of size > 1");
    size_ = size;
    zero_ = zero_idx;
    one_ = one_idx;
}

Carrier Carrier::unchecked(int size, int zero_idx, int one_idx) {
    if (size < 1) throw algebra_error("carrier size must be at least 1");
    if (zero_idx < 0 || zero_idx >= size) throw algebra_error("zero index out of range");
    if (one_idx < 0 || one_idx >= size) throw algebra_error("one index out of range");
    Carrier c;
    c.size_ = size;
    c.zero_ = zero_idx;
    c.one_ = one_idx;
    return c;
}

BinOp::BinOp(int n, std::vector<int> flat) : n_(n), flat_(std::move(flat)) {
    if (n < 1) throw algebra_error("operation arity domain must be non-empty");
    if (static_cast<int>(flat_.size()) != n * n)
        throw algebra_error("binary table has wrong number of entries");
    for (int v : flat_) {
        if (v < 0 || v >= n) throw algebra_error("binary table entry out of range");
    }
}

BinOp BinOp::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw algebra_error("binary table row has wrong length");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return BinOp(n, std::move(flat));
}

BinOp BinOp::constant(int n, int value) {
    return BinOp(n, std::vector<int>(static_cast<std::size_t>(n) * n, value));
}

UnOp::UnOp(int n, std::vector<int> table) : table_(std::move(table)) {
    if (n < 1) throw algebra_error("operation arity domain must be non-empty");
    if (static_cast<int>(table_.size()) != n)
        throw algebra_error("unary table has wrong number of entries");
    for (int v : table_) {
        if (v < 0 || v >= n) throw algebra_error("unary table entry out of range");
    }
}

OrderRel::OrderRel(int n, std::vector<char> leq) : n_(n), leq_(std::move(leq)) {
    if (n < 1) throw algebra_error("order domain must be non-empty");
    if (static_cast<int>(leq_.size()) != n * n)
        throw algebra_error("order relation has wrong number of entries");
}

bool OrderRel::reflexive() const {
    for (int x = 0; x < n_; ++x) {
        if (!leq(x, x)) return false;
    }
    return true;
}

bool OrderRel::antisymmetric() const {
    for (int x = 0; x < n_; ++x) {
        for (int y = x + 1; y < n_; ++y) {
            if (leq(x, y) && leq(y, x)) return false;
        }
    }
    return true;
}

bool OrderRel::transitive() const {
    for (int x = 0; x < n_; ++x) {
        for (int y = 0; y < n_; ++y) {
            if (!leq(x, y)) continue;
            for (int z = 0; z < n_; ++z) {
                if (leq(y, z) && !leq(x, z)) return false;
            }
        }
    }
    return true;
}

std::optional<int> OrderRel::bottom() const {
    for (int b = 0; b < n_; ++b) {
        bool least = true;
        for (int x = 0; x < n_; ++x) {
            if (!leq(b, x)) {
                least = false;
                break;
            }
        }
        if (least) return b;
    }
    return std::nullopt;
}

std::optional<int> OrderRel::top() const {
    for (int t = 0; t < n_; ++t) {
        bool greatest = true;
        for (int x = 0; x < n_; ++x) {
            if (!leq(x, t)) {
                greatest = false;
                break;
            }
        }
        if (greatest) return t;
    }
    return std::nullopt;
}

}  // namespace reslat
