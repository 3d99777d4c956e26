#include "reslat/io.hpp"

#include <charconv>
#include <sstream>
#include <utility>

namespace reslat {

namespace {

constexpr int kMaxSize = 1000;

struct Token {
    std::string text;
    int column;  // 1-based start column in the original line
};

struct Line {
    int number;  // 1-based
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw = (nl == std::string_view::npos)
                                   ? text.substr(pos)
                                   : text.substr(pos, nl - pos);
        ++number;
        std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
            line.tokens.push_back(
                {std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return lines;
}

class Parser {
public:
    explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

    Algebra parse() {
        const std::string name = keyword_line("algebra", "algebra name");
        const std::string kind_text = keyword_line("kind", "kind name");
        Kind kind;
        if (kind_text == "semiring") kind = Kind::semiring;
        else if (kind_text == "reslat") kind = Kind::reslat;
        else if (kind_text == "mv") kind = Kind::mv;
        else fail_at_value("unknown kind '" + kind_text + "'");

        n_ = keyword_int("size", 1, kMaxSize);
        const int zero = keyword_int("zero", 0, n_ - 1);
        int one = -1;
        if (kind != Kind::mv) {
            one = keyword_int("one", 0, n_ - 1);
            if (n_ > 1 && one == zero)
                fail_at_value("zero and one must be distinct elements");
        } else if (peek_keyword("one")) {
            fail_here("mv blocks do not declare one; the unit is neg applied to zero");
        }

        const std::vector<std::string> wanted = required_ops(kind);
        std::vector<BinOp> bins;
        std::vector<char> have(wanted.size(), 0);
        bins.reserve(wanted.size());
        std::vector<int> neg_table;
        // Collected out of order; slot i of `bins` matches wanted[i].
        std::vector<std::optional<BinOp>> slots(wanted.size());

        while (true) {
            const Line& line = current("op block or end");
            if (line.tokens[0].text == "end") {
                expect_width(line, 1);
                ++cursor_;
                break;
            }
            if (line.tokens[0].text != "op")
                fail(line, line.tokens[0].column,
                     "expected 'op <name>' or 'end', got '" + line.tokens[0].text + "'");
            expect_width(line, 2);
            const std::string op_name = line.tokens[1].text;
            int slot = -1;
            for (std::size_t i = 0; i < wanted.size(); ++i) {
                if (wanted[i] == op_name) slot = static_cast<int>(i);
            }
            if (slot < 0)
                fail(line, line.tokens[1].column,
                     "op '" + op_name + "' does not belong to kind '" + kind_name(kind) + "'");
            if (have[slot])
                fail(line, line.tokens[1].column, "duplicate op '" + op_name + "'");
            have[slot] = 1;
            ++cursor_;
            if (kind == Kind::mv && op_name == "neg") {
                neg_table = read_row();
            } else {
                slots[slot] = read_binary();
            }
        }

        if (cursor_ != lines_.size()) {
            const Line& extra = lines_[cursor_];
            fail(extra, extra.tokens[0].column, "unexpected content after end");
        }
        for (std::size_t i = 0; i < wanted.size(); ++i) {
            if (!have[i]) fail_last("missing op '" + wanted[i] + "'");
        }

        switch (kind) {
            case Kind::semiring: {
                Carrier carrier(n_, zero, one);
                return Algebra(name, SemiringAlg{carrier, *slots[0], *slots[1]});
            }
            case Kind::reslat: {
                Carrier carrier(n_, zero, one);
                return Algebra(name,
                               ReslatAlg{carrier, *slots[0], *slots[1], *slots[2], *slots[3]});
            }
            case Kind::mv: {
                UnOp neg(n_, neg_table);
                Carrier carrier = Carrier::unchecked(n_, zero, neg(zero));
                return Algebra(name, MvAlg{carrier, *slots[0], std::move(neg)});
            }
        }
        throw std::invalid_argument("unhandled kind");
    }

private:
    static std::vector<std::string> required_ops(Kind kind) {
        switch (kind) {
            case Kind::semiring: return {"add", "mul"};
            case Kind::reslat: return {"join", "meet", "odot", "res"};
            case Kind::mv: return {"oplus", "neg"};
        }
        throw std::invalid_argument("unhandled kind");
    }

    const Line& current(const std::string& what) {
        if (cursor_ >= lines_.size()) fail_last("unexpected end of input, expected " + what);
        return lines_[cursor_];
    }

    [[noreturn]] void fail(const Line& line, int column, const std::string& message) {
        throw parse_error(line.number, column, message);
    }

    [[noreturn]] void fail_last(const std::string& message) {
        const int line = lines_.empty() ? 1 : lines_.back().number;
        throw parse_error(line, 1, message);
    }

    [[noreturn]] void fail_here(const std::string& message) {
        const Line& line = lines_[cursor_];
        fail(line, line.tokens[0].column, message);
    }

    [[noreturn]] void fail_at_value(const std::string& message) {
        const Line& line = lines_[cursor_ - 1];
        fail(line, line.tokens[1].column, message);
    }

    void expect_width(const Line& line, int width) {
        if (static_cast<int>(line.tokens.size()) > width) {
            const Token& extra = line.tokens[width];
            fail(line, extra.column, "unexpected token '" + extra.text + "'");
        }
        if (static_cast<int>(line.tokens.size()) < width) {
            fail(line, line.tokens.back().column + static_cast<int>(line.tokens.back().text.size()),
                 "missing token");
        }
    }

    std::string keyword_line(const std::string& keyword, const std::string& what) {
        const Line& line = current("'" + keyword + " <" + what + ">'");
        if (line.tokens[0].text != keyword)
            fail(line, line.tokens[0].column,
                 "expected '" + keyword + "', got '" + line.tokens[0].text + "'");
        expect_width(line, 2);
        ++cursor_;
        return line.tokens[1].text;
    }

    bool peek_keyword(const std::string& keyword) const {
        return cursor_ < lines_.size() && lines_[cursor_].tokens[0].text == keyword;
    }

    int parse_int(const Line& line, const Token& token, int lo, int hi) {
        int value = 0;
        const char* begin = token.text.data();
        const char* end = begin + token.text.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end)
            fail(line, token.column, "expected an integer, got '" + token.text + "'");
        if (value < lo || value > hi) {
            std::ostringstream os;
            os << "value " << value << " out of range [" << lo << ", " << hi << "]";
            fail(line, token.column, os.str());
        }
        return value;
    }

    int keyword_int(const std::string& keyword, int lo, int hi) {
        const Line& line = current("'" + keyword + " <integer>'");
        if (line.tokens[0].text != keyword)
            fail(line, line.tokens[0].column,
                 "expected '" + keyword + "', got '" + line.tokens[0].text + "'");
        expect_width(line, 2);
        const int value = parse_int(line, line.tokens[1], lo, hi);
        ++cursor_;
        return value;
    }

    std::vector<int> read_row() {
        const Line& line = current("a table row");
        if (static_cast<int>(line.tokens.size()) != n_)
            fail(line, line.tokens[0].column,
                 "table row must have exactly " + std::to_string(n_) + " entries");
        std::vector<int> row;
        row.reserve(n_);
        for (const Token& token : line.tokens)
            row.push_back(parse_int(line, token, 0, n_ - 1));
        ++cursor_;
        return row;
    }

    BinOp read_binary() {
        std::vector<int> flat;
        flat.reserve(static_cast<std::size_t>(n_) * n_);
        for (int r = 0; r < n_; ++r) {
            std::vector<int> row = read_row();
            flat.insert(flat.end(), row.begin(), row.end());
        }
        return BinOp(n_, std::move(flat));
    }

    std::vector<Line> lines_;
    std::size_t cursor_ = 0;
    int n_ = 0;
};

void emit_binary(std::ostringstream& os, const std::string& name, const BinOp& op) {
    os << "op " << name << "\n";
    const int n = op.size();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (y) os << " ";
            os << op(x, y);
        }
        os << "\n";
    }
}

void emit_unary(std::ostringstream& os, const std::string& name, const UnOp& op) {
    os << "op " << name << "\n";
    const int n = op.size();
    for (int x = 0; x < n; ++x) {
        if (x) os << " ";
        os << op(x);
    }
    os << "\n";
}

}  // namespace

Algebra parse_algebra(std::string_view text) { return Parser(text).parse(); }

std::string emit_algebra(const Algebra& alg) {
    std::ostringstream os;
    os << "algebra " << alg.name() << "\n";
    os << "kind " << kind_name(alg.kind()) << "\n";
    os << "size " << alg.carrier().size() << "\n";
    os << "zero " << alg.carrier().zero() << "\n";
    if (alg.kind() != Kind::mv) os << "one " << alg.carrier().one() << "\n";
    switch (alg.kind()) {
        case Kind::semiring: {
            const auto& s = alg.semiring();
            emit_binary(os, "add", s.add);
            emit_binary(os, "mul", s.mul);
            break;
        }
        case Kind::reslat: {
            const auto& r = alg.reslat();
            emit_binary(os, "join", r.join);
            emit_binary(os, "meet", r.meet);
            emit_binary(os, "odot", r.odot);
            emit_binary(os, "res", r.res);
            break;
        }
        case Kind::mv: {
            const auto& m = alg.mv();
            emit_binary(os, "oplus", m.oplus);
            emit_unary(os, "neg", m.neg);
            break;
        }
    }
    os << "end\n";
    return os.str();
}

}  // namespace reslat
