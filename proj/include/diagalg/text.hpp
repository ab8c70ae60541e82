#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "diagram.hpp"
#include "ghostalg.hpp"
#include "labelalg.hpp"
#include "presentation.hpp"
#include "sympblob.hpp"

namespace diagalg {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& msg)
        : std::runtime_error("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                             ": " + msg),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

namespace detail {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) advance();
    }
    bool at_end() {
        skip_ws();
        return p_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return p_ < s_.size() ? s_[p_] : '\0';
    }
    bool lookahead(std::string_view tok) {
        skip_ws();
        return s_.substr(p_, tok.size()) == tok;
    }
    bool accept(std::string_view tok) {
        skip_ws();
        if (s_.substr(p_, tok.size()) != tok) return false;
        for (std::size_t k = 0; k < tok.size(); ++k) advance();
        return true;
    }
    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }
    std::string ident() {
        skip_ws();
        std::string r;
        while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) {
            r += s_[p_];
            advance();
        }
        return r;
    }
    int integer() {
        skip_ws();
        if (p_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[p_]))) fail("expected an integer");
        long v = 0;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
            v = v * 10 + (s_[p_] - '0');
            if (v > 1000000) fail("integer too large");
            advance();
        }
        return static_cast<int>(v);
    }
    void finish() {
        if (!at_end()) fail("unexpected trailing input");
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }
    int line() const { return line_; }
    int column() const { return col_; }

private:
    void advance() {
        if (s_[p_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++p_;
    }

    std::string_view s_;
    std::size_t p_ = 0;
    int line_ = 1, col_ = 1;
};

/// Comma-separated labels up to (not including) the next ';' or ')'.
inline std::vector<Label> label_list(Cursor& c) {
    std::vector<Label> out;
    if (c.peek() == ';' || c.peek() == ')') return out;
    do {
        auto l = c.ident();
        if (l.empty()) c.fail("expected a label");
        out.push_back(l);
    } while (c.accept(","));
    return out;
}

inline std::vector<int> bit_list(Cursor& c) {
    std::vector<int> out;
    do {
        int v = c.integer();
        if (v > 1) c.fail("ghost entries must be 0 or 1");
        out.push_back(v);
    } while (c.accept(","));
    return out;
}

inline Endpoint endpoint(Cursor& c) {
    Side s;
    if (c.accept("L")) s = Side::L;
    else if (c.accept("R")) s = Side::R;
    else if (c.accept("T")) s = Side::T;
    else if (c.accept("B")) s = Side::B;
    else c.fail("expected an endpoint L<i>, R<i>, T<k> or B<k>");
    return {s, c.integer()};
}

/// `(E,E);(E,E);...` stopping before `;<key>=` or `)`.
inline std::vector<Pair> pair_list(Cursor& c) {
    std::vector<Pair> ps;
    if (c.peek() != '(') return ps;
    for (bool first = true; first || c.lookahead(";("); first = false) {
        if (!first) c.expect(";");
        c.expect("(");
        Endpoint a = endpoint(c);
        c.expect(",");
        Endpoint b = endpoint(c);
        c.expect(")");
        ps.push_back({a, b});
    }
    return ps;
}

/// Runs a constructor, reporting its invariant violations at the start of the value.
template <class F>
auto semantic(int line, int col, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::exception& e) {
        throw ParseError(line, col, e.what());
    }
}

}  // namespace detail

inline LabelSet parse_label_set(std::string_view s) {
    detail::Cursor c(s);
    auto X = detail::label_list(c);
    c.finish();
    try {
        check_label_set(X);
    } catch (const std::exception& e) {
        throw ParseError(1, 1, e.what());
    }
    return X;
}

inline Diagram parse_diagram(std::string_view s) {
    detail::Cursor c(s);
    int line = (c.skip_ws(), c.line()), col = c.column();
    c.expect("D(");
    c.expect("n=");
    int n = c.integer();
    c.expect(";X=");
    auto X = detail::label_list(c);
    c.expect(";top=");
    auto top = detail::label_list(c);
    c.expect(";bottom=");
    auto bot = detail::label_list(c);
    c.expect(";pairs=");
    auto ps = detail::pair_list(c);
    c.expect(")");
    c.finish();
    return detail::semantic(line, col, [&] {
        check_label_set(X);
        return Diagram::make(n, X, top, bot, ps);
    });
}

inline GhostDiagram parse_ghost(std::string_view s) {
    detail::Cursor c(s);
    int line = (c.skip_ws(), c.line()), col = c.column();
    c.expect("G(");
    c.expect("n=");
    int n = c.integer();
    c.expect(";topGhosts=");
    auto tg = detail::bit_list(c);
    c.expect(";bottomGhosts=");
    auto bg = detail::bit_list(c);
    c.expect(";pairs=");
    auto ps = detail::pair_list(c);
    c.expect(")");
    c.finish();
    return detail::semantic(line, col, [&] {
        return GhostDiagram::make(n, tg, bg, ps, static_cast<int>(tg.size()) - 1, static_cast<int>(bg.size()) - 1);
    });
}

inline BlobDiagram parse_blob(std::string_view s) {
    detail::Cursor c(s);
    int line = (c.skip_ws(), c.line()), col = c.column();
    c.expect("S(");
    c.expect("n=");
    int n = c.integer();
    c.expect(";pairs=");
    auto ps = detail::pair_list(c);
    c.expect(";dec=");
    std::vector<std::pair<int, std::string>> dec;
    if (c.peek() != ')') {
        do {
            int k = c.integer();
            c.expect(":");
            auto d = c.ident();
            if (d.empty() || d.find_first_not_of("tb") != std::string::npos) c.fail("decoration must be over t and b");
            dec.push_back({k, d});
        } while (c.accept(";"));
    }
    c.expect(")");
    c.finish();
    return detail::semantic(line, col, [&] {
        BlobDiagram shape(n, ps);
        auto strs = shape.strings();
        std::vector<std::pair<Endpoint, std::string>> ds;
        for (auto& [k, d] : dec) {
            if (k < 1 || k > static_cast<int>(strs.size())) throw std::invalid_argument("no string " + std::to_string(k));
            ds.push_back({strs[k - 1].lower, d});
        }
        BlobDiagram b(n, ps, ds);
        if (auto v = b.validate()) throw std::invalid_argument(*v);
        return b;
    });
}

/// `ID` or generators joined by `.`: E<i>, FUP[a,b], FDN[a,b], WUP[a,b], WDN[a,b].
inline Word parse_word(std::string_view s) {
    detail::Cursor c(s);
    Word w;
    if (c.accept("ID")) {
        c.finish();
        return w;
    }
    do {
        if (c.accept("E")) {
            w.push_back(Generator::E(c.integer()));
            continue;
        }
        GenKind k;
        if (c.accept("FUP")) k = GenKind::FUp;
        else if (c.accept("FDN")) k = GenKind::FDown;
        else if (c.accept("WUP")) k = GenKind::WUp;
        else if (c.accept("WDN")) k = GenKind::WDown;
        else c.fail("expected a generator");
        c.expect("[");
        auto a = c.ident();
        if (a.empty()) c.fail("expected a label");
        c.expect(",");
        auto b = c.ident();
        if (b.empty()) c.fail("expected a label");
        c.expect("]");
        w.push_back({k, 0, a, b});
    } while (c.accept("."));
    c.finish();
    return w;
}

}  // namespace diagalg
