#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "coeff.hpp"

namespace diagalg {

using LabelSet = std::vector<Label>;

inline void check_label_set(const LabelSet& X) {
    if (X.empty()) throw std::invalid_argument("label set is empty");
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = i + 1; j < X.size(); ++j)
            if (X[i] == X[j]) throw std::invalid_argument("duplicate label " + X[i]);
}

enum class Side : std::uint8_t { L, B, R, T };

struct Endpoint {
    Side side = Side::L;
    int idx = 1;

    bool operator==(const Endpoint&) const = default;
    bool is_node() const { return side == Side::L || side == Side::R; }
    bool is_boundary() const { return !is_node(); }

    std::string str() const {
        static const char tag[] = {'L', 'B', 'R', 'T'};
        return tag[static_cast<int>(side)] + std::to_string(idx);
    }
};

inline Endpoint Lnode(int i) { return {Side::L, i}; }
inline Endpoint Rnode(int i) { return {Side::R, i}; }
inline Endpoint Tpt(int k) { return {Side::T, k}; }
inline Endpoint Bpt(int k) { return {Side::B, k}; }

using Pair = std::pair<Endpoint, Endpoint>;

/// Balanced-nesting test for a chord diagram given as a mate array over cyclic positions.
inline bool chords_noncrossing(const std::vector<int>& mate) {
    std::vector<int> stack;
    for (int p = 0; p < static_cast<int>(mate.size()); ++p) {
        int q = mate[p];
        if (q > p) {
            stack.push_back(p);
        } else {
            if (stack.empty() || stack.back() != q) return false;
            stack.pop_back();
        }
    }
    return stack.empty();
}

/// Basis diagram of the label algebra. Endpoints are stored by their position in the
/// cyclic order L1..Ln, B1..Bb, Rn..R1, Tt..T1, which is also the canonical total order.
class Diagram {
public:
    Diagram() = default;

    Diagram(int n, LabelSet X, std::vector<Label> top, std::vector<Label> bottom,
            const std::vector<Pair>& pairs)
        : n_(n), X_(std::move(X)), top_(std::move(top)), bottom_(std::move(bottom)) {
        if (n < 1) throw std::invalid_argument("n must be positive");
        mate_.assign(size(), -1);
        for (auto& [a, b] : pairs) {
            int p = pos(a), q = pos(b);
            if (p == q || mate_[p] != -1 || mate_[q] != -1)
                throw std::invalid_argument("endpoint used twice in pairs: " + a.str() + "," + b.str());
            mate_[p] = q;
            mate_[q] = p;
        }
        for (int p = 0; p < size(); ++p)
            if (mate_[p] == -1) throw std::invalid_argument("unmatched endpoint " + at(p).str());
    }

    /// Constructs and throws std::invalid_argument on any invariant violation.
    static Diagram make(int n, LabelSet X, std::vector<Label> top, std::vector<Label> bottom,
                        const std::vector<Pair>& pairs) {
        Diagram d(n, std::move(X), std::move(top), std::move(bottom), pairs);
        if (auto v = d.validate()) throw std::invalid_argument(*v);
        return d;
    }

    static Diagram identity(int n, const LabelSet& X) {
        std::vector<Pair> ps;
        for (int i = 1; i <= n; ++i) ps.push_back({Lnode(i), Rnode(i)});
        return Diagram(n, X, {}, {}, ps);
    }

    int n() const { return n_; }
    const LabelSet& X() const { return X_; }
    int t() const { return static_cast<int>(top_.size()); }
    int b() const { return static_cast<int>(bottom_.size()); }
    int size() const { return 2 * n_ + t() + b(); }
    const std::vector<Label>& top_labels() const { return top_; }
    const std::vector<Label>& bottom_labels() const { return bottom_; }
    const std::vector<int>& mates() const { return mate_; }

    int pos(Endpoint e) const {
        auto in = [&](int lo, int hi) {
            if (e.idx < lo || e.idx > hi) throw std::out_of_range("endpoint out of range: " + e.str());
        };
        switch (e.side) {
        case Side::L: in(1, n_); return e.idx - 1;
        case Side::B: in(1, b()); return n_ + e.idx - 1;
        case Side::R: in(1, n_); return n_ + b() + (n_ - e.idx);
        case Side::T: in(1, t()); return 2 * n_ + b() + (t() - e.idx);
        }
        return -1;
    }

    Endpoint at(int p) const { return endpoint_at(n_, t(), b(), p); }

    static Endpoint endpoint_at(int n, int t, int b, int p) {
        if (p < n) return Lnode(p + 1);
        p -= n;
        if (p < b) return Bpt(p + 1);
        p -= b;
        if (p < n) return Rnode(n - p);
        p -= n;
        return Tpt(t - p);
    }

    Endpoint partner(Endpoint e) const { return at(mate_[pos(e)]); }

    const Label& label(Endpoint e) const {
        if (e.side == Side::T) return top_.at(e.idx - 1);
        if (e.side == Side::B) return bottom_.at(e.idx - 1);
        throw std::invalid_argument("nodes carry no label");
    }

    std::vector<Pair> pairs() const {
        std::vector<Pair> ps;
        for (int p = 0; p < size(); ++p)
            if (mate_[p] > p) ps.push_back({at(p), at(mate_[p])});
        return ps;
    }

    std::optional<std::string> validate() const {
        if (n_ < 1) return "n must be positive";
        if (X_.empty()) return "label set is empty";
        for (std::size_t i = 0; i < X_.size(); ++i)
            for (std::size_t j = i + 1; j < X_.size(); ++j)
                if (X_[i] == X_[j]) return "duplicate label " + X_[i];
        if (static_cast<int>(mate_.size()) != size()) return "matching size mismatch";
        for (int p = 0; p < size(); ++p) {
            int q = mate_[p];
            if (q < 0 || q >= size() || q == p || mate_[q] != p)
                return "not a perfect matching at " + at(p).str();
            if (at(p).is_boundary() && at(q).is_boundary())
                return "boundary arc (" + at(p).str() + "," + at(q).str() + ")";
        }
        std::vector<int> stack;
        for (int p = 0; p < size(); ++p) {
            int q = mate_[p];
            if (q > p) {
                stack.push_back(p);
            } else if (stack.back() != q) {
                int o = stack.back();
                return "crossing strings (" + at(q).str() + "," + at(p).str() + ") and (" + at(o).str() + "," +
                       at(mate_[o]).str() + ")";
            } else {
                stack.pop_back();
            }
        }
        auto member = [&](const Label& l) { return std::find(X_.begin(), X_.end(), l) != X_.end(); };
        for (int k = 0; k < t(); ++k)
            if (!member(top_[k])) return "top label " + top_[k] + " not in X";
        for (int k = 0; k < b(); ++k)
            if (!member(bottom_[k])) return "bottom label " + bottom_[k] + " not in X";
        return std::nullopt;
    }

    bool is_even() const { return t() % 2 == 0 && b() % 2 == 0; }

    bool has_simple_link(Side s, int k) const {
        if (k < 1 || k >= n_) return false;
        return partner({s, k}) == Endpoint{s, k + 1};
    }
    bool has_top_boundary_link_at(Side s, int i) const { return partner({s, i}).side == Side::T; }
    bool has_bottom_boundary_link_at(Side s, int i) const { return partner({s, i}).side == Side::B; }

    std::optional<int> topmost_left_simple_link() const {
        for (int k = 1; k < n_; ++k)
            if (has_simple_link(Side::L, k)) return k;
        return std::nullopt;
    }

    /// Node and label at the leftmost top (bottom) boundary point, if any.
    std::optional<std::pair<Endpoint, Label>> leftmost_top_link() const {
        if (t() == 0) return std::nullopt;
        return std::make_pair(partner(Tpt(1)), top_[0]);
    }
    std::optional<std::pair<Endpoint, Label>> leftmost_bottom_link() const {
        if (b() == 0) return std::nullopt;
        return std::make_pair(partner(Bpt(1)), bottom_[0]);
    }

    int boundary_link_count() const { return t() + b(); }
    int throughline_count() const {
        int c = 0;
        for (int i = 1; i <= n_; ++i) c += partner(Lnode(i)).side == Side::R;
        return c;
    }

    /// Canonical text form; equality of diagrams is equality of this string.
    std::string str() const {
        std::string s = "D(n=" + std::to_string(n_) + ";X=";
        s += join(X_) + ";top=" + join(top_) + ";bottom=" + join(bottom_) + ";pairs=";
        bool first = true;
        for (auto& [a, b] : pairs()) {
            if (!first) s += ';';
            first = false;
            s += "(" + a.str() + "," + b.str() + ")";
        }
        return s + ")";
    }

    auto key() const { return std::tie(n_, X_, top_, bottom_, mate_); }
    bool operator==(const Diagram& o) const { return key() == o.key(); }
    bool operator<(const Diagram& o) const { return key() < o.key(); }

private:
    static std::string join(const std::vector<Label>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
        return s;
    }

    int n_ = 0;
    LabelSet X_;
    std::vector<Label> top_, bottom_;
    std::vector<int> mate_;
};

/// Reflection in the horizontal midline: node i goes to n+1-i, top and bottom swap.
inline Diagram flip_top_bottom(const Diagram& d) {
    int n = d.n();
    auto f = [n](Endpoint e) -> Endpoint {
        switch (e.side) {
        case Side::L: return Lnode(n + 1 - e.idx);
        case Side::R: return Rnode(n + 1 - e.idx);
        case Side::T: return Bpt(e.idx);
        case Side::B: return Tpt(e.idx);
        }
        return e;
    };
    std::vector<Pair> ps;
    for (auto& [a, b] : d.pairs()) ps.push_back({f(a), f(b)});
    return Diagram(n, d.X(), d.bottom_labels(), d.top_labels(), ps);
}

enum class Parity { Even, Odd };
inline Parity parity(const Diagram& d) { return d.is_even() ? Parity::Even : Parity::Odd; }

namespace detail {

/// Non-crossing perfect matchings of positions [lo,hi) in which no two boundary points meet.
inline void noncrossing(const std::vector<bool>& boundary, std::vector<int>& mate, int lo, int hi,
                        const std::function<void()>& emit) {
    if (lo >= hi) {
        emit();
        return;
    }
    for (int j = lo + 1; j < hi; j += 2) {
        if (boundary[lo] && boundary[j]) continue;
        mate[lo] = j;
        mate[j] = lo;
        noncrossing(boundary, mate, lo + 1, j, [&] { noncrossing(boundary, mate, j + 1, hi, emit); });
    }
}

}  // namespace detail

/// Streams every basis diagram of L_n(X) once, ordered by (t, b), matching, then labels.
inline void for_each_diagram(int n, const LabelSet& X, const std::function<void(const Diagram&)>& f) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    check_label_set(X);
    for (int t = 0; t <= 2 * n; ++t) {
        for (int b = 0; t + b <= 2 * n; ++b) {
            if ((t + b) % 2) continue;
            int m = 2 * n + t + b;
            std::vector<bool> boundary(m, false);
            for (int p = n; p < n + b; ++p) boundary[p] = true;
            for (int p = 2 * n + b; p < m; ++p) boundary[p] = true;
            std::vector<int> mate(m, -1);
            detail::noncrossing(boundary, mate, 0, m, [&] {
                std::vector<Pair> ps;
                for (int p = 0; p < m; ++p)
                    if (mate[p] > p) ps.push_back({Diagram::endpoint_at(n, t, b, p), Diagram::endpoint_at(n, t, b, mate[p])});
                std::vector<std::size_t> digit(t + b, 0);
                while (true) {
                    std::vector<Label> top(t), bot(b);
                    for (int k = 0; k < t; ++k) top[k] = X[digit[k]];
                    for (int k = 0; k < b; ++k) bot[k] = X[digit[t + k]];
                    f(Diagram(n, X, top, bot, ps));
                    int k = t + b - 1;
                    while (k >= 0 && ++digit[k] == X.size()) digit[k--] = 0;
                    if (k < 0) break;
                }
            });
        }
    }
}

inline std::vector<Diagram> enumerate_all(int n, const LabelSet& X) {
    std::vector<Diagram> out;
    for_each_diagram(n, X, [&](const Diagram& d) { out.push_back(d); });
    return out;
}

enum class RenderFormat { Tikz, Ascii };

namespace detail {

inline std::string ascii_cell(const Diagram& d, Endpoint e) {
    Endpoint q = d.partner(e);
    std::string s = q.str();
    if (q.is_boundary()) s += ":" + d.label(q);
    return s;
}

}  // namespace detail

/// The ascii form starts with the canonical text on its own line, so it parses back.
inline std::string render(const Diagram& d, RenderFormat fmt) {
    std::ostringstream o;
    int n = d.n();
    if (fmt == RenderFormat::Ascii) {
        o << d.str() << "\n";
        o << "top:";
        for (int k = 1; k <= d.t(); ++k) o << " T" << k << "[" << d.label(Tpt(k)) << "]-" << d.partner(Tpt(k)).str();
        o << "\n";
        for (int i = 1; i <= n; ++i) {
            Endpoint l = Lnode(i), r = Rnode(i);
            if (d.partner(l) == r) {
                o << "|----------------|\n";
                continue;
            }
            std::string a = d.partner(l).side == Side::R ? "-> " + detail::ascii_cell(d, l) : "( " + detail::ascii_cell(d, l);
            std::string b = d.partner(r).side == Side::L ? "" : detail::ascii_cell(d, r) + " )";
            std::string line = "|" + a;
            std::string tail = b + "|";
            int pad = 18 - static_cast<int>(line.size() + tail.size());
            o << line << std::string(std::max(pad, 1), ' ') << tail << "\n";
        }
        o << "bottom:";
        for (int k = 1; k <= d.b(); ++k)
            o << " B" << k << "[" << d.label(Bpt(k)) << "]-" << d.partner(Bpt(k)).str();
        o << "\n";
        return o.str();
    }
    auto coord = [&](Endpoint e) {
        std::ostringstream c;
        switch (e.side) {
        case Side::L: c << "(0," << -(e.idx - 1) << ")"; break;
        case Side::R: c << "(3," << -(e.idx - 1) << ")"; break;
        case Side::T: c << "(" << 3.0 * e.idx / (d.t() + 1) << ",0.5)"; break;
        case Side::B: c << "(" << 3.0 * e.idx / (d.b() + 1) << "," << -n + 0.5 << ")"; break;
        }
        return c.str();
    };
    auto angle = [](Side s) {
        switch (s) {
        case Side::L: return 0;
        case Side::R: return 180;
        case Side::T: return -90;
        case Side::B: return 90;
        }
        return 0;
    };
    o << "\\begin{tikzpicture}[scale=0.5]\n";
    o << "\\draw[dotted] (0,0.5)--(3,0.5);\n\\draw[dotted] (0," << -n + 0.5 << ")--(3," << -n + 0.5 << ");\n";
    o << "\\draw[very thick] (0," << -n + 0.5 << ")--(0,0.5);\n\\draw[very thick] (3," << -n + 0.5 << ")--(3,0.5);\n";
    for (auto& [a, b] : d.pairs())
        o << "\\draw " << coord(a) << " to[out=" << angle(a.side) << ",in=" << angle(b.side) << "] " << coord(b)
          << ";\n";
    for (int k = 1; k <= d.t(); ++k)
        o << "\\node[anchor=south] at " << coord(Tpt(k)) << " {\\scriptsize $" << d.label(Tpt(k)) << "$};\n";
    for (int k = 1; k <= d.b(); ++k)
        o << "\\node[anchor=north] at " << coord(Bpt(k)) << " {\\scriptsize $" << d.label(Bpt(k)) << "$};\n";
    o << "\\end{tikzpicture}\n";
    return o.str();
}

}  // namespace diagalg
