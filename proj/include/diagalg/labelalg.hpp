#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coeff.hpp"
#include "diagram.hpp"

namespace diagalg {

struct SizeMismatch : std::invalid_argument {
    SizeMismatch(int a, int b)
        : std::invalid_argument("size mismatch: n=" + std::to_string(a) + " vs n=" + std::to_string(b)) {}
};
struct LabelSetMismatch : std::invalid_argument {
    LabelSetMismatch() : std::invalid_argument("label set mismatch") {}
};
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

class DisjointSet {
public:
    explicit DisjointSet(int n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }

private:
    std::vector<int> parent_, rank_;
};

enum class ArcKind { TopTop, BottomBottom, TopBottom };

/// A boundary arc removed during concatenation. Positions index the merged boundary
/// (d1's points then d2's, 1-based); for TopBottom, `first` is the top point.
struct ArcRecord {
    ArcKind kind;
    Label first, second;
    int first_pos, second_pos;
};

struct ConcatTrace {
    int loops = 0;
    std::vector<ArcRecord> arcs;
    bool clean() const { return loops == 0 && arcs.empty(); }
};

struct ConcatResult {
    Monomial coeff;
    Diagram diagram;
    ConcatTrace trace;
};

inline ParamId arc_param(const ArcRecord& r) {
    switch (r.kind) {
    case ArcKind::TopTop: return ParamId::alpha(r.first, r.second);
    case ArcKind::BottomBottom: return ParamId::delta(r.first, r.second);
    case ArcKind::TopBottom: return ParamId::gamma(r.first, r.second);
    }
    return ParamId::beta();
}

inline ConcatResult concat(const Diagram& d1, const Diagram& d2) {
    if (d1.n() != d2.n()) throw SizeMismatch(d1.n(), d2.n());
    if (d1.X() != d2.X()) throw LabelSetMismatch();
    const int n = d1.n(), m1 = d1.size(), m = m1 + d2.size();
    DisjointSet uf(m);
    for (int p = 0; p < m1; ++p) uf.unite(p, d1.mates()[p]);
    for (int p = 0; p < d2.size(); ++p) uf.unite(m1 + p, m1 + d2.mates()[p]);
    for (int i = 1; i <= n; ++i) uf.unite(d1.pos(Rnode(i)), m1 + d2.pos(Lnode(i)));

    // Free endpoints in a fixed order: merged top, merged bottom, then result nodes.
    struct Free {
        Side side;
        int idx;  // merged boundary index or node index
        Label label;
    };
    std::vector<Free> free;
    std::vector<int> free_slot;
    for (int k = 1; k <= d1.t(); ++k) free.push_back({Side::T, k, d1.label(Tpt(k))}), free_slot.push_back(d1.pos(Tpt(k)));
    for (int k = 1; k <= d2.t(); ++k)
        free.push_back({Side::T, d1.t() + k, d2.label(Tpt(k))}), free_slot.push_back(m1 + d2.pos(Tpt(k)));
    for (int k = 1; k <= d1.b(); ++k) free.push_back({Side::B, k, d1.label(Bpt(k))}), free_slot.push_back(d1.pos(Bpt(k)));
    for (int k = 1; k <= d2.b(); ++k)
        free.push_back({Side::B, d1.b() + k, d2.label(Bpt(k))}), free_slot.push_back(m1 + d2.pos(Bpt(k)));
    for (int i = 1; i <= n; ++i) free.push_back({Side::L, i, {}}), free_slot.push_back(d1.pos(Lnode(i)));
    for (int i = 1; i <= n; ++i) free.push_back({Side::R, i, {}}), free_slot.push_back(m1 + d2.pos(Rnode(i)));

    std::map<int, std::vector<int>> comp;  // root -> free indices
    for (int p = 0; p < m; ++p) comp[uf.find(p)];
    for (int f = 0; f < static_cast<int>(free.size()); ++f) comp[uf.find(free_slot[f])].push_back(f);

    ConcatResult res;
    std::vector<std::pair<int, int>> strings;
    for (auto& [root, fs] : comp) {
        if (fs.empty()) {
            ++res.trace.loops;
            res.coeff *= ParamId::beta();
            continue;
        }
        if (fs.size() != 2) throw std::logic_error("concat: malformed string component");
        strings.push_back({fs[0], fs[1]});
    }
    std::vector<bool> removed(free.size(), false);
    for (auto [x, y] : strings) {
        const Free &a = free[x], &b = free[y];
        if (a.side == Side::T && b.side == Side::T) {
            res.trace.arcs.push_back({ArcKind::TopTop, a.label, b.label, a.idx, b.idx});
        } else if (a.side == Side::B && b.side == Side::B) {
            res.trace.arcs.push_back({ArcKind::BottomBottom, a.label, b.label, a.idx, b.idx});
        } else if (a.side == Side::T && b.side == Side::B) {
            res.trace.arcs.push_back({ArcKind::TopBottom, a.label, b.label, a.idx, b.idx});
        } else {
            continue;
        }
        removed[x] = removed[y] = true;
    }
    std::sort(res.trace.arcs.begin(), res.trace.arcs.end(), [](const ArcRecord& a, const ArcRecord& b) {
        return std::tie(a.kind, a.first_pos, a.second_pos) < std::tie(b.kind, b.first_pos, b.second_pos);
    });
    for (auto& r : res.trace.arcs) res.coeff *= arc_param(r);

    std::vector<Label> top, bot;
    std::vector<Endpoint> renamed(free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        if (removed[f]) continue;
        if (free[f].side == Side::T) {
            top.push_back(free[f].label);
            renamed[f] = Tpt(static_cast<int>(top.size()));
        } else if (free[f].side == Side::B) {
            bot.push_back(free[f].label);
            renamed[f] = Bpt(static_cast<int>(bot.size()));
        } else {
            renamed[f] = {free[f].side, free[f].idx};
        }
    }
    std::vector<Pair> ps;
    for (auto [x, y] : strings)
        if (!removed[x]) ps.push_back({renamed[x], renamed[y]});
    res.diagram = Diagram(n, d1.X(), top, bot, ps);
    return res;
}

/// Element of L_n(X): a finite sum of polynomial multiples of basis diagrams.
class LinearCombination {
public:
    LinearCombination() = default;
    LinearCombination(const Diagram& d, Polynomial c = 1) {  // NOLINT(google-explicit-constructor)
        add(d, c);
    }

    const std::map<Diagram, Polynomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Diagram& d, const Polynomial& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(d, c);
        if (fresh) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    /// The single (diagram, monomial) term, if this is a monomial multiple of one diagram.
    std::optional<std::pair<Monomial, Diagram>> single() const {
        if (terms_.size() != 1) return std::nullopt;
        auto& [d, p] = *terms_.begin();
        if (!p.is_monomial()) return std::nullopt;
        return std::make_pair(p.terms().begin()->first, d);
    }

    LinearCombination& operator+=(const LinearCombination& o) {
        for (auto& [d, c] : o.terms_) add(d, c);
        return *this;
    }
    LinearCombination scaled(const Polynomial& c) const {
        LinearCombination r;
        for (auto& [d, p] : terms_) r.add(d, p * c);
        return r;
    }
    bool operator==(const LinearCombination&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<std::string, const Polynomial*>> rows;
        for (auto& [d, p] : terms_) rows.push_back({d.str(), &p});
        std::sort(rows.begin(), rows.end(), [](auto& a, auto& b) { return a.first < b.first; });
        std::string s;
        for (auto& [ds, p] : rows) {
            if (!s.empty()) s += " + ";
            s += p->terms().size() > 1 ? "(" + p->str() + ")" : p->str();
            s += " * " + ds;
        }
        return s;
    }

private:
    std::map<Diagram, Polynomial> terms_;
};

inline LinearCombination multiply(const LinearCombination& u, const LinearCombination& v) {
    LinearCombination r;
    for (auto& [du, pu] : u.terms())
        for (auto& [dv, pv] : v.terms()) {
            auto c = concat(du, dv);
            r.add(c.diagram, pu * pv * Polynomial(c.coeff));
        }
    return r;
}

enum class GenKind : std::uint8_t { E, FUp, FDown, WUp, WDown };

struct Generator {
    GenKind kind = GenKind::E;
    int i = 0;
    Label a, b;

    auto operator<=>(const Generator&) const = default;
    bool operator==(const Generator&) const = default;

    static Generator E(int i) { return {GenKind::E, i, {}, {}}; }
    static Generator FUp(Label a, Label b) { return {GenKind::FUp, 0, std::move(a), std::move(b)}; }
    static Generator FDown(Label a, Label b) { return {GenKind::FDown, 0, std::move(a), std::move(b)}; }
    static Generator WUp(Label a, Label b) { return {GenKind::WUp, 0, std::move(a), std::move(b)}; }
    static Generator WDown(Label a, Label b) { return {GenKind::WDown, 0, std::move(a), std::move(b)}; }

    bool is_odd() const { return kind == GenKind::WUp || kind == GenKind::WDown; }
    bool is_even() const { return !is_odd(); }
    bool is_label() const { return kind != GenKind::E; }

    std::string str() const {
        switch (kind) {
        case GenKind::E: return "E" + std::to_string(i);
        case GenKind::FUp: return "FUP[" + a + "," + b + "]";
        case GenKind::FDown: return "FDN[" + a + "," + b + "]";
        case GenKind::WUp: return "WUP[" + a + "," + b + "]";
        case GenKind::WDown: return "WDN[" + a + "," + b + "]";
        }
        return "?";
    }
};

namespace detail {

inline void check_label(const LabelSet& X, const Label& l) {
    if (std::find(X.begin(), X.end(), l) == X.end()) throw IndexOutOfRange("label " + l + " not in X");
}

}  // namespace detail

inline Diagram generator_diagram(const Generator& g, int n, const LabelSet& X) {
    if (n < 1) throw IndexOutOfRange("n must be positive");
    std::vector<Pair> ps;
    if (g.kind == GenKind::E) {
        if (g.i < 1 || g.i > n - 1) throw IndexOutOfRange("E" + std::to_string(g.i) + " needs 1 <= i <= n-1");
        for (int k = 1; k <= n; ++k)
            if (k != g.i && k != g.i + 1) ps.push_back({Lnode(k), Rnode(k)});
        ps.push_back({Lnode(g.i), Lnode(g.i + 1)});
        ps.push_back({Rnode(g.i), Rnode(g.i + 1)});
        return Diagram(n, X, {}, {}, ps);
    }
    detail::check_label(X, g.a);
    detail::check_label(X, g.b);
    switch (g.kind) {
    case GenKind::FUp:
        ps = {{Lnode(1), Tpt(1)}, {Rnode(1), Tpt(2)}};
        for (int k = 2; k <= n; ++k) ps.push_back({Lnode(k), Rnode(k)});
        return Diagram(n, X, {g.a, g.b}, {}, ps);
    case GenKind::FDown:
        ps = {{Lnode(n), Bpt(1)}, {Rnode(n), Bpt(2)}};
        for (int k = 1; k < n; ++k) ps.push_back({Lnode(k), Rnode(k)});
        return Diagram(n, X, {}, {g.a, g.b}, ps);
    case GenKind::WUp:
        ps = {{Lnode(1), Tpt(1)}, {Rnode(n), Bpt(1)}};
        for (int k = 1; k < n; ++k) ps.push_back({Lnode(k + 1), Rnode(k)});
        return Diagram(n, X, {g.a}, {g.b}, ps);
    case GenKind::WDown:
        ps = {{Rnode(1), Tpt(1)}, {Lnode(n), Bpt(1)}};
        for (int k = 1; k < n; ++k) ps.push_back({Lnode(k), Rnode(k + 1)});
        return Diagram(n, X, {g.a}, {g.b}, ps);
    default: break;
    }
    throw std::logic_error("unreachable");
}

/// The odd diagram family indexed by 0 <= j <= n; the ends are the two odd generators.
inline Diagram w_diagram(const Label& a, const Label& b, int j, int n, const LabelSet& X) {
    if (j < 0 || j > n) throw IndexOutOfRange("w(j) needs 0 <= j <= n");
    if (j == 0) return generator_diagram(Generator::WUp(a, b), n, X);
    if (j == n) return generator_diagram(Generator::WDown(a, b), n, X);
    detail::check_label(X, a);
    detail::check_label(X, b);
    std::vector<Pair> ps = {{Rnode(1), Tpt(1)}, {Lnode(j), Lnode(j + 1)}, {Rnode(n), Bpt(1)}};
    for (int x = 1; x < j; ++x) ps.push_back({Lnode(x), Rnode(x + 1)});
    for (int x = j + 2; x <= n; ++x) ps.push_back({Lnode(x), Rnode(x - 1)});
    return Diagram(n, X, {a}, {b}, ps);
}

using BigInt = boost::multiprecision::cpp_int;

inline BigInt binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline BigInt dimension(int n, int xsize) {
    if (n < 1 || xsize < 1) throw std::invalid_argument("dimension needs n >= 1 and |X| >= 1");
    BigInt total = 0;
    for (int d = 0; d <= n; ++d) {
        BigInt inner = 0;
        for (int j = 0; n - 2 * j - d >= 0; ++j) {
            int e = n - 2 * j - d;
            inner += boost::multiprecision::pow(BigInt(xsize), e) * (e + 1) * (binom(n, j) - binom(n, j - 1));
        }
        total += inner * inner;
    }
    return total;
}

}  // namespace diagalg
