#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "labelalg.hpp"
#include "presentation.hpp"

namespace diagalg {

struct HasBoundaryLinks : std::invalid_argument {
    HasBoundaryLinks() : std::invalid_argument("diagram has boundary links") {}
};
struct NotEven : std::invalid_argument {
    NotEven() : std::invalid_argument("diagram is not even") {}
};
struct NotOdd : std::invalid_argument {
    NotOdd() : std::invalid_argument("diagram is not odd") {}
};

namespace detail {

inline std::vector<Pair> pairs_where(const Diagram& d, const std::function<bool(Endpoint)>& drop) {
    std::vector<Pair> ps;
    for (auto& [a, b] : d.pairs())
        if (!drop(a) && !drop(b)) ps.push_back({a, b});
    return ps;
}

inline void add_links(std::vector<Pair>& ps, Side s, int from, int count) {
    for (int j = 0; j < count; ++j) ps.push_back({{s, from + 2 * j}, {s, from + 2 * j + 1}});
}

inline Word reflect_word(const Word& w, int n) {
    Word r;
    for (auto& g : w) {
        switch (g.kind) {
        case GenKind::E: r.push_back(Generator::E(n - g.i)); break;
        case GenKind::FUp: r.push_back(Generator::FDown(g.a, g.b)); break;
        case GenKind::FDown: r.push_back(Generator::FUp(g.a, g.b)); break;
        default: throw std::logic_error("reflect_word: odd generator");
        }
    }
    return r;
}

inline void check_round_trip(const Word& w, const Diagram& d, const char* where) {
    auto r = phi_eval(w, d.n(), d.X());
    if (!r.coeff.is_one() || !r.clean() || !(r.diagram == d))
        throw std::logic_error(std::string(where) + ": round trip failed for " + d.str());
}

}  // namespace detail

/// Jones normal form of a diagram with no boundary links: descending runs
/// e_a e_{a-1} ... e_b with strictly increasing tops and bottoms.
inline Word decompose_tl(const Diagram& d) {
    if (d.t() || d.b()) throw HasBoundaryLinks();
    const int n = d.n();
    Word out;
    Diagram cur = d;
    while (true) {
        auto top = cur.topmost_left_simple_link();
        if (!top) break;
        int a = *top;
        int b = 1;
        while (cur.partner(Lnode(b)) == Rnode(b)) ++b;
        // cur = (e_a ... e_b) * next: the run caps next's L_b and L_{b+1} and carries
        // left node i of cur to left node i+2 of next for b <= i < a.
        auto shift = [&](Endpoint e) {
            if (e.side == Side::L && e.idx >= b && e.idx < a) return Lnode(e.idx + 2);
            return e;
        };
        Endpoint z = cur.partner(Rnode(b));
        std::vector<Pair> ps = {{Lnode(b), Rnode(b)}, {Lnode(b + 1), shift(z)}};
        for (auto& [u, v] : cur.pairs()) {
            if (u == Lnode(a) || u == Rnode(b) || v == Rnode(b)) continue;
            ps.push_back({shift(u), shift(v)});
        }
        for (int i = a; i >= b; --i) out.push_back(Generator::E(i));
        cur = Diagram(n, d.X(), {}, {}, ps);
    }
    if (!(cur == Diagram::identity(n, d.X()))) throw std::logic_error("decompose_tl: no simple link in " + cur.str());
    return out;
}

enum class PeelCase { LeftLeft, LeftRightUpper, LeftRightLower, RightRight };

/// One step of the even factorisation: d = A * (f↑(a,b) e_2 e_4 ... e_2k) * B, where
/// A and B have fewer top boundary links and the product forms no loops or arcs.
struct TopPeel {
    PeelCase kind;
    Diagram left, right;
    Word middle;
};

inline TopPeel peel_top(const Diagram& d) {
    if (d.t() < 2) throw std::invalid_argument("peel_top needs two top boundary links");
    const int n = d.n();
    const LabelSet& X = d.X();
    Endpoint x = d.partner(Tpt(1)), y = d.partner(Tpt(2));
    const Label &a = d.label(Tpt(1)), &b = d.label(Tpt(2));
    std::vector<Label> rest_top(d.top_labels().begin() + 2, d.top_labels().end());
    auto is_top = [](Endpoint e) { return e.side == Side::T; };
    auto shift_top = [](std::vector<Pair> ps) {
        for (auto& [u, v] : ps) {
            if (u.side == Side::T) u.idx -= 2;
            if (v.side == Side::T) v.idx -= 2;
        }
        return ps;
    };
    auto middle = [&](int k) {
        Word w{Generator::FUp(a, b)};
        for (int j = 1; j <= k; ++j) w.push_back(Generator::E(2 * j));
        return w;
    };

    TopPeel out;
    if (x.side == Side::L && y.side == Side::L) {
        int p = x.idx, q = y.idx, k = (q - 2) / 2;
        std::vector<Pair> A = detail::pairs_where(d, [&](Endpoint e) {
            return !(e.side == Side::L && e.idx < q && e.idx != p);
        });
        A.push_back({Lnode(p), Rnode(q - 1)});
        for (int i = q; i <= n; ++i) A.push_back({Lnode(i), Rnode(i)});
        detail::add_links(A, Side::R, 1, k);
        std::vector<Pair> B = shift_top(detail::pairs_where(d, [&](Endpoint e) { return e.side == Side::L && e.idx <= q; }));
        detail::add_links(B, Side::L, 1, k + 1);
        out = {PeelCase::LeftLeft, Diagram(n, X, {}, {}, A), Diagram(n, X, rest_top, d.bottom_labels(), B),
               middle(k)};
    } else if (x.side == Side::L && y.side == Side::R && x.idx <= y.idx) {
        int p = x.idx, q = y.idx, k = (q - 1) / 2;
        auto in_upper_right = [&](Endpoint e) { return (e.side == Side::R && e.idx < q) || is_top(e); };
        std::vector<Pair> A = detail::pairs_where(d, [&](Endpoint e) { return in_upper_right(e) || e == x || e == y; });
        A.push_back({Lnode(p), Rnode(q)});
        detail::add_links(A, Side::R, 1, k);
        std::vector<Pair> B;
        for (auto& [u, v] : d.pairs())
            if (in_upper_right(u) && in_upper_right(v) && !(u == Tpt(2) || v == Tpt(2)) && !(u == Tpt(1) || v == Tpt(1)))
                B.push_back({u, v});
        B = shift_top(B);
        detail::add_links(B, Side::L, 1, k);
        for (int i = q; i <= n; ++i) B.push_back({Lnode(i), Rnode(i)});
        out = {PeelCase::LeftRightUpper, Diagram(n, X, {}, d.bottom_labels(), A), Diagram(n, X, rest_top, {}, B),
               middle(k)};
    } else if (x.side == Side::L && y.side == Side::R) {
        int p = x.idx, q = y.idx, k = (p - 1) / 2;
        std::vector<Pair> A = detail::pairs_where(d, [&](Endpoint e) { return !(e.side == Side::L && e.idx < p); });
        for (int i = p; i <= n; ++i) A.push_back({Lnode(i), Rnode(i)});
        detail::add_links(A, Side::R, 1, k);
        std::vector<Pair> B = detail::pairs_where(d, [&](Endpoint e) {
            return (e.side == Side::L && e.idx <= p) || e == Tpt(1) || e == Tpt(2) || e == y;
        });
        B = shift_top(B);
        detail::add_links(B, Side::L, 1, k);
        B.push_back({Lnode(p), Rnode(q)});
        out = {PeelCase::LeftRightLower, Diagram(n, X, {}, {}, A), Diagram(n, X, rest_top, d.bottom_labels(), B),
               middle(k)};
    } else if (x.side == Side::R && y.side == Side::R) {
        int qa = x.idx, qb = y.idx, k = (qa - 2) / 2;
        auto in_upper_right = [&](Endpoint e) { return (e.side == Side::R && e.idx <= qa) || is_top(e); };
        std::vector<Pair> A = detail::pairs_where(d, in_upper_right);
        detail::add_links(A, Side::R, 1, qa / 2);
        std::vector<Pair> B;
        for (auto& [u, v] : d.pairs())
            if (in_upper_right(u) && in_upper_right(v) && !(u == x || v == x || u == y || v == y)) B.push_back({u, v});
        B = shift_top(B);
        detail::add_links(B, Side::L, 1, k);
        B.push_back({Lnode(qa - 1), Rnode(qb)});
        for (int i = qa; i <= n; ++i) B.push_back({Lnode(i), Rnode(i)});
        out = {PeelCase::RightRight, Diagram(n, X, {}, d.bottom_labels(), A), Diagram(n, X, rest_top, {}, B),
               middle(k)};
    } else {
        throw std::logic_error("peel_top: leftmost top links are not node links");
    }
    return out;
}

/// Word in E, FUp, FDown whose generator product is d with coefficient 1 and no loops or arcs.
inline Word decompose_even(const Diagram& d) {
    if (!d.is_even()) throw NotEven();
    if (d.t() == 0 && d.b() == 0) return decompose_tl(d);
    if (d.t() == 0) return detail::reflect_word(decompose_even(flip_top_bottom(d)), d.n());
    auto peel = peel_top(d);
    return decompose_even(peel.left) + peel.middle + decompose_even(peel.right);
}

struct OddDecomposition {
    int j;
    Label a, b;
    Diagram remainder;
};

/// Index j of the odd factor: 0 for a top link at L1, else the topmost left simple link, else n.
inline int odd_index(const Diagram& d) {
    if (d.partner(Lnode(1)).side == Side::T) return 0;
    if (auto k = d.topmost_left_simple_link()) return *k;
    return d.n();
}

/// Given the odd factor W = w(a,b,j) and d, the even T with W * T = d and no loops or
/// arcs, if one exists. Every right node of W is a boundary link or a throughline, so
/// each left node of T is fed by a known endpoint of d.
inline std::optional<Diagram> divide_by_w(const Diagram& d, int j) {
    const int n = d.n();
    if (d.t() < 1 || d.b() < 1) return std::nullopt;
    Diagram W = w_diagram(d.label(Tpt(1)), d.label(Bpt(1)), j, n, d.X());
    // feed[e] = left node of T reached from d-endpoint e through W
    auto feed = [&](Endpoint e) -> std::optional<Endpoint> {
        Endpoint we = e;
        if (e.side == Side::T) {
            if (e.idx != 1) return std::nullopt;
            we = Tpt(1);
        } else if (e.side == Side::B) {
            if (e.idx != 1) return std::nullopt;
            we = Bpt(1);
        } else if (e.side != Side::L) {
            return std::nullopt;
        }
        Endpoint q = W.partner(we);
        if (q.side != Side::R) return std::nullopt;
        return Lnode(q.idx);
    };
    std::vector<Pair> ps;
    for (auto& [u, v] : d.pairs()) {
        auto tu = feed(u), tv = feed(v);
        auto map = [&](Endpoint e, const std::optional<Endpoint>& f) -> std::optional<Endpoint> {
            if (f) return f;
            if (e.side == Side::R) return e;
            if (e.side == Side::T && e.idx > 1) return Tpt(e.idx - 1);
            if (e.side == Side::B && e.idx > 1) return Bpt(e.idx - 1);
            return std::nullopt;
        };
        auto mu = map(u, tu), mv = map(v, tv);
        if (!mu && !mv) continue;
        if (!mu || !mv) return std::nullopt;
        ps.push_back({*mu, *mv});
    }
    std::vector<Label> top(d.top_labels().begin() + 1, d.top_labels().end());
    std::vector<Label> bot(d.bottom_labels().begin() + 1, d.bottom_labels().end());
    try {
        Diagram T(n, d.X(), top, bot, ps);
        if (T.validate()) return std::nullopt;
        auto c = concat(W, T);
        if (!c.coeff.is_one() || !c.trace.clean() || !(c.diagram == d)) return std::nullopt;
        return T;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline OddDecomposition decompose_odd(const Diagram& d) {
    if (d.is_even()) throw NotOdd();
    int j = odd_index(d);
    auto T = divide_by_w(d, j);
    if (!T) throw std::logic_error("decompose_odd: no even remainder for " + d.str());
    return {j, d.label(Tpt(1)), d.label(Bpt(1)), *T};
}

inline Word decompose(const Diagram& d) {
    if (d.is_even()) return decompose_even(d);
    auto o = decompose_odd(d);
    return W_word(o.a, o.b, o.j, d.n()) + decompose_even(o.remainder);
}

}  // namespace diagalg
