#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "decompose.hpp"
#include "diagram.hpp"
#include "labelalg.hpp"
#include "parallel.hpp"
#include "presentation.hpp"

namespace diagalg {

struct NotLabelReduced : std::invalid_argument {
    NotLabelReduced() : std::invalid_argument("word is not label-reduced") {}
};
struct NotEvenDiagram : std::invalid_argument {
    NotEvenDiagram() : std::invalid_argument("word does not evaluate to an even diagram") {}
};
struct PhiNotPreserved : std::logic_error {
    using std::logic_error::logic_error;
};

inline bool is_label_reduced(const Word& w, int n, const LabelSet& X) { return phi_eval(w, n, X).arcs == 0; }

struct RewriteStep {
    std::string rule;
    Word before, after;
    Monomial scalar;
};

/// A word under rewriting. Every step replaces a factor and checks
/// phi(before) = scalar * phi(after) on the whole word.
class Rewriter {
public:
    Rewriter(Word w, int n, LabelSet X) : w_(std::move(w)), n_(n), X_(std::move(X)) {}

    const Word& word() const { return w_; }
    const Monomial& scalar() const { return s_; }
    const std::vector<RewriteStep>& steps() const { return steps_; }
    int n() const { return n_; }
    const LabelSet& X() const { return X_; }

    void apply(std::size_t pos, std::size_t len, const Monomial& m, const Word& rep, std::string rule) {
        Word after = subword(w_, 0, pos) + rep + subword(w_, pos + len, w_.size());
        auto pb = phi_eval(w_, n_, X_), pa = phi_eval(after, n_, X_);
        if (!(pb.diagram == pa.diagram) || !(pb.coeff == m * pa.coeff))
            throw PhiNotPreserved("rule " + rule + " does not preserve phi: " + word_str(w_) + " -> " + m.str() +
                                  " * " + word_str(after));
        steps_.push_back({std::move(rule), w_, after, m});
        w_ = std::move(after);
        s_ *= m;
    }

private:
    Word w_;
    int n_;
    LabelSet X_;
    Monomial s_;
    std::vector<RewriteStep> steps_;
};

namespace detail {

/// The odd factor e_m ... e_1 w_up(a,b), or w_down(a,b) when down is set.
struct WState {
    bool down = false;
    int m = 0;
    Label a, b;

    int j(int n) const { return down ? n : m; }
    Word word(int n) const { return W_word(a, b, j(n), n); }
};

inline WState state_of(const Generator& g) { return {g.kind == GenKind::WDown, 0, g.a, g.b}; }

struct Absorbed {
    Monomial scalar;
    std::optional<WState> state;  // empty when the odd factor is consumed (n = 1)
    Word tail;
    std::string rule;
};

inline Monomial mono(const ParamId& p) { return Monomial(p); }

/// s * W(state) rewritten as scalar * W(state') * tail.
inline Absorbed absorb_rule(const Generator& s, const WState& st, int n) {
    const Label &a = st.a, &b = st.b;
    if (st.down) {
        switch (s.kind) {
        case GenKind::E:
            if (s.i <= n - 2) return {{}, st, {Generator::E(s.i + 1)}, "L7"};
            return {{}, WState{false, n - 1, a, b}, {}, "L14"};
        case GenKind::FDown: return {mono(ParamId::delta(s.b, b)), WState{true, 0, a, s.a}, {}, "L27"};
        case GenKind::FUp:
            if (n == 1) return {mono(ParamId::gamma(s.b, b)), std::nullopt, {Generator::FUp(s.a, a)}, "fup-wdo-1"};
            return {{}, WState{false, 0, s.a, b}, e_desc(n - 1, 1) + Word{Generator::FUp(s.b, a)}, "L9,L15"};
        default: break;
        }
        throw std::logic_error("absorb_rule: odd generator");
    }
    const int m = st.m;
    switch (s.kind) {
    case GenKind::E: {
        int j = s.i;
        if (m == 0) {
            if (j == 1) return {{}, WState{false, 1, a, b}, {}, "run"};
            return {{}, st, {Generator::E(j - 1)}, "L6"};
        }
        if (j <= m - 1) return {{}, WState{false, j, a, b}, e_desc(m - 1, j + 1), "L5,L6"};
        if (j == m) return {mono(ParamId::beta()), st, {}, "L19"};
        if (j == m + 1) return {{}, WState{false, m + 1, a, b}, {}, "run"};
        return {{}, st, {Generator::E(j - 1)}, "L6"};
    }
    case GenKind::FUp:
        if (m == 0) return {mono(ParamId::alpha(s.b, a)), WState{false, 0, s.a, b}, {}, "L22"};
        return {{}, WState{false, 0, s.a, b}, e_desc(m - 1, 1) + Word{Generator::FUp(s.b, a)}, "L2,L10,L6"};
    case GenKind::FDown:
        if (n == 1) return {mono(ParamId::gamma(a, s.b)), std::nullopt, {Generator::FDown(s.a, b)}, "fdo-wup-1"};
        if (m < n - 1)
            return {{}, WState{false, m, a, s.a}, {Generator::E(n - 1), Generator::FDown(s.b, b)}, "L3,L8"};
        return {{}, WState{true, 0, a, s.a}, {Generator::FDown(s.b, b)}, "L14,L11"};
    default: break;
    }
    throw std::logic_error("absorb_rule: odd generator");
}

/// Absorbs every generator in [lo, r) into the odd factor starting at r, right to left.
/// Returns the final state, or nothing if the odd factor was consumed.
inline std::optional<WState> absorb(Rewriter& rw, std::size_t lo, std::size_t r, WState st) {
    const int n = rw.n();
    while (r > lo) {
        const Generator s = rw.word()[r - 1];
        auto res = absorb_rule(s, st, n);
        Word rep = (res.state ? res.state->word(n) : Word{}) + res.tail;
        rw.apply(r - 1, 1 + st.word(n).size(), res.scalar, rep, res.rule);
        --r;
        if (!res.state) return std::nullopt;
        st = *res.state;
    }
    return st;
}

struct Combined {
    Monomial scalar;
    Word word;
    std::string rule;
};

/// P * W(state) for an odd generator P adjacent to the odd factor.
inline Combined combine(const Generator& P, const WState& st, int n) {
    const Label &c = P.a, &d = P.b, &a = st.a, &b = st.b;
    const bool pup = P.kind == GenKind::WUp;
    if (st.down) {
        if (pup) return {mono(ParamId::delta(d, b)), {Generator::FUp(c, a)}, "L29"};
        return {{}, Word{Generator::FDown(d, b)} + e_desc(n - 1, 1) + Word{Generator::FUp(c, a)}, "L17"};
    }
    const int m = st.m;
    if (m == 0) {
        if (pup) return {{}, Word{Generator::FUp(c, a)} + e_asc(1, n - 1) + Word{Generator::FDown(d, b)}, "L16"};
        return {mono(ParamId::alpha(c, a)), {Generator::FDown(d, b)}, "L24"};
    }
    if (pup) {
        if (m < n - 1)
            return {{},
                    e_desc(m + 1, 2) + Word{Generator::FUp(c, a)} + e_asc(1, n - 1) + Word{Generator::FDown(d, b)},
                    "L6,L16"};
        return {{}, {Generator::FUp(c, a), Generator::FDown(d, b)}, "L15,L18"};
    }
    return {{}, e_desc(m - 1, 1) + Word{Generator::FUp(c, a), Generator::FDown(d, b)}, "L7,L18"};
}

inline Diagram checked_left_factor(const Generator& g, const Diagram& rest, const Diagram& d) {
    auto c = concat(generator_diagram(g, d.n(), d.X()), rest);
    if (!c.coeff.is_one() || !c.trace.clean() || !(c.diagram == d))
        throw std::logic_error("left division by " + g.str() + " failed for " + d.str());
    return rest;
}

/// D'' with e_i * D'' = D, for D with a simple link at i on the left.
inline Diagram divide_left_e(const Diagram& d, int i) {
    Endpoint y = d.at(d.pos(Lnode(i + 1)) + 1);
    Endpoint x = d.partner(y);
    std::vector<Pair> ps;
    for (auto& [u, v] : d.pairs()) {
        if (u == Lnode(i) || v == Lnode(i) || u == y || v == y) continue;
        ps.push_back({u, v});
    }
    ps.push_back({Lnode(i + 1), y});
    ps.push_back({Lnode(i), x});
    return checked_left_factor(Generator::E(i), Diagram(d.n(), d.X(), d.top_labels(), d.bottom_labels(), ps), d);
}

/// D'' with f(a,b) * D'' = D, where f is f_up (top link at L1) or f_down (bottom link at Ln).
inline Diagram divide_left_f(const Diagram& d, bool up) {
    const Side s = up ? Side::T : Side::B;
    const Endpoint node = up ? Lnode(1) : Lnode(d.n());
    const Endpoint p2{s, 2};
    const Endpoint x = d.partner(p2);
    auto shift = [&](Endpoint e) { return e.side == s ? Endpoint{s, e.idx - 2} : e; };
    std::vector<Pair> ps;
    for (auto& [u, v] : d.pairs()) {
        if (u == node || v == node || u == p2 || v == p2) continue;
        ps.push_back({shift(u), shift(v)});
    }
    ps.push_back({node, shift(x)});
    auto top = d.top_labels(), bot = d.bottom_labels();
    auto& lab = up ? top : bot;
    Generator g = up ? Generator::FUp(lab[0], lab[1]) : Generator::FDown(lab[0], lab[1]);
    lab.erase(lab.begin(), lab.begin() + 2);
    return checked_left_factor(g, Diagram(d.n(), d.X(), top, bot, ps), d);
}

}  // namespace detail

struct OddPairResult {
    Monomial scalar;
    Word word;
    std::vector<RewriteStep> steps;
};

/// Rewrites P * mid * S (P, S odd, mid even) to a scalar times a word with at most one odd
/// generator: mid is absorbed into the odd factor of S, which then meets P.
inline OddPairResult reduce_odd_pair(const Generator& P, const Word& mid, const Generator& S, int n,
                                     const LabelSet& X) {
    if (!P.is_odd() || !S.is_odd()) throw std::invalid_argument("reduce_odd_pair needs odd ends");
    for (auto& g : mid)
        if (g.is_odd()) throw std::invalid_argument("reduce_odd_pair needs an even middle");
    Rewriter rw(Word{P} + mid + Word{S}, n, X);
    auto st = detail::absorb(rw, 1, 1 + mid.size(), detail::state_of(S));
    if (st) {
        auto c = detail::combine(P, *st, n);
        rw.apply(0, 1 + st->word(n).size(), c.scalar, c.word, c.rule);
    }
    return {rw.scalar(), rw.word(), rw.steps()};
}

struct WIndex {
    Label a, b;
    int j = 0;
    auto operator<=>(const WIndex&) const = default;
    bool operator==(const WIndex&) const = default;
};

struct WTForm {
    Monomial scalar;
    std::optional<WIndex> W;
    Word T;
    std::vector<RewriteStep> steps;
    int fallbacks = 0;

    Word word(int n) const { return W ? W_word(W->a, W->b, W->j, n) + T : T; }
    /// `scalar | W(a,b,j) | T-word`
    std::string str() const {
        std::string w = W ? "W(" + W->a + "," + W->b + "," + std::to_string(W->j) + ")" : "ID";
        return scalar.str() + " | " + w + " | " + word_str(T);
    }
};

/// Canonical even word of phi(w) and the scalar relating them, with no label-reduction check.
inline std::pair<Monomial, Word> even_normal_form(const Word& w, int n, const LabelSet& X) {
    auto r = phi_eval(w, n, X);
    if (!r.diagram.is_even()) throw NotEvenDiagram();
    return {r.coeff, decompose_even(r.diagram)};
}

inline std::pair<Monomial, Word> even_canonical(const Word& w, int n, const LabelSet& X) {
    for (auto& g : w)
        if (g.is_odd()) throw std::invalid_argument("even_canonical needs even generators");
    if (!is_label_reduced(w, n, X)) throw NotLabelReduced();
    return even_normal_form(w, n, X);
}

inline WTForm to_wt_form(const Word& w, int n, const LabelSet& X) {
    Rewriter rw(w, n, X);
    int fallbacks = 0;
    auto odd_positions = [&] {
        std::vector<std::size_t> p;
        for (std::size_t k = 0; k < rw.word().size(); ++k)
            if (rw.word()[k].is_odd()) p.push_back(k);
        return p;
    };

    for (auto p = odd_positions(); p.size() >= 2; p = odd_positions()) {
        const Word& cur = rw.word();
        auto r = reduce_odd_pair(cur[p[0]], subword(cur, p[0] + 1, p[1]), cur[p[1]], n, X);
        rw.apply(p[0], p[1] - p[0] + 1, r.scalar, r.word, "odd pair");
    }

    std::optional<detail::WState> st;
    if (auto p = odd_positions(); !p.empty()) st = detail::absorb(rw, 0, p[0], detail::state_of(rw.word()[p[0]]));

    auto reset = [&](const char* rule) {
        auto full = phi_eval(rw.word(), n, X);
        if (full.diagram.is_even()) {
            rw.apply(0, rw.word().size(), full.coeff, decompose_even(full.diagram), rule);
            st.reset();
        } else {
            auto od = decompose_odd(full.diagram);
            rw.apply(0, rw.word().size(), full.coeff, W_word(od.a, od.b, od.j, n) + decompose_even(od.remainder),
                     rule);
            st = detail::WState{od.j == n, od.j == n ? 0 : od.j, od.a, od.b};
        }
        ++fallbacks;
    };

    for (;;) {
        const std::size_t L = st ? st->word(n).size() : 0;
        const std::size_t tlen = rw.word().size() - L;
        auto tr = phi_eval(subword(rw.word(), L, rw.word().size()), n, X);
        // at n = 1 a product of even generators can be odd
        if (!tr.diagram.is_even()) {
            reset("n=1 parity");
            continue;
        }
        Word nt = decompose_even(tr.diagram);
        if (nt != subword(rw.word(), L, rw.word().size()) || !tr.coeff.is_one())
            rw.apply(L, tlen, tr.coeff, nt, "even normal form");
        if (!st) break;
        const Diagram& Td = tr.diagram;
        const int j = st->j(n);
        if (phi_eval(rw.word(), n, X).arcs > 0) {
            if (j <= n - 1 && Td.partner(Lnode(n)) == Bpt(1)) {
                Diagram rest = detail::divide_left_f(Td, false);
                Generator f = Generator::FDown(Td.label(Bpt(1)), Td.label(Bpt(2)));
                rw.apply(L, nt.size(), {}, Word{f} + decompose_even(rest), "left division");
                rw.apply(L - 1, 2, Monomial(ParamId::delta(st->b, f.a)), {Generator::WUp(st->a, f.b)}, "L28");
                st->b = f.b;
            } else if (j >= 1 && Td.partner(Lnode(1)) == Tpt(1)) {
                Diagram rest = detail::divide_left_f(Td, true);
                Generator f = Generator::FUp(Td.label(Tpt(1)), Td.label(Tpt(2)));
                rw.apply(L, nt.size(), {}, Word{f} + decompose_even(rest), "left division");
                detail::WState nst = *st;
                nst.a = f.b;
                rw.apply(0, L + 1, Monomial(ParamId::alpha(st->a, f.a)), nst.word(n), j == n ? "L23" : "L10,L21");
                st = nst;
            } else {
                reset("diagram fallback");
            }
            continue;
        }
        std::optional<int> i;
        for (int k = 1; k < j && !i; ++k)
            if (Td.has_simple_link(Side::L, k)) i = k;
        if (!i) break;
        Diagram rest = detail::divide_left_e(Td, *i);
        rw.apply(L, nt.size(), {}, Word{Generator::E(*i)} + decompose_even(rest), "left division");
        detail::WState nst{false, *i - 1, st->a, st->b};
        rw.apply(0, L + 1, {}, nst.word(n) + e_desc(j - 1, *i), j == n ? "wuponly" : "L5,L6");
        st = nst;
    }

    WTForm f;
    f.scalar = rw.scalar();
    f.steps = rw.steps();
    f.fallbacks = fallbacks;
    std::size_t L = 0;
    if (st) {
        f.W = WIndex{st->a, st->b, st->j(n)};
        L = st->word(n).size();
    }
    f.T = subword(rw.word(), L, rw.word().size());
    for (auto& g : f.T)
        if (g.is_odd()) throw std::logic_error("to_wt_form: odd generator left in T");
    auto r = phi_eval(rw.word(), n, X);
    if (!r.coeff.is_one() || !r.clean()) throw std::logic_error("to_wt_form: W*T is not a basis diagram");
    if (r.diagram.is_even() != !f.W) throw std::logic_error("to_wt_form: parity mismatch");
    if (f.W && f.W->j != odd_index(r.diagram)) throw std::logic_error("to_wt_form: j is not minimal");
    return f;
}

/// Left descent set read off phi(T): E(i) for simple links at i, FUp at a top link at L1,
/// FDown at a bottom link at Ln.
inline std::set<Generator> left_descent_set(const Word& T, int n, const LabelSet& X) {
    auto r = phi_eval(T, n, X);
    const Diagram& d = r.diagram;
    if (!d.is_even()) throw NotEvenDiagram();
    std::set<Generator> s;
    for (int i = 1; i < n; ++i)
        if (d.has_simple_link(Side::L, i)) s.insert(Generator::E(i));
    if (d.partner(Lnode(1)) == Tpt(1)) s.insert(Generator::FUp(d.label(Tpt(1)), d.label(Tpt(2))));
    if (d.partner(Lnode(n)) == Bpt(1)) s.insert(Generator::FDown(d.label(Bpt(1)), d.label(Bpt(2))));
    return s;
}

inline std::vector<Generator> even_generators(int n, const LabelSet& X) {
    std::vector<Generator> g;
    for (int i = 1; i < n; ++i) g.push_back(Generator::E(i));
    for (auto& a : X)
        for (auto& b : X) g.push_back(Generator::FUp(a, b));
    for (auto& a : X)
        for (auto& b : X) g.push_back(Generator::FDown(a, b));
    return g;
}

struct OracleEntry {
    int min_len = 0;
    std::vector<Word> witnesses;  // coefficient-1 words of length min_len
    std::set<Generator> leads;
};

/// Breadth-first search over even generator words. min_len is the least length of any word
/// whose image is a scalar multiple of the diagram; witnesses are the coefficient-1 words of
/// that length, built along clean edges between consecutive levels.
inline std::map<Diagram, OracleEntry> even_reduced_oracle(int n, const LabelSet& X, int max_len) {
    const auto gens = even_generators(n, X);
    std::vector<Diagram> gd;
    for (auto& g : gens) gd.push_back(generator_diagram(g, n, X));
    std::map<Diagram, OracleEntry> out;
    Diagram id = Diagram::identity(n, X);
    out[id] = {0, {Word{}}, {}};
    std::vector<Diagram> frontier{id};
    for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<std::vector<ConcatResult>> prod(frontier.size());
        parallel_for(frontier.size(), [&](std::size_t k) {
            for (auto& g : gd) prod[k].push_back(concat(frontier[k], g));
        });
        std::vector<Diagram> next;
        for (std::size_t k = 0; k < frontier.size(); ++k) {
            const OracleEntry src = out.at(frontier[k]);
            for (std::size_t g = 0; g < gens.size(); ++g) {
                const auto& c = prod[k][g];
                auto it = out.find(c.diagram);
                if (it == out.end()) {
                    it = out.emplace(c.diagram, OracleEntry{len, {}, {}}).first;
                    next.push_back(c.diagram);
                }
                if (it->second.min_len != len || !c.coeff.is_one()) continue;
                for (auto& w : src.witnesses) {
                    it->second.witnesses.push_back(w + Word{gens[g]});
                    it->second.leads.insert(w.empty() ? gens[g] : w.front());
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace diagalg
