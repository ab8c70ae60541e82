#pragma once

// Reference implementations used only by the tests. They share no code paths with the
// library beyond the Diagram accessors and the Monomial container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "diagalg/diagalg.hpp"

namespace oracle {

using namespace diagalg;

/// Boundary of a diagram drawn as a circle: L1..Ln, B1..Bb, Rn..R1, Tt..T1. Kind 0 is a
/// node, 1 a boundary point.
inline std::vector<int> circle_kinds(int n, int t, int b) {
    std::vector<int> k;
    for (int i = 0; i < n; ++i) k.push_back(0);
    for (int i = 0; i < b; ++i) k.push_back(1);
    for (int i = 0; i < n; ++i) k.push_back(0);
    for (int i = 0; i < t; ++i) k.push_back(1);
    return k;
}

inline bool crosses(std::pair<int, int> x, std::pair<int, int> y) {
    auto [a, b] = x;
    auto [c, d] = y;
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

/// Counts perfect matchings on the points with no crossing pair and no point-point pair by
/// trying every partner for the first free point and testing against all placed chords.
inline std::uint64_t count_matchings(const std::vector<int>& kinds) {
    const int m = static_cast<int>(kinds.size());
    std::vector<bool> used(m, false);
    std::vector<std::pair<int, int>> chords;
    std::function<std::uint64_t()> rec = [&]() -> std::uint64_t {
        int p = 0;
        while (p < m && used[p]) ++p;
        if (p == m) return 1;
        std::uint64_t total = 0;
        used[p] = true;
        for (int q = p + 1; q < m; ++q) {
            if (used[q] || (kinds[p] == 1 && kinds[q] == 1)) continue;
            bool ok = true;
            for (auto& c : chords) ok = ok && !crosses(c, {p, q});
            if (!ok) continue;
            used[q] = true;
            chords.push_back({p, q});
            total += rec();
            chords.pop_back();
            used[q] = false;
        }
        used[p] = false;
        return total;
    };
    return m % 2 ? 0 : rec();
}

inline std::uint64_t count_diagrams(int n, int xsize) {
    std::uint64_t total = 0;
    for (int t = 0; t <= 2 * n; ++t)
        for (int b = 0; t + b <= 2 * n; ++b) {
            if ((t + b) % 2) continue;
            std::uint64_t lab = 1;
            for (int k = 0; k < t + b; ++k) lab *= static_cast<std::uint64_t>(xsize);
            total += count_matchings(circle_kinds(n, t, b)) * lab;
        }
    return total;
}

struct Product {
    Monomial coeff;
    Diagram diagram;
};

/// Concatenation by walking each string through the glued picture one segment at a time.
inline Product trace_concat(const Diagram& d1, const Diagram& d2) {
    const int n = d1.n();
    struct Pt {
        int which;  // 0 or 1
        Endpoint e;
        bool operator<(const Pt& o) const {
            return std::tie(which, e.side, e.idx) < std::tie(o.which, o.e.side, o.e.idx);
        }
    };
    auto mate = [&](const Pt& p) { return Pt{p.which, (p.which ? d2 : d1).partner(p.e)}; };
    // Merged positions: top 1..t1 then t1+1..t1+t2, same for bottom.
    auto merged = [&](const Pt& p) { return p.e.idx + (p.which ? (p.e.side == Side::T ? d1.t() : d1.b()) : 0); };
    auto label = [&](const Pt& p) { return (p.which ? d2 : d1).label(p.e); };
    auto is_free = [&](const Pt& p) {
        if (p.e.side == Side::T || p.e.side == Side::B) return true;
        return (p.which == 0 && p.e.side == Side::L) || (p.which == 1 && p.e.side == Side::R);
    };
    // Crossing the seam: R_i of d1 is L_i of d2.
    auto cross = [&](const Pt& p) { return p.which == 0 ? Pt{1, Lnode(p.e.idx)} : Pt{0, Rnode(p.e.idx)}; };

    std::set<Pt> seen;
    std::vector<std::pair<Pt, Pt>> strings;
    std::vector<Pt> starts;
    for (int k = 1; k <= d1.t(); ++k) starts.push_back({0, Tpt(k)});
    for (int k = 1; k <= d2.t(); ++k) starts.push_back({1, Tpt(k)});
    for (int k = 1; k <= d1.b(); ++k) starts.push_back({0, Bpt(k)});
    for (int k = 1; k <= d2.b(); ++k) starts.push_back({1, Bpt(k)});
    for (int i = 1; i <= n; ++i) starts.push_back({0, Lnode(i)});
    for (int i = 1; i <= n; ++i) starts.push_back({1, Rnode(i)});
    for (auto& s : starts) {
        if (seen.count(s)) continue;
        Pt cur = s;
        seen.insert(cur);
        for (;;) {
            Pt m = mate(cur);
            seen.insert(m);
            if (is_free(m)) {
                strings.push_back({s, m});
                break;
            }
            cur = cross(m);
            seen.insert(cur);
        }
    }
    Product r;
    for (int i = 1; i <= n; ++i) {
        Pt start{0, Rnode(i)};
        if (seen.count(start)) continue;
        r.coeff *= ParamId::beta();
        Pt cur = start;
        do {
            seen.insert(cur);
            Pt m = mate(cur);
            seen.insert(m);
            cur = cross(m);
        } while (!(cur.which == start.which && cur.e == start.e));
    }

    std::vector<std::pair<Pt, Pt>> kept;
    for (auto [a, b] : strings) {
        bool ta = a.e.side == Side::T, tb = b.e.side == Side::T;
        bool ba = a.e.side == Side::B, bb = b.e.side == Side::B;
        if ((ta || ba) && (tb || bb)) {
            if (ta && tb) {
                auto [x, y] = merged(a) < merged(b) ? std::pair{a, b} : std::pair{b, a};
                r.coeff *= ParamId::alpha(label(x), label(y));
            } else if (ba && bb) {
                auto [x, y] = merged(a) < merged(b) ? std::pair{a, b} : std::pair{b, a};
                r.coeff *= ParamId::delta(label(x), label(y));
            } else {
                auto [x, y] = ta ? std::pair{a, b} : std::pair{b, a};
                r.coeff *= ParamId::gamma(label(x), label(y));
            }
            continue;
        }
        kept.push_back({a, b});
    }
    // Renumber surviving boundary points by merged order.
    std::map<int, int> top_new, bot_new;
    std::vector<Label> tl, bl;
    std::vector<std::pair<int, Pt>> tops, bots;
    for (auto& [a, b] : kept)
        for (const Pt* p : {&a, &b}) {
            if (p->e.side == Side::T) tops.push_back({merged(*p), *p});
            if (p->e.side == Side::B) bots.push_back({merged(*p), *p});
        }
    std::sort(tops.begin(), tops.end(), [](auto& x, auto& y) { return x.first < y.first; });
    std::sort(bots.begin(), bots.end(), [](auto& x, auto& y) { return x.first < y.first; });
    for (auto& [pos, p] : tops) {
        tl.push_back(label(p));
        top_new[pos] = static_cast<int>(tl.size());
    }
    for (auto& [pos, p] : bots) {
        bl.push_back(label(p));
        bot_new[pos] = static_cast<int>(bl.size());
    }
    auto rename = [&](const Pt& p) -> Endpoint {
        if (p.e.side == Side::T) return Tpt(top_new.at(merged(p)));
        if (p.e.side == Side::B) return Bpt(bot_new.at(merged(p)));
        return p.e;
    };
    std::vector<Pair> ps;
    for (auto& [a, b] : kept) ps.push_back({rename(a), rename(b)});
    r.diagram = Diagram::make(n, d1.X(), tl, bl, ps);
    return r;
}

struct DescentEntry {
    int min_len = 0;
    bool clean = false;  // some coefficient-1 word of length min_len exists
    std::set<Generator> leads;
};

/// Level-by-level search over even generator words up to max_len. A prefix of a shortest
/// word is itself shortest, so leads propagate along edges between consecutive levels.
inline std::map<Diagram, DescentEntry> descent_oracle(int n, const LabelSet& X, int max_len) {
    std::vector<Generator> gens;
    for (int i = 1; i < n; ++i) gens.push_back(Generator::E(i));
    for (auto& a : X)
        for (auto& b : X) {
            gens.push_back(Generator::FUp(a, b));
            gens.push_back(Generator::FDown(a, b));
        }
    std::vector<Diagram> gd;
    for (auto& g : gens) gd.push_back(generator_diagram(g, n, X));

    std::map<Diagram, DescentEntry> out;
    Diagram id = Diagram::identity(n, X);
    out[id] = {0, true, {}};
    std::vector<Diagram> level{id};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Diagram> next;
        for (auto& d : level) {
            const DescentEntry src = out.at(d);
            for (std::size_t g = 0; g < gens.size(); ++g) {
                auto c = trace_concat(d, gd[g]);
                auto [it, fresh] = out.try_emplace(c.diagram, DescentEntry{len, false, {}});
                if (fresh) next.push_back(c.diagram);
                if (it->second.min_len != len || !src.clean || !c.coeff.is_one()) continue;
                it->second.clean = true;
                if (len == 1) it->second.leads.insert(gens[g]);
                else it->second.leads.insert(src.leads.begin(), src.leads.end());
            }
        }
        level = std::move(next);
    }
    return out;
}

inline LabelSet labels(int k) {
    LabelSet X;
    for (int i = 0; i < k; ++i) X.push_back(std::to_string(i));
    return X;
}

inline Word random_word(std::mt19937_64& rng, int n, const LabelSet& X, int max_len) {
    std::vector<Generator> gens;
    for (int i = 1; i < n; ++i) gens.push_back(Generator::E(i));
    for (auto& a : X)
        for (auto& b : X)
            for (auto k : {GenKind::FUp, GenKind::FDown, GenKind::WUp, GenKind::WDown}) gens.push_back({k, 0, a, b});
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    Word w;
    for (int k = len(rng); k > 0; --k) w.push_back(gens[pick(rng)]);
    return w;
}

inline SbWord random_sb_word(std::mt19937_64& rng, int n, int max_len) {
    std::vector<SbGen> gens{SbGen::F0(), SbGen::Fn()};
    for (int i = 1; i < n; ++i) gens.push_back(SbGen::E(i));
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    SbWord w;
    for (int k = len(rng); k > 0; --k) w.push_back(gens[pick(rng)]);
    return w;
}

}  // namespace oracle
