#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coeff.hpp"
#include "diagram.hpp"
#include "labelalg.hpp"
#include "parallel.hpp"
#include "presentation.hpp"

namespace diagalg {

struct InvalidDecoration : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotEvenReduced : std::invalid_argument {
    NotEvenReduced() : std::invalid_argument("word is not even-reduced") {}
};

/// Basis diagram of the symplectic blob algebra: a TL matching on L1..Ln, R1..Rn and,
/// per string, a sequence over {t, b} read from its lower endpoint in the order
/// L1 < ... < Ln < Rn < ... < R1.
class BlobDiagram {
public:
    BlobDiagram() = default;

    /// Each decoration is given at either endpoint of its string, read from that endpoint.
    BlobDiagram(int n, const std::vector<Pair>& pairs, const std::vector<std::pair<Endpoint, std::string>>& dec = {})
        : n_(n), mate_(2 * n, -1), dec_(2 * n) {
        for (auto& [a, b] : pairs) {
            int p = index(a), q = index(b);
            if (mate_[p] >= 0 || mate_[q] >= 0 || p == q) throw std::invalid_argument("endpoint used twice");
            mate_[p] = q;
            mate_[q] = p;
        }
        for (int p = 0; p < 2 * n; ++p)
            if (mate_[p] < 0) throw std::invalid_argument("unmatched endpoint " + endpoint(p).str());
        for (auto& [e, s] : dec) {
            int p = index(e);
            for (char c : s)
                if (c != 't' && c != 'b') throw std::invalid_argument("decoration must be over t and b");
            std::string r = s;
            if (p > mate_[p]) std::reverse(r.begin(), r.end());
            dec_[std::min(p, mate_[p])] = r;
        }
    }

    static std::vector<Pair> identity_pairs(int n) {
        std::vector<Pair> ps;
        for (int i = 1; i <= n; ++i) ps.push_back({Lnode(i), Rnode(i)});
        return ps;
    }
    static BlobDiagram identity(int n) { return BlobDiagram(n, identity_pairs(n)); }

    int n() const { return n_; }

    int index(Endpoint e) const {
        if (e.idx < 1 || e.idx > n_ || e.is_boundary()) throw std::invalid_argument("bad endpoint " + e.str());
        return e.side == Side::L ? e.idx - 1 : 2 * n_ - e.idx;
    }
    Endpoint endpoint(int p) const { return p < n_ ? Lnode(p + 1) : Rnode(2 * n_ - p); }
    Endpoint partner(Endpoint e) const { return endpoint(mate_[index(e)]); }
    const std::vector<int>& mates() const { return mate_; }

    /// Decoration of the string at e, read starting from e.
    std::string decoration_from(Endpoint e) const {
        int p = index(e), q = mate_[p];
        std::string s = dec_[std::min(p, q)];
        if (p > q) std::reverse(s.begin(), s.end());
        return s;
    }

    /// Strings as (lower, upper, decoration), in order of the lower endpoint.
    struct String {
        Endpoint lower, upper;
        std::string dec;
    };
    std::vector<String> strings() const {
        std::vector<String> out;
        for (int p = 0; p < 2 * n_; ++p)
            if (p < mate_[p]) out.push_back({endpoint(p), endpoint(mate_[p]), dec_[p]});
        return out;
    }

    int blob_count() const {
        int c = 0;
        for (auto& s : dec_) c += static_cast<int>(s.size());
        return c;
    }

    /// `S(n=..;pairs=(E,E);...;dec=<string index>:<t|b...>;...)`, strings numbered from 1.
    std::string str() const {
        std::string s = "S(n=" + std::to_string(n_) + ";pairs=", d;
        int k = 0;
        for (auto& st : strings()) {
            ++k;
            if (k > 1) s += ';';
            s += "(" + st.lower.str() + "," + st.upper.str() + ")";
            if (!st.dec.empty()) d += (d.empty() ? "" : ";") + std::to_string(k) + ":" + st.dec;
        }
        return s + ";dec=" + d + ")";
    }

    std::optional<std::string> validate() const;

    auto key() const { return std::tie(n_, mate_, dec_); }
    bool operator==(const BlobDiagram& o) const { return key() == o.key(); }
    bool operator<(const BlobDiagram& o) const { return key() < o.key(); }

private:
    int n_ = 0;
    std::vector<int> mate_;
    std::vector<std::string> dec_;  // at lower endpoint positions
};

namespace detail {

/// Whether the strings can be drawn with every t touching the top edge and every b the
/// bottom edge. Each touch becomes two adjacent slots on its edge; the search runs over
/// the order of touches along each edge and the slot order within each touch.
inline bool blobs_deformable(const BlobDiagram& d) {
    const int n = d.n();
    struct Touch {
        int string, k;
    };
    auto strs = d.strings();
    std::vector<Touch> top, bot;
    int total = 0;
    for (int s = 0; s < static_cast<int>(strs.size()); ++s)
        for (int k = 0; k < static_cast<int>(strs[s].dec.size()); ++k, ++total)
            (strs[s].dec[k] == 't' ? top : bot).push_back({s, k});
    if (total == 0) return true;
    if (total > 8) throw std::length_error("too many blobs for the deformability search");

    std::vector<int> ptop(top.size()), pbot(bot.size());
    for (std::size_t i = 0; i < ptop.size(); ++i) ptop[i] = static_cast<int>(i);
    for (std::size_t i = 0; i < pbot.size(); ++i) pbot[i] = static_cast<int>(i);
    const int nb = static_cast<int>(bot.size()), nt = static_cast<int>(top.size());
    const int size = 2 * n + 2 * total;
    auto node_slot = [&](Endpoint e) {
        int p = d.index(e);
        return p < n ? p : p + 2 * nb;
    };
    // slot[string][k] = first slot of the k-th touch
    std::vector<std::vector<int>> first(strs.size());
    for (std::size_t s = 0; s < strs.size(); ++s) first[s].resize(strs[s].dec.size());
    do {
        do {
            for (int o = 0; o < nb; ++o) first[bot[pbot[o]].string][bot[pbot[o]].k] = n + 2 * o;
            for (int o = 0; o < nt; ++o) first[top[ptop[o]].string][top[ptop[o]].k] = 2 * n + 2 * nb + 2 * o;
            for (unsigned mask = 0; mask < (1u << total); ++mask) {
                std::vector<int> mate(size, -1);
                int bit = 0;
                for (std::size_t s = 0; s < strs.size(); ++s) {
                    int prev = node_slot(strs[s].lower);
                    for (std::size_t k = 0; k < strs[s].dec.size(); ++k, ++bit) {
                        int f = first[s][k], flip = (mask >> bit) & 1;
                        int in = f + flip, out = f + 1 - flip;
                        mate[prev] = in;
                        mate[in] = prev;
                        prev = out;
                    }
                    int last = node_slot(strs[s].upper);
                    mate[prev] = last;
                    mate[last] = prev;
                }
                if (chords_noncrossing(mate)) return true;
            }
        } while (std::next_permutation(pbot.begin(), pbot.end()));
    } while (std::next_permutation(ptop.begin(), ptop.end()));
    return false;
}

}  // namespace detail

inline std::optional<std::string> BlobDiagram::validate() const {
    if (!chords_noncrossing(mate_)) return "strings cross";
    const bool odd = n_ % 2;
    for (auto& s : strings()) {
        for (std::size_t k = 0; k + 1 < s.dec.size(); ++k)
            if (s.dec[k] == s.dec[k + 1]) return "adjacent equal blobs on " + s.lower.str();
        if (odd && s.dec.size() >= 3) return "alternating blob triple on " + s.lower.str();
    }
    if (!detail::blobs_deformable(*this)) return "blobs cannot all reach their boundaries";
    return std::nullopt;
}

struct SbOptions {
    /// Use the n-odd kappa rules regardless of n; only meaningful as a negative control.
    bool force_odd_rules = false;
    bool validate = true;
};

namespace detail {

/// Reduces one decoration sequence in place; cyclic for loops. Kappa rules come first.
inline void reduce_blobs(std::string& s, bool cyclic, bool odd_rules, Monomial& c) {
    for (;;) {
        const int len = static_cast<int>(s.size());
        auto at = [&](int i) { return s[i % len]; };
        bool done = false;
        if (odd_rules && len >= 3) {
            int lim = cyclic ? len : len - 2;
            for (int i = 0; i < lim && !done; ++i)
                if (at(i) != at(i + 1) && at(i) == at(i + 2)) {
                    c *= ParamId::kappa();
                    std::string r;
                    for (int k = 0; k < len; ++k)
                        if (k != (i + 1) % len && k != (i + 2) % len) r += s[k];
                    s = r;
                    done = true;
                }
        }
        if (!done && len >= 2) {
            int lim = cyclic ? len : len - 1;
            for (int i = 0; i < lim && !done; ++i)
                if (at(i) == at(i + 1)) {
                    c *= at(i) == 't' ? ParamId::sb_alpha(2) : ParamId::sb_delta(2);
                    s.erase((i + 1) % len, 1);
                    done = true;
                }
        }
        if (!done) return;
    }
}

inline Monomial loop_value(std::string s, bool odd_rules) {
    Monomial c;
    reduce_blobs(s, true, odd_rules, c);
    if (s.empty()) c *= ParamId::beta();
    else if (s == "t") c *= ParamId::sb_alpha(1);
    else if (s == "b") c *= ParamId::sb_delta(1);
    else if (s.size() == 2 && !odd_rules) c *= ParamId::kappa();
    else throw InvalidDecoration("loop with decoration " + s + " has no value");
    return c;
}

}  // namespace detail

struct SbProduct {
    Monomial coeff;
    BlobDiagram diagram;
};

inline SbProduct sb_multiply(const BlobDiagram& d1, const BlobDiagram& d2, const SbOptions& opt = {}) {
    if (d1.n() != d2.n()) throw SizeMismatch(d1.n(), d2.n());
    const int n = d1.n();
    const bool odd_rules = opt.force_odd_rules || n % 2;
    const BlobDiagram* ds[2] = {&d1, &d2};
    SbProduct r;
    // visited middle nodes: d1.R_i == d2.L_i
    std::vector<bool> seen(n + 1, false);

    // Walks from endpoint e of diagram k; returns the far endpoint (side, diagram) and the decoration.
    auto walk = [&](int k, Endpoint e, std::string& dec) {
        for (;;) {
            dec += ds[k]->decoration_from(e);
            Endpoint p = ds[k]->partner(e);
            bool interior = (k == 0 && p.side == Side::R) || (k == 1 && p.side == Side::L);
            if (!interior) return std::make_pair(k, p);
            if (seen[p.idx]) return std::make_pair(-1, p);
            seen[p.idx] = true;
            k = 1 - k;
            e = k == 1 ? Lnode(p.idx) : Rnode(p.idx);
        }
    };

    std::vector<Pair> pairs;
    std::vector<std::pair<Endpoint, std::string>> decs;
    auto add_string = [&](Endpoint a, Endpoint b, std::string dec) {
        detail::reduce_blobs(dec, false, odd_rules, r.coeff);
        BlobDiagram tmp = BlobDiagram::identity(n);
        int ia = tmp.index(a), ib = tmp.index(b);
        if (ia > ib) {
            std::reverse(dec.begin(), dec.end());
            std::swap(a, b);
        }
        pairs.push_back({a, b});
        if (!dec.empty()) decs.push_back({a, dec});
    };
    std::vector<bool> done1(n + 1, false), done2(n + 1, false);
    for (int i = 1; i <= n; ++i) {
        for (int k = 0; k < 2; ++k) {
            auto& done = k == 0 ? done1 : done2;
            if (done[i]) continue;
            Endpoint e = k == 0 ? Lnode(i) : Rnode(i);
            std::string dec;
            auto [kk, f] = walk(k, e, dec);
            (kk == 0 ? done1 : done2)[f.idx] = true;
            done[i] = true;
            add_string(e, f, dec);
        }
    }
    for (int i = 1; i <= n; ++i) {
        if (seen[i]) continue;
        seen[i] = true;
        std::string dec;
        walk(0, Rnode(i), dec);
        r.coeff *= detail::loop_value(dec, odd_rules);
    }

    if (!odd_rules) {
        // two doubly decorated cups, one on each side, become two decorated throughlines
        int left = -1, right = -1;
        for (int s = 0; s < static_cast<int>(pairs.size()); ++s) {
            auto& [a, b] = pairs[s];
            auto it = std::find_if(decs.begin(), decs.end(), [&](auto& x) { return x.first == a; });
            if (it == decs.end()) continue;
            if (a.side == Side::L && b.side == Side::L && it->second == "tb") left = s;
            if (a.side == Side::R && b.side == Side::R && it->second == "bt") right = s;
        }
        if (left >= 0 && right >= 0) {
            r.coeff *= ParamId::kappa();
            Endpoint li = pairs[left].first, lj = pairs[left].second;
            Endpoint rq = pairs[right].first, rp = pairs[right].second;
            std::vector<Pair> np;
            std::vector<std::pair<Endpoint, std::string>> nd;
            for (int s = 0; s < static_cast<int>(pairs.size()); ++s)
                if (s != left && s != right) np.push_back(pairs[s]);
            for (auto& x : decs)
                if (!(x.first == li) && !(x.first == rq)) nd.push_back(x);
            np.push_back({li, rp});
            np.push_back({lj, rq});
            nd.push_back({li, "t"});
            nd.push_back({lj, "b"});
            pairs = std::move(np);
            decs = std::move(nd);
        }
    }
    r.diagram = BlobDiagram(n, pairs, decs);
    if (opt.validate)
        if (auto v = r.diagram.validate()) throw InvalidDecoration(*v + ": " + r.diagram.str());
    return r;
}

enum class SbGenKind { E, F0, Fn };

struct SbGen {
    SbGenKind kind = SbGenKind::E;
    int i = 0;
    static SbGen E(int i) { return {SbGenKind::E, i}; }
    static SbGen F0() { return {SbGenKind::F0, 0}; }
    static SbGen Fn() { return {SbGenKind::Fn, 0}; }
    std::string str() const {
        switch (kind) {
        case SbGenKind::E: return "e" + std::to_string(i);
        case SbGenKind::F0: return "f0";
        case SbGenKind::Fn: return "fn";
        }
        return "?";
    }
};

using SbWord = std::vector<SbGen>;

inline std::string sb_word_str(const SbWord& w) {
    if (w.empty()) return "ID";
    std::string s;
    for (auto& g : w) s += (s.empty() ? "" : ".") + g.str();
    return s;
}

inline BlobDiagram sb_generator(const SbGen& g, int n) {
    if (n < 1) throw IndexOutOfRange("n must be positive");
    std::vector<Pair> ps;
    switch (g.kind) {
    case SbGenKind::E:
        if (g.i < 1 || g.i > n - 1) throw IndexOutOfRange("e" + std::to_string(g.i) + " needs 1 <= i <= n-1");
        for (int k = 1; k <= n; ++k)
            if (k != g.i && k != g.i + 1) ps.push_back({Lnode(k), Rnode(k)});
        ps.push_back({Lnode(g.i), Lnode(g.i + 1)});
        ps.push_back({Rnode(g.i + 1), Rnode(g.i)});
        return BlobDiagram(n, ps);
    case SbGenKind::F0: return BlobDiagram(n, BlobDiagram::identity_pairs(n), {{Lnode(1), "t"}});
    case SbGenKind::Fn: return BlobDiagram(n, BlobDiagram::identity_pairs(n), {{Lnode(n), "b"}});
    }
    throw std::logic_error("unreachable");
}

inline SbProduct sb_evaluate(const SbWord& w, int n, const SbOptions& opt = {}) {
    SbProduct r{Monomial{}, BlobDiagram::identity(n)};
    for (auto& g : w) {
        auto p = sb_multiply(r.diagram, sb_generator(g, n), opt);
        r.coeff *= p.coeff;
        r.diagram = std::move(p.diagram);
    }
    return r;
}

/// The words I and J of relations S11 and S12.
inline std::pair<SbWord, SbWord> sb_IJ(int n) {
    SbWord I, J;
    if (n % 2) {
        I.push_back(SbGen::Fn());
        for (int k = 1; k <= (n - 1) / 2; ++k) I.push_back(SbGen::E(2 * k - 1));
        J.push_back(SbGen::F0());
        for (int k = 1; k <= (n - 1) / 2; ++k) J.push_back(SbGen::E(2 * k));
    } else {
        for (int k = 1; k <= n / 2; ++k) I.push_back(SbGen::E(2 * k - 1));
        J = {SbGen::F0(), SbGen::Fn()};
        for (int k = 1; k <= n / 2 - 1; ++k) J.push_back(SbGen::E(2 * k));
    }
    return {I, J};
}

struct SbRelation {
    std::string id;
    SbWord lhs;
    Monomial scalar;
    SbWord rhs;
};

inline std::vector<SbRelation> sb_relation_catalogue(int n) {
    using G = SbGen;
    std::vector<SbRelation> rs;
    auto M = [](ParamId p) { return Monomial(p); };
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            if (std::abs(i - j) >= 2) rs.push_back({"S1", {G::E(i), G::E(j)}, {}, {G::E(j), G::E(i)}});
            if (std::abs(i - j) == 1) rs.push_back({"S2", {G::E(i), G::E(j), G::E(i)}, {}, {G::E(i)}});
        }
    for (int j = 1; j < n; ++j) rs.push_back({"S3", {G::E(j), G::E(j)}, M(ParamId::beta()), {G::E(j)}});
    for (int j = 2; j < n; ++j) rs.push_back({"S4", {G::F0(), G::E(j)}, {}, {G::E(j), G::F0()}});
    if (n >= 2) rs.push_back({"S5", {G::E(1), G::F0(), G::E(1)}, M(ParamId::sb_alpha(1)), {G::E(1)}});
    rs.push_back({"S6", {G::F0(), G::F0()}, M(ParamId::sb_alpha(2)), {G::F0()}});
    for (int j = 1; j <= n - 2; ++j) rs.push_back({"S7", {G::Fn(), G::E(j)}, {}, {G::E(j), G::Fn()}});
    if (n >= 2)
        rs.push_back({"S8", {G::E(n - 1), G::Fn(), G::E(n - 1)}, M(ParamId::sb_delta(1)), {G::E(n - 1)}});
    rs.push_back({"S9", {G::Fn(), G::Fn()}, M(ParamId::sb_delta(2)), {G::Fn()}});
    if (n >= 2) rs.push_back({"S10", {G::F0(), G::Fn()}, {}, {G::Fn(), G::F0()}});
    auto [I, J] = sb_IJ(n);
    auto cat = [](SbWord a, const SbWord& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    rs.push_back({"S11", cat(cat(I, J), I), M(ParamId::kappa()), I});
    rs.push_back({"S12", cat(cat(J, I), J), M(ParamId::kappa()), J});
    return rs;
}

struct SbReport {
    int checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

inline SbReport sb_verify_relations(int n, const SbOptions& opt = {}) {
    auto rels = sb_relation_catalogue(n);
    std::vector<std::string> msg(rels.size());
    parallel_for(rels.size(), [&](std::size_t k) {
        auto& r = rels[k];
        try {
            auto l = sb_evaluate(r.lhs, n, opt), rr = sb_evaluate(r.rhs, n, opt);
            if (!(l.diagram == rr.diagram) || !(l.coeff == r.scalar * rr.coeff))
                msg[k] = r.id + " " + sb_word_str(r.lhs) + ": " + l.coeff.str() + " * " + l.diagram.str() +
                         " vs " + (r.scalar * rr.coeff).str() + " * " + rr.diagram.str();
        } catch (const std::exception& e) {
            msg[k] = r.id + " " + sb_word_str(r.lhs) + ": " + e.what();
        }
    });
    SbReport rep;
    rep.checked = static_cast<int>(rels.size());
    for (auto& m : msg)
        if (!m.empty()) rep.failures.push_back(m);
    return rep;
}

/// e_i -> e_i, f_up -> f_0, f_down -> f_n.
inline SbWord sigma(const Word& w) {
    SbWord s;
    for (auto& g : w) {
        switch (g.kind) {
        case GenKind::E: s.push_back(SbGen::E(g.i)); break;
        case GenKind::FUp: s.push_back(SbGen::F0()); break;
        case GenKind::FDown: s.push_back(SbGen::Fn()); break;
        default: throw std::invalid_argument("sigma: odd generator");
        }
    }
    return s;
}

struct SigmaReport {
    Monomial coeff;
    BlobDiagram image;
    int blobs = 0;
    int half_links = 0;
    bool ok() const { return coeff.is_one() && blobs == half_links; }
};

inline SigmaReport sigma_check(const Word& T, int n, const LabelSet& X) {
    for (auto& g : T)
        if (g.is_odd()) throw NotEvenReduced();
    auto r = phi_eval(T, n, X);
    if (!r.coeff.is_one() || !r.clean() || !r.diagram.is_even()) throw NotEvenReduced();
    auto s = sb_evaluate(sigma(T), n);
    return {s.coeff, s.diagram, s.diagram.blob_count(), r.diagram.boundary_link_count() / 2};
}

}  // namespace diagalg
