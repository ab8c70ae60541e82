#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "coeff.hpp"
#include "diagram.hpp"
#include "labelalg.hpp"
#include "parallel.hpp"

namespace diagalg {

/// A word in the presented algebra; the empty word is the identity.
using Word = std::vector<Generator>;

inline std::string word_str(const Word& w) {
    if (w.empty()) return "ID";
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "." : "") + w[k].str();
    return s;
}

inline Word operator+(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline Word subword(const Word& w, std::size_t from, std::size_t to) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

/// e_from e_{from±1} ... e_to, stepping towards `to`; empty when the range is reversed past 0.
inline Word e_run(int from, int to) {
    Word w;
    if (from <= to)
        for (int i = from; i <= to; ++i) w.push_back(Generator::E(i));
    else
        for (int i = from; i >= to; --i) w.push_back(Generator::E(i));
    return w;
}
inline Word e_asc(int from, int to) { return from > to ? Word{} : e_run(from, to); }
inline Word e_desc(int from, int to) { return from < to ? Word{} : e_run(from, to); }

inline int count_label_generators(const Word& w) {
    int c = 0;
    for (auto& g : w) c += g.is_label();
    return c;
}
inline int count_odd_generators(const Word& w) {
    int c = 0;
    for (auto& g : w) c += g.is_odd();
    return c;
}

struct PhiResult {
    Monomial coeff;
    Diagram diagram;
    int loops = 0;
    int arcs = 0;
    bool clean() const { return loops == 0 && arcs == 0; }
};

/// Left fold of generator diagrams. A product of basis diagrams is always a monomial
/// multiple of one basis diagram, so the fold stays in that form.
inline PhiResult phi_eval(const Word& w, int n, const LabelSet& X) {
    PhiResult r{Monomial{}, Diagram::identity(n, X), 0, 0};
    for (auto& g : w) {
        auto c = concat(r.diagram, generator_diagram(g, n, X));
        r.coeff *= c.coeff;
        r.loops += c.trace.loops;
        r.arcs += static_cast<int>(c.trace.arcs.size());
        r.diagram = std::move(c.diagram);
    }
    return r;
}

inline LinearCombination phi(const Word& w, int n, const LabelSet& X) {
    auto r = phi_eval(w, n, X);
    return LinearCombination(r.diagram, Polynomial(r.coeff));
}

struct ParityMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class SpecialKind { O, E, Theta, Omega };

inline Word special_word(SpecialKind k, int n) {
    Word w;
    bool odd = n % 2 == 1;
    switch (k) {
    case SpecialKind::O:
    case SpecialKind::E:
        if (!odd) throw ParityMismatch("O and E need n odd");
        for (int j = 1; j <= (n - 1) / 2; ++j) w.push_back(Generator::E(k == SpecialKind::O ? 2 * j - 1 : 2 * j));
        return w;
    case SpecialKind::Theta:
        if (odd) throw ParityMismatch("Theta needs n even");
        for (int j = 1; j <= n / 2; ++j) w.push_back(Generator::E(2 * j - 1));
        return w;
    case SpecialKind::Omega:
        if (odd) throw ParityMismatch("Omega needs n even");
        for (int j = 1; j <= n / 2 - 1; ++j) w.push_back(Generator::E(2 * j));
        return w;
    }
    return w;
}

/// w(j) = e_j e_{j-1} ... e_1 w↑(a,b) for j < n, and w↓(a,b) for j = n.
inline Word W_word(const Label& a, const Label& b, int j, int n) {
    if (j < 0 || j > n) throw IndexOutOfRange("W(j) needs 0 <= j <= n");
    if (j == n) return {Generator::WDown(a, b)};
    return e_desc(j, 1) + Word{Generator::WUp(a, b)};
}

struct Relation {
    std::string id;
    Word lhs;
    Monomial scalar;
    Word rhs;
    std::string condition;

    std::string str() const {
        return id + ": " + word_str(lhs) + " = " + (scalar.is_one() ? "" : scalar.str() + " ") + word_str(rhs);
    }
    auto key() const { return std::tie(id, lhs, scalar, rhs); }
    bool operator<(const Relation& o) const { return key() < o.key(); }
};

/// Every applicable defining relation and derived identity, instantiated over all
/// admissible indices and all label tuples from X.
inline std::vector<Relation> relation_catalogue(int n, const LabelSet& X) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    check_label_set(X);
    std::set<Relation> out;
    auto E = [](int i) { return Generator::E(i); };
    auto FU = [](const Label& a, const Label& b) { return Generator::FUp(a, b); };
    auto FD = [](const Label& a, const Label& b) { return Generator::FDown(a, b); };
    auto WU = [](const Label& a, const Label& b) { return Generator::WUp(a, b); };
    auto WD = [](const Label& a, const Label& b) { return Generator::WDown(a, b); };
    auto add = [&](const std::string& id, Word l, Monomial s, Word r, const std::string& cond = "") {
        out.insert({id, std::move(l), std::move(s), std::move(r), cond});
    };
    const Monomial one;
    const Monomial beta(ParamId::beta());

    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            if (std::abs(i - j) >= 2) add("L1", {E(i), E(j)}, one, {E(j), E(i)}, "|i-j|>=2");
            if (std::abs(i - j) == 1) add("L5", {E(i), E(j), E(i)}, one, {E(i)}, "|i-j|=1");
        }
    for (int j = 1; j < n; ++j) add("L19", {E(j), E(j)}, beta, {E(j)});

    bool odd = n % 2 == 1;
    Word O, Ev, Th, Om;
    if (odd) {
        O = special_word(SpecialKind::O, n);
        Ev = special_word(SpecialKind::E, n);
    } else {
        Th = special_word(SpecialKind::Theta, n);
        Om = special_word(SpecialKind::Omega, n);
    }
    Word up = e_asc(1, n - 1), down = e_desc(n - 1, 1);

    for (auto& a : X)
        for (auto& b : X) {
            for (int j = 2; j <= n - 1; ++j) add("L2", {FU(a, b), E(j)}, one, {E(j), FU(a, b)});
            for (int j = 1; j <= n - 2; ++j) add("L3", {FD(a, b), E(j)}, one, {E(j), FD(a, b)});
            for (int j = 2; j <= n - 1; ++j) add("L6", {E(j), WU(a, b)}, one, {WU(a, b), E(j - 1)});
            for (int j = 1; j <= n - 2; ++j) add("L7", {E(j), WD(a, b)}, one, {WD(a, b), E(j + 1)});
            if (n >= 2) {
                add("L12", Word{E(1), WU(a, b)}, one, up + Word{WD(a, b)});
                add("L13", Word{WU(a, b), E(n - 1)}, one, Word{WD(a, b)} + up);
                add("L14", Word{E(n - 1), WD(a, b)}, one, down + Word{WU(a, b)});
                add("L15", Word{WD(a, b), E(1)}, one, Word{WU(a, b)} + down);
                add("L21", {E(1), FU(a, b), E(1)}, Monomial(ParamId::alpha(a, b)), {E(1)});
                add("L26", {E(n - 1), FD(a, b), E(n - 1)}, Monomial(ParamId::delta(a, b)), {E(n - 1)});
            }
            if (odd) {
                add("fup-E", Word{FU(a, b)} + Ev, one, Ev + Word{FU(a, b)}, "n odd");
                add("fdo-O", Word{FD(a, b)} + O, one, O + Word{FD(a, b)}, "n odd");
                add("wup-O", Word{WU(a, b)} + O, one, Ev + Word{WU(a, b)}, "n odd");
                add("wdo-E", Word{WD(a, b)} + Ev, one, O + Word{WD(a, b)}, "n odd");
                if (n > 1) {
                    add("e1-wup-E", Word{E(1), WU(a, b)} + Ev, one, Word{WD(a, b)} + Ev, "n odd, n>1");
                    add("en1-wdo-O", Word{E(n - 1), WD(a, b)} + O, one, Word{WU(a, b)} + O, "n odd, n>1");
                    add("E-wdo-e1", Ev + Word{WD(a, b), E(1)}, one, Word{WU(a, b)} + O, "n odd, n>1");
                    add("O-wup-en1", O + Word{WU(a, b), E(n - 1)}, one, Word{WD(a, b)} + Ev, "n odd, n>1");
                }
            } else {
                add("L34", Th + Word{WU(a, b)} + Th, Monomial(ParamId::gamma(a, b)), Th, "n even");
                add("Theta-wup", Th + Word{WU(a, b)}, one, Th + Word{WD(a, b)}, "n even");
                add("wup-Theta", Word{WU(a, b)} + Th, one, Word{WD(a, b)} + Th, "n even");
                add("e1-wup-Omega", Word{E(1), WU(a, b)} + Om, one, Th + Word{WU(a, b)}, "n even");
                add("en1-wdo-Omega", Word{E(n - 1), WD(a, b)} + Om, one, Th + Word{WD(a, b)}, "n even");
            }
        }

    for (auto& a : X)
        for (auto& b : X)
            for (auto& c : X)
                for (auto& d : X) {
                    Monomial al(ParamId::alpha(a, b)), de(ParamId::delta(a, b)), ga(ParamId::gamma(a, b));
                    if (n >= 2) {
                        add("L4", {FU(a, b), FD(c, d)}, one, {FD(c, d), FU(a, b)});
                        add("L8", {FD(a, b), WU(c, d)}, one, {WU(c, a), E(n - 1), FD(b, d)});
                        add("L9", {FU(a, b), WD(c, d)}, one, {WD(a, d), E(1), FU(b, c)});
                        add("L10", {WU(a, b), FU(c, d)}, one, {FU(a, c), E(1), WU(d, b)});
                        add("L11", {WD(a, b), FD(c, d)}, one, {FD(b, c), E(n - 1), WD(a, d)});
                        add("L18", {WD(a, b), E(1), WU(c, d)}, one, {FU(a, c), FD(b, d)});
                        add("wup-en1-wdo", {WU(a, b), E(n - 1), WD(c, d)}, one, {FU(a, c), FD(b, d)});
                    }
                    add("L16", {WU(a, b), WU(c, d)}, one, Word{FU(a, c)} + up + Word{FD(b, d)});
                    add("L17", {WD(a, b), WD(c, d)}, one, Word{FD(b, d)} + down + Word{FU(a, c)});
                    add("L20", {FU(c, a), FU(b, d)}, al, {FU(c, d)});
                    add("L22", {FU(c, a), WU(b, d)}, al, {WU(c, d)});
                    add("L23", {WD(a, d), FU(b, c)}, al, {WD(c, d)});
                    add("L24", {WD(a, c), WU(b, d)}, al, {FD(c, d)});
                    add("L25", {FD(c, a), FD(b, d)}, de, {FD(c, d)});
                    add("L27", {FD(c, a), WD(d, b)}, de, {WD(d, c)});
                    add("L28", {WU(c, a), FD(b, d)}, de, {WU(c, d)});
                    add("L29", {WU(c, a), WD(d, b)}, de, {FU(c, d)});
                    if (odd) {
                        add("L30", Word{WU(c, b)} + O + Word{WU(a, d)} + O, ga, Word{WU(c, d)} + O, "n odd");
                        add("L31", Word{FU(c, a)} + Ev + Word{WD(d, b)} + Ev, ga, Word{FU(c, d)} + Ev, "n odd");
                        add("L32", Word{WD(a, d)} + Ev + Word{WD(c, b)} + Ev, ga, Word{WD(c, d)} + Ev, "n odd");
                        add("L33", Word{FD(c, b)} + O + Word{WU(a, d)} + O, ga, Word{FD(c, d)} + O, "n odd");
                        add("fup-E-fdo-O", Word{FU(c, a)} + Ev + Word{FD(b, d)} + O, ga, Word{WU(c, d)} + O, "n odd");
                        add("fdo-O-fup-E", Word{FD(d, b)} + O + Word{FU(a, c)} + Ev, ga, Word{WD(c, d)} + Ev, "n odd");
                        add("wup-O-fup-E", Word{WU(c, b)} + O + Word{FU(a, d)} + Ev, ga, Word{FU(c, d)} + Ev, "n odd");
                        add("wdo-E-fdo-O", Word{WD(a, c)} + Ev + Word{FD(b, d)} + O, ga, Word{FD(c, d)} + O, "n odd");
                    } else {
                        add("wup-Theta-wup", Word{WU(a, b)} + Th + Word{WU(c, d)}, one,
                            Word{FU(a, c), FD(b, d)} + Om, "n even");
                    }
                    if (n == 1) {
                        add("L35", {FU(c, a), FD(b, d)}, ga, {WU(c, d)}, "n=1");
                        add("L36", {FD(d, b), FU(a, c)}, ga, {WD(c, d)}, "n=1");
                        add("L37", {WU(c, b), FU(a, d)}, ga, {FU(c, d)}, "n=1");
                        add("L38", {WD(a, c), FD(b, d)}, ga, {FD(c, d)}, "n=1");
                        add("fup-wdo-1", {FU(c, a), WD(d, b)}, ga, {FU(c, d)}, "n=1");
                        add("fdo-wup-1", {FD(c, b), WU(a, d)}, ga, {FD(c, d)}, "n=1");
                        add("wup-wup-1", {WU(c, b), WU(a, d)}, ga, {WU(c, d)}, "n=1");
                        add("wdo-wdo-1", {WD(a, d), WD(c, b)}, ga, {WD(c, d)}, "n=1");
                    }
                }
    return {out.begin(), out.end()};
}

struct RelationFailure {
    Relation relation;
    std::string lhs_value, rhs_value;
};

struct RelationReport {
    std::size_t checked = 0;
    std::vector<RelationFailure> failures;
    bool ok() const { return failures.empty(); }
};

inline bool relation_holds(const Relation& r, int n, const LabelSet& X, std::string* lv = nullptr,
                           std::string* rv = nullptr) {
    auto l = phi(r.lhs, n, X);
    auto rhs = phi(r.rhs, n, X).scaled(Polynomial(r.scalar));
    if (lv) *lv = l.str();
    if (rv) *rv = rhs.str();
    return l == rhs;
}

inline RelationReport verify_relations(const std::vector<Relation>& rels, int n, const LabelSet& X) {
    RelationReport rep;
    rep.checked = rels.size();
    std::vector<std::optional<RelationFailure>> slot(rels.size());
    parallel_for(rels.size(), [&](std::size_t k) {
        RelationFailure f{rels[k], {}, {}};
        if (!relation_holds(rels[k], n, X, &f.lhs_value, &f.rhs_value)) slot[k] = std::move(f);
    });
    for (auto& s : slot)
        if (s) rep.failures.push_back(std::move(*s));
    return rep;
}

inline RelationReport verify_relations(int n, const LabelSet& X) {
    return verify_relations(relation_catalogue(n, X), n, X);
}

}  // namespace diagalg
