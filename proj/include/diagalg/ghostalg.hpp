#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "coeff.hpp"
#include "diagram.hpp"
#include "labelalg.hpp"

namespace diagalg {

/// Basis diagram of the ghost algebra. The matching is held as an unlabelled shape;
/// ghost counts are kept mod 2 per boundary domain (t+1 on top, b+1 on bottom).
class GhostDiagram {
public:
    GhostDiagram() = default;

    GhostDiagram(int n, std::vector<int> top_ghosts, std::vector<int> bottom_ghosts, const std::vector<Pair>& pairs,
                 int t, int b)
        : shape_(n, shape_labels(), std::vector<Label>(t, "g"), std::vector<Label>(b, "g"), pairs),
          top_(std::move(top_ghosts)), bottom_(std::move(bottom_ghosts)) {
        for (auto& g : top_) g &= 1;
        for (auto& g : bottom_) g &= 1;
    }

    static GhostDiagram make(int n, std::vector<int> top_ghosts, std::vector<int> bottom_ghosts,
                             const std::vector<Pair>& pairs, int t, int b) {
        GhostDiagram g(n, std::move(top_ghosts), std::move(bottom_ghosts), pairs, t, b);
        if (auto v = g.validate()) throw std::invalid_argument(*v);
        return g;
    }

    static GhostDiagram identity(int n) { return GhostDiagram(n, {0}, {0}, Diagram::identity(n, {"g"}).pairs(), 0, 0); }

    int n() const { return shape_.n(); }
    int t() const { return shape_.t(); }
    int b() const { return shape_.b(); }
    const Diagram& shape() const { return shape_; }
    const std::vector<int>& top_ghosts() const { return top_; }
    const std::vector<int>& bottom_ghosts() const { return bottom_; }

    std::optional<std::string> validate() const {
        if (auto v = shape_.validate()) return v;
        if (static_cast<int>(top_.size()) != t() + 1) return "topGhosts needs t+1 entries";
        if (static_cast<int>(bottom_.size()) != b() + 1) return "bottomGhosts needs b+1 entries";
        int st = t(), sb = b();
        for (int g : top_) st += g;
        for (int g : bottom_) sb += g;
        if (st % 2) return "top boundary has an odd number of endpoints plus ghosts";
        if (sb % 2) return "bottom boundary has an odd number of endpoints plus ghosts";
        return std::nullopt;
    }

    std::string str() const {
        std::string s = "G(n=" + std::to_string(n()) + ";topGhosts=" + bits(top_) + ";bottomGhosts=" + bits(bottom_) +
                        ";pairs=";
        bool first = true;
        for (auto& [a, b] : shape_.pairs()) {
            if (!first) s += ';';
            first = false;
            s += "(" + a.str() + "," + b.str() + ")";
        }
        return s + ")";
    }

    auto key() const { return std::tie(shape_, top_, bottom_); }
    bool operator==(const GhostDiagram& o) const { return key() == o.key(); }
    bool operator<(const GhostDiagram& o) const { return key() < o.key(); }

    static const LabelSet& shape_labels() {
        static const LabelSet X{"g"};
        return X;
    }

private:
    static std::string bits(const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    }

    Diagram shape_;
    std::vector<int> top_, bottom_;
};

namespace detail {

/// Left-to-right numbers of the endpoints on one boundary given its domain ghost bits.
inline std::vector<int> ghost_numbers(const std::vector<int>& ghosts) {
    std::vector<int> num;
    int count = ghosts[0];
    for (std::size_t k = 1; k < ghosts.size(); ++k) {
        num.push_back(++count);
        count += ghosts[k];
    }
    return num;
}

/// One merged boundary as a sequence of items: ghost (-1) or merged endpoint position (1-based).
inline std::vector<int> merged_items(const std::vector<int>& g1, const std::vector<int>& g2) {
    std::vector<int> items;
    int pos = 0;
    auto push = [&](const std::vector<int>& g, bool skip_first) {
        for (std::size_t k = 0; k < g.size(); ++k) {
            if (k) items.push_back(++pos);
            if (!(skip_first && k == 0) && g[k]) items.push_back(-1);
        }
    };
    push(g1, false);
    if (g2[0]) items.push_back(-1);
    push(g2, true);
    return items;
}

struct MergedBoundary {
    std::vector<int> number;  // number[pos-1] for each merged endpoint
    std::vector<int> ghosts;  // domain bits after removing `removed`
};

inline MergedBoundary merge_boundary(const std::vector<int>& g1, const std::vector<int>& g2,
                                     const std::vector<bool>& removed) {
    MergedBoundary m;
    auto items = merged_items(g1, g2);
    int count = 0, domain = 0;
    for (int it : items) {
        ++count;
        if (it < 0) {
            ++domain;
            continue;
        }
        m.number.push_back(count);
        if (removed[it - 1]) {
            ++domain;
        } else {
            m.ghosts.push_back(domain & 1);
            domain = 0;
        }
    }
    m.ghosts.push_back(domain & 1);
    return m;
}

}  // namespace detail

struct GhostConcatResult {
    Monomial coeff;
    GhostDiagram diagram;
};

inline GhostConcatResult ghost_concat(const GhostDiagram& g1, const GhostDiagram& g2) {
    if (g1.n() != g2.n()) throw SizeMismatch(g1.n(), g2.n());
    auto c = concat(g1.shape(), g2.shape());
    int mt = g1.t() + g2.t(), mb = g1.b() + g2.b();
    std::vector<bool> rtop(mt, false), rbot(mb, false);
    for (auto& a : c.trace.arcs) {
        if (a.kind == ArcKind::TopTop) rtop[a.first_pos - 1] = rtop[a.second_pos - 1] = true;
        if (a.kind == ArcKind::BottomBottom) rbot[a.first_pos - 1] = rbot[a.second_pos - 1] = true;
        if (a.kind == ArcKind::TopBottom) rtop[a.first_pos - 1] = rbot[a.second_pos - 1] = true;
    }
    auto top = detail::merge_boundary(g1.top_ghosts(), g2.top_ghosts(), rtop);
    auto bot = detail::merge_boundary(g1.bottom_ghosts(), g2.bottom_ghosts(), rbot);

    GhostConcatResult r;
    for (int l = 0; l < c.trace.loops; ++l) r.coeff *= ParamId::beta();
    auto three = [](int x, int y) { return x % 2 == y % 2 ? 3 : (x % 2 ? 1 : 2); };
    for (auto& a : c.trace.arcs) {
        switch (a.kind) {
        case ArcKind::TopTop:
            r.coeff *= ParamId::ghost_alpha(three(top.number[a.first_pos - 1], top.number[a.second_pos - 1]));
            break;
        case ArcKind::BottomBottom:
            r.coeff *= ParamId::ghost_delta(three(bot.number[a.first_pos - 1], bot.number[a.second_pos - 1]));
            break;
        case ArcKind::TopBottom:
            r.coeff *= top.number[a.first_pos - 1] % 2 == bot.number[a.second_pos - 1] % 2
                           ? ParamId::ghost_gamma3()
                           : ParamId::ghost_gamma12();
            break;
        }
    }
    r.diagram = GhostDiagram(g1.n(), top.ghosts, bot.ghosts, c.diagram.pairs(), c.diagram.t(), c.diagram.b());
    return r;
}

inline const LabelSet& binary_labels() {
    static const LabelSet X{"0", "1"};
    return X;
}

/// Odd-numbered endpoints get label 1, even-numbered endpoints label 0.
inline Diagram to_label(const GhostDiagram& g) {
    std::vector<Label> top, bot;
    for (int k : detail::ghost_numbers(g.top_ghosts())) top.push_back(k % 2 ? "1" : "0");
    for (int k : detail::ghost_numbers(g.bottom_ghosts())) bot.push_back(k % 2 ? "1" : "0");
    return Diagram(g.n(), binary_labels(), top, bot, g.shape().pairs());
}

inline GhostDiagram from_label(const Diagram& d) {
    if (d.X() != binary_labels()) throw LabelSetMismatch();
    auto side = [](const std::vector<Label>& labels) {
        std::vector<int> ghosts;
        int count = 0;
        for (auto& l : labels) {
            int want = l == "1" ? 1 : 0;
            int g = (count + 1) % 2 != want;
            ghosts.push_back(g);
            count += g + 1;
        }
        ghosts.push_back(count % 2);
        return ghosts;
    };
    std::vector<Pair> ps;
    for (auto& p : d.pairs()) ps.push_back(p);
    return GhostDiagram(d.n(), side(d.top_labels()), side(d.bottom_labels()), ps, d.t(), d.b());
}

/// Identification of label-algebra parameters over X = {0,1} with ghost parameters.
inline ParamMap ghost_param_map() {
    ParamMap m;
    m[ParamId::beta()] = Monomial(ParamId::beta());
    auto three = [](const Label& a, const Label& b) { return a == b ? 3 : (a == "1" ? 1 : 2); };
    for (const Label& a : binary_labels())
        for (const Label& b : binary_labels()) {
            m[ParamId::alpha(a, b)] = Monomial(ParamId::ghost_alpha(three(a, b)));
            m[ParamId::delta(a, b)] = Monomial(ParamId::ghost_delta(three(a, b)));
            m[ParamId::gamma(a, b)] = Monomial(a == b ? ParamId::ghost_gamma3() : ParamId::ghost_gamma12());
        }
    return m;
}

/// Whether multiplying in the ghost algebra agrees with multiplying the binary-labelled
/// images and translating the parameters back.
inline bool ghost_dual_path_holds(const GhostDiagram& g1, const GhostDiagram& g2) {
    auto direct = ghost_concat(g1, g2);
    auto via = concat(to_label(g1), to_label(g2));
    return direct.coeff == specialize(via.coeff, ghost_param_map()) && to_label(direct.diagram) == via.diagram;
}

inline std::vector<GhostDiagram> enumerate_ghost(int n) {
    std::vector<GhostDiagram> out;
    for_each_diagram(n, binary_labels(), [&](const Diagram& d) { out.push_back(from_label(d)); });
    return out;
}

}  // namespace diagalg
