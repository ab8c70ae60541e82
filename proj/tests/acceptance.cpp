// One PASS/FAIL line per acceptance criterion.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "examples.hpp"
#include "oracles.hpp"

using namespace diagalg;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    void fail(const std::string& why) {
        if (ok) detail << why;
        ok = false;
    }
};

bool c1(Outcome& o) {
    for (int n = 1; n <= 4; ++n)
        for (int x = 1; x <= 3; ++x) {
            std::uint64_t count = 0;
            for_each_diagram(n, oracle::labels(x), [&](const Diagram&) { ++count; });
            auto ref = oracle::count_diagrams(n, x);
            if (dimension(n, x) != BigInt(count) || count != ref)
                o.fail("n=" + std::to_string(n) + " |X|=" + std::to_string(x) + ": dim " + dimension(n, x).str() +
                       " enum " + std::to_string(count) + " oracle " + std::to_string(ref));
        }
    if (dimension(1, 1) != 5 || dimension(1, 2) != 17 || dimension(2, 1) != 21) o.fail("spot values");
    o.detail << "12 (n,|X|) cells";
    return o.ok;
}

bool c2(Outcome& o) {
    auto expect = [&](const std::string& what, const std::string& got, const std::string& want) {
        if (got != want) o.fail(what + ": got " + got + " want " + want);
    };
    auto [a, b] = examples::label_first();
    auto r1 = concat(a, b);
    expect("label 1", r1.coeff.str(), examples::label_first_coeff);
    expect("label 1 diagram", r1.diagram.str(), examples::label_first_result);
    auto [c, d] = examples::label_second();
    auto r2 = concat(c, d);
    expect("label 2", r2.coeff.str(), examples::label_second_coeff);
    expect("label 2 diagram", r2.diagram.str(), examples::label_second_result);
    auto [g, h] = examples::ghost_first();
    expect("ghost 1", ghost_concat(g, h).coeff.str(), examples::ghost_first_coeff);
    auto [g2, h2] = examples::ghost_second();
    expect("ghost 2", ghost_concat(g2, h2).coeff.str(), examples::ghost_second_coeff);
    auto [s, t] = examples::blob_six();
    auto p = sb_multiply(s, t);
    expect("S_6", p.coeff.str(), examples::blob_six_coeff);
    expect("S_6 diagram", p.diagram.str(), examples::blob_six_result);
    auto [u, v] = examples::blob_two();
    expect("S_2", sb_multiply(u, v).coeff.str(), examples::blob_two_coeff);
    o.detail << "7 products";
    return o.ok;
}

bool c3(Outcome& o) {
    std::mt19937_64 rng(2024);
    int triples = 0;
    auto label_run = [&](int n, int count) {
        auto all = enumerate_all(n, oracle::labels(2));
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int k = 0; k < count; ++k) {
            auto &a = all[pick(rng)], &b = all[pick(rng)], &c = all[pick(rng)];
            auto ab = oracle::trace_concat(a, b), bc = oracle::trace_concat(b, c);
            auto l = concat(ab.diagram, c), r = concat(a, bc.diagram);
            if (!(l.diagram == r.diagram) || ab.coeff * l.coeff != bc.coeff * r.coeff)
                o.fail("label " + a.str() + " " + b.str() + " " + c.str());
            ++triples;
        }
    };
    auto ghost_run = [&](int n, int count) {
        auto all = enumerate_ghost(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int k = 0; k < count; ++k) {
            auto &a = all[pick(rng)], &b = all[pick(rng)], &c = all[pick(rng)];
            auto ab = ghost_concat(a, b), bc = ghost_concat(b, c);
            auto l = ghost_concat(ab.diagram, c), r = ghost_concat(a, bc.diagram);
            if (!(l.diagram == r.diagram) || ab.coeff * l.coeff != bc.coeff * r.coeff)
                o.fail("ghost " + a.str() + " " + b.str() + " " + c.str());
            ++triples;
        }
    };
    auto sb_run = [&](int n, int count) {
        for (int k = 0; k < count; ++k) {
            auto a = sb_evaluate(oracle::random_sb_word(rng, n, 8), n).diagram;
            auto b = sb_evaluate(oracle::random_sb_word(rng, n, 8), n).diagram;
            auto c = sb_evaluate(oracle::random_sb_word(rng, n, 8), n).diagram;
            auto ab = sb_multiply(a, b), bc = sb_multiply(b, c);
            auto l = sb_multiply(ab.diagram, c), r = sb_multiply(a, bc.diagram);
            if (!(l.diagram == r.diagram) || ab.coeff * l.coeff != bc.coeff * r.coeff)
                o.fail("sb " + a.str() + " " + b.str() + " " + c.str());
            ++triples;
        }
    };
    for (int n = 1; n <= 3; ++n) {
        label_run(n, 500);
        ghost_run(n, 500);
        sb_run(n, 500);
    }
    // Fixed n = 4 corpus: the rng state above is deterministic.
    label_run(4, 200);
    ghost_run(4, 200);
    sb_run(4, 200);
    o.detail << triples << " triples";
    return o.ok;
}

bool c4(Outcome& o) {
    std::size_t checked = 0;
    std::set<std::string> ids;
    for (int n = 1; n <= 4; ++n) {
        auto rels = relation_catalogue(n, oracle::labels(2));
        for (auto& r : rels) ids.insert(r.id);
        auto rep = verify_relations(rels, n, oracle::labels(2));
        checked += rep.checked;
        for (auto& f : rep.failures) o.fail("n=" + std::to_string(n) + " " + f.relation.str());
    }
    for (int k = 1; k <= 38; ++k)
        if (!ids.count("L" + std::to_string(k))) o.fail("L" + std::to_string(k) + " never instantiated");
    int sb = 0;
    for (int n = 2; n <= 5; ++n) {
        auto rep = sb_verify_relations(n);
        sb += rep.checked;
        for (auto& f : rep.failures) o.fail("n=" + std::to_string(n) + " " + f);
    }
    o.detail << checked << " label instances, " << sb << " S instances";
    return o.ok;
}

bool c5(Outcome& o) {
    std::mt19937_64 rng(77);
    int pairs = 0;
    for (int n = 1; n <= 4; ++n) {
        auto all = enumerate_ghost(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int k = 0; k < 250; ++k, ++pairs) {
            auto &a = all[pick(rng)], &b = all[pick(rng)];
            if (!ghost_dual_path_holds(a, b)) o.fail(a.str() + " * " + b.str());
        }
    }
    o.detail << pairs << " pairs";
    return o.ok;
}

bool c6(Outcome& o) {
    int diagrams = 0;
    for (int n = 1; n <= 3; ++n)
        for (int x = 1; x <= 2; ++x) {
            auto X = oracle::labels(x);
            for (auto& d : enumerate_all(n, X)) {
                ++diagrams;
                auto w = decompose(d);
                auto r = oracle::Product{Monomial{}, Diagram::identity(n, X)};
                for (auto& g : w) {
                    auto c = oracle::trace_concat(r.diagram, generator_diagram(g, n, X));
                    r.coeff *= c.coeff;
                    r.diagram = c.diagram;
                }
                if (!r.coeff.is_one() || !(r.diagram == d) || 2 * count_label_generators(w) != d.boundary_link_count())
                    o.fail(d.str() + " -> " + word_str(w));
            }
        }
    o.detail << diagrams << " diagrams";
    return o.ok;
}

struct WTRun {
    int n;
    LabelSet X;
    WTForm form;
};

bool c7(Outcome& o, std::vector<WTRun>& runs) {
    std::mt19937_64 rng(4242);
    std::map<std::pair<int, Diagram>, std::string> seen;
    int words = 0, steps = 0;
    for (int n = 1; n <= 3; ++n)
        for (int x = 1; x <= 2; ++x) {
            auto X = oracle::labels(x);
            for (int k = 0; k < 250; ++k, ++words) {
                Word w = oracle::random_word(rng, n, X, 10);
                std::string tag = "n=" + std::to_string(n) + " " + word_str(w) + ": ";
                try {
                    auto f = to_wt_form(w, n, X);
                    for (auto& s : f.steps) {
                        ++steps;
                        auto l = phi_eval(s.before, n, X), r = phi_eval(s.after, n, X);
                        if (!(l.diagram == r.diagram) || l.coeff != s.scalar * r.coeff) o.fail(tag + "step " + s.rule);
                    }
                    auto in = phi_eval(w, n, X), out = phi_eval(f.word(n), n, X);
                    if (!(in.diagram == out.diagram) || in.coeff != f.scalar) o.fail(tag + "phi changed");
                    if (!out.coeff.is_one() || !out.clean()) o.fail(tag + "coefficient " + out.coeff.str());
                    if (out.diagram.is_even() != !f.W) o.fail(tag + "parity");
                    auto [it, fresh] = seen.emplace(std::pair{n, out.diagram}, f.str().substr(f.str().find('|')));
                    if (!fresh && it->second != f.str().substr(f.str().find('|'))) o.fail(tag + "not unique");
                    runs.push_back({n, X, f});
                } catch (const std::exception& e) {
                    o.fail(tag + e.what());
                }
            }
        }
    o.detail << words << " words, " << steps << " steps";
    return o.ok;
}

bool c8(Outcome& o, const std::vector<WTRun>& runs) {
    int diagrams = 0;
    for (int n = 1; n <= 3; ++n)
        for (int x = 1; x <= 2; ++x) {
            auto X = oracle::labels(x);
            auto ref = oracle::descent_oracle(n, X, 6);
            auto lib = even_reduced_oracle(n, X, 6);
            for (auto& [d, e] : ref) {
                if (!d.is_even()) continue;
                ++diagrams;
                auto it = lib.find(d);
                if (!e.clean || it == lib.end() || it->second.witnesses.empty()) {
                    o.fail("no coefficient-1 witness for " + d.str());
                    continue;
                }
                if (it->second.min_len != e.min_len || it->second.leads != e.leads) o.fail("oracles differ at " + d.str());
                for (auto& w : it->second.witnesses)
                    if (left_descent_set(w, n, X) != e.leads) o.fail("descent set of " + word_str(w));
            }
        }
    int exclusions = 0;
    for (auto& r : runs) {
        if (!r.form.W) continue;
        ++exclusions;
        int j = r.form.W->j;
        for (auto& g : left_descent_set(r.form.T, r.n, r.X)) {
            bool bad = (g.kind == GenKind::E && g.i < j) || (g.kind == GenKind::FUp && j >= 1) ||
                       (g.kind == GenKind::FDown && j <= r.n - 1);
            if (bad) o.fail(r.form.str() + " has descent " + g.str());
        }
    }
    o.detail << diagrams << " diagrams, " << exclusions << " WT outputs";
    return o.ok;
}

bool c9(Outcome& o) {
    auto X = oracle::labels(2);
    std::vector<Relation> mutated;
    for (auto r : relation_catalogue(3, X))
        if (r.id == "L19") {
            r.scalar = Monomial(ParamId::beta(), 2);
            mutated.push_back(r);
        }
    auto rep = verify_relations(mutated, 3, X);
    if (mutated.empty() || rep.failures.size() != mutated.size()) o.fail("mutated L19 was accepted");
    auto [u, v] = examples::blob_two();
    SbOptions odd;
    odd.force_odd_rules = true;
    auto wrong = sb_multiply(u, v, odd).coeff, right = sb_multiply(u, v).coeff;
    if (wrong.str() != examples::blob_two_odd_rule_coeff || wrong == right)
        o.fail("odd rule at n=2 gave " + wrong.str() + ", correct " + right.str());
    o.detail << "L19 with b^2 rejected; odd rule gives " << wrong.str() << " vs " << right.str();
    return o.ok;
}

}  // namespace

int main() {
    std::vector<WTRun> runs;
    std::vector<std::pair<std::string, std::function<bool(Outcome&)>>> criteria = {
        {"dimension vs enumeration", c1},
        {"worked products", c2},
        {"associativity", c3},
        {"relation verification", c4},
        {"ghost-label isomorphism", c5},
        {"decomposition round trip", c6},
        {"WT form", [&](Outcome& o) { return c7(o, runs); }},
        {"descent sets", [&](Outcome& o) { return c8(o, runs); }},
        {"negative controls", c9},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            criteria[k].second(o);
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failed += !o.ok;
        std::cout << "criterion " << k + 1 << " (" << criteria[k].first << "): " << (o.ok ? "PASS" : "FAIL") << " - "
                  << o.detail.str() << std::endl;
    }
    return failed ? 1 : 0;
}
