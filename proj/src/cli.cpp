#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "diagalg/diagalg.hpp"

namespace diagalg::cli {

namespace {

struct SuiteResult {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> failures;
};

SuiteResult label_suite(int n, const LabelSet& X) {
    SuiteResult r{"label", 0, {}};
    auto rep = verify_relations(n, X);
    r.checked = rep.checked;
    for (auto& f : rep.failures) r.failures.push_back(f.relation.str() + " | " + f.lhs_value + " | " + f.rhs_value);
    return r;
}

SuiteResult ghost_suite(int n) {
    SuiteResult r{"ghost-iso", 0, {}};
    auto all = enumerate_ghost(n);
    for (auto& g : all) {
        ++r.checked;
        if (!(from_label(to_label(g)) == g)) r.failures.push_back("round trip " + g.str());
    }
    const std::size_t m = all.size(), limit = 20000;
    std::mt19937_64 rng(n);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (m * m <= limit) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) pairs.push_back({i, j});
    } else {
        std::uniform_int_distribution<std::size_t> pick(0, m - 1);
        for (std::size_t k = 0; k < limit; ++k) pairs.push_back({pick(rng), pick(rng)});
    }
    std::vector<char> ok(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t k) {
        ok[k] = ghost_dual_path_holds(all[pairs[k].first], all[pairs[k].second]);
    });
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        ++r.checked;
        if (!ok[k]) r.failures.push_back("dual path " + all[pairs[k].first].str() + " * " + all[pairs[k].second].str());
    }
    return r;
}

SuiteResult sb_suite(int n) {
    SuiteResult r{"sb", 0, {}};
    auto rep = sb_verify_relations(n);
    r.checked = static_cast<std::size_t>(rep.checked);
    r.failures = rep.failures;
    return r;
}

SuiteResult decompose_suite(int n, const LabelSet& X) {
    SuiteResult r{"decompose", 0, {}};
    auto all = enumerate_all(n, X);
    std::vector<std::string> msg(all.size());
    parallel_for(all.size(), [&](std::size_t k) {
        try {
            auto p = phi_eval(decompose(all[k]), n, X);
            if (!p.coeff.is_one() || !p.clean() || !(p.diagram == all[k])) msg[k] = "round trip " + all[k].str();
        } catch (const std::exception& e) {
            msg[k] = all[k].str() + ": " + e.what();
        }
    });
    r.checked = all.size();
    for (auto& m : msg)
        if (!m.empty()) r.failures.push_back(m);
    return r;
}

std::string product_line(const Monomial& c, const std::string& d) { return c.str() + " * " + d; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Label, ghost and symplectic blob diagram algebras"};
    app.require_subcommand(1);

    std::string a, b, algebra = "label", word, xs, suite = "all", format = "ascii";
    int n = 1, xsize = 1;
    bool trace = false;

    auto* mul = app.add_subcommand("mul", "multiply two diagrams");
    mul->add_option("a", a)->required();
    mul->add_option("b", b)->required();
    mul->add_option("--algebra", algebra)->check(CLI::IsMember({"label", "ghost", "sb"}));

    auto* dim = app.add_subcommand("dim", "dimension of L_n(X) for |X| = xsize");
    dim->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
    dim->add_option("xsize", xsize)->required()->check(CLI::NonNegativeNumber);

    auto* en = app.add_subcommand("enum", "list all basis diagrams");
    en->add_option("n", n)->required()->check(CLI::PositiveNumber);
    en->add_option("X", xs)->required();

    auto* ph = app.add_subcommand("phi", "evaluate a word");
    ph->add_option("word", word)->required();
    ph->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    ph->add_option("--X", xs)->required();

    auto* wt = app.add_subcommand("wt", "WT form of a word");
    wt->add_option("word", word)->required();
    wt->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    wt->add_option("--X", xs)->required();
    wt->add_flag("--trace", trace, "print every rewrite step");

    auto* de = app.add_subcommand("decompose", "word for a diagram");
    de->add_option("diagram", a)->required();

    auto* ve = app.add_subcommand("verify", "run relation and oracle suites");
    ve->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    ve->add_option("--X", xs)->required();
    ve->add_option("--suite", suite)->check(CLI::IsMember({"label", "ghost-iso", "sb", "all"}));

    auto* re = app.add_subcommand("render", "draw a diagram");
    re->add_option("diagram", a)->required();
    re->add_option("--format", format)->check(CLI::IsMember({"tikz", "ascii"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*mul) {
            if (algebra == "label") {
                auto c = concat(parse_diagram(a), parse_diagram(b));
                out << product_line(c.coeff, c.diagram.str()) << "\n";
            } else if (algebra == "ghost") {
                auto c = ghost_concat(parse_ghost(a), parse_ghost(b));
                out << product_line(c.coeff, c.diagram.str()) << "\n";
            } else {
                auto c = sb_multiply(parse_blob(a), parse_blob(b));
                out << product_line(c.coeff, c.diagram.str()) << "\n";
            }
        } else if (*dim) {
            out << dimension(n, xsize).str() << "\n";
        } else if (*en) {
            for_each_diagram(n, parse_label_set(xs), [&](const Diagram& d) { out << d.str() << "\n"; });
        } else if (*ph) {
            out << phi(parse_word(word), n, parse_label_set(xs)).str() << "\n";
        } else if (*wt) {
            auto f = to_wt_form(parse_word(word), n, parse_label_set(xs));
            out << f.str() << "\n";
            if (trace)
                for (auto& s : f.steps)
                    out << "  " << s.rule << ": " << word_str(s.before) << " = " << s.scalar.str() << " * "
                        << word_str(s.after) << "\n";
        } else if (*de) {
            out << word_str(decompose(parse_diagram(a))) << "\n";
        } else if (*ve) {
            LabelSet X = parse_label_set(xs);
            std::vector<SuiteResult> rs;
            if (suite == "label" || suite == "all") rs.push_back(label_suite(n, X));
            if (suite == "ghost-iso" || suite == "all") rs.push_back(ghost_suite(n));
            if (suite == "sb" || suite == "all") rs.push_back(sb_suite(n));
            if (suite == "all") rs.push_back(decompose_suite(n, X));
            bool ok = true;
            for (auto& r : rs) {
                out << r.name << ": " << (r.failures.empty() ? "PASS" : "FAIL") << " (" << r.checked << " checks, "
                    << r.failures.size() << " failures)\n";
                for (auto& f : r.failures) out << "  " << f << "\n";
                ok = ok && r.failures.empty();
            }
            return ok ? 0 : 1;
        } else if (*re) {
            out << render(parse_diagram(a), format == "tikz" ? RenderFormat::Tikz : RenderFormat::Ascii);
        }
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace diagalg::cli
