#include <catch_amalgamated.hpp>

#include <sstream>

#include "cli.hpp"
#include "examples.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "diagalg");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = diagalg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dim and enum") {
    CHECK(run({"dim", "2", "1"}).out == "21\n");
    auto e = run({"enum", "1", "a"});
    CHECK(e.code == 0);
    CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 5);
}

TEST_CASE("mul in each algebra") {
    auto [a, b] = examples::label_first();
    auto r = run({"mul", a.str(), b.str()});
    CHECK(r.out == std::string(examples::label_first_coeff) + " * " + examples::label_first_result + "\n");
    auto [g, h] = examples::ghost_first();
    CHECK(run({"mul", "--algebra", "ghost", g.str(), h.str()}).out.rfind(examples::ghost_first_coeff, 0) == 0);
    auto [s, t] = examples::blob_six();
    CHECK(run({"mul", "--algebra", "sb", s.str(), t.str()}).out ==
          std::string(examples::blob_six_coeff) + " * " + examples::blob_six_result + "\n");
}

TEST_CASE("phi, wt and decompose") {
    CHECK(run({"phi", "E1.E1", "--n", "2", "--X", "a"}).out ==
          "b * D(n=2;X=a;top=;bottom=;pairs=(L1,L2);(R2,R1))\n");
    CHECK(run({"wt", "FDN[c,d].E2.E1.WUP[a,b]", "--n", "3", "--X", "a,b,c,d"}).out.rfind(
              "1 | W(a,c,3) | FDN[d,b]\n", 0) == 0);
    auto t = run({"wt", "E1.E1", "--n", "2", "--X", "a", "--trace"});
    CHECK(t.out.find("  ") != std::string::npos);
    CHECK(run({"decompose", "D(n=1;X=a;top=a;bottom=a;pairs=(L1,T1);(B1,R1))"}).out == "WUP[a,a]\n");
}

TEST_CASE("verify suites") {
    auto v = run({"verify", "--n", "2", "--X", "0,1", "--suite", "all"});
    CHECK(v.code == 0);
    CHECK(v.out.find("label: PASS") != std::string::npos);
    CHECK(v.out.find("ghost-iso: PASS") != std::string::npos);
    CHECK(v.out.find("sb: PASS") != std::string::npos);
    CHECK(v.out.find("decompose: PASS") != std::string::npos);
}

TEST_CASE("render") {
    auto r = run({"render", "D(n=1;X=a;top=;bottom=;pairs=(L1,R1))", "--format", "tikz"});
    CHECK(r.code == 0);
    CHECK(r.out.find("tikzpicture") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"decompose", "D(n=2;X=a;top=;bottom=;pairs=(L1,Q2))"}).code == 2);
    CHECK(run({"nosuch"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"phi", "E5", "--n", "2", "--X", "a"}).code == 2);
    CHECK(run({"mul", "--algebra", "sb", "S(n=1;pairs=(L1,R1);dec=)", "S(n=2;pairs=(L1,R1);(L2,R2);dec=)"}).code ==
          2);
}
