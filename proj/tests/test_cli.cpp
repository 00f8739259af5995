#include "polyred/cli.hpp"
#include "polyred/serialize.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace polyred;

namespace {

struct Run {
    int code;
    std::string out, err;
    json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(POLYRED_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = std::string(POLYRED_TEST_TMP) + "/" + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("validate the standard k = 2, n = 1 model") {
    Run r = run({"validate", data("standard_k2n1.json")});
    CHECK(r.code == 0);
    CHECK(r.report()["structure"]["kind"] == "Polycosymplectic");
}

TEST_CASE("built-in examples pass their audits") {
    for (const char* name : {"r6-cross", "r4-pullback", "stable-r3", "electrostatic-k2"}) {
        Run r = run({"example", name});
        CHECK_MESSAGE(r.code == 0, name);
        CHECK(r.report()["bundle"]["passed"] == true);
    }
    CHECK(run({"example", "nope"}).code == 2);
}

TEST_CASE("A2 violation exits 1 with both sides") {
    Run r = run({"check", "--condition", "A2", "--input", data("bad_action.json")});
    CHECK(r.code == 1);
    json rep = r.report()["report"];
    CHECK(rep["holds"] == false);
    CHECK(rep.contains("lhs"));
    CHECK(rep.contains("rhs"));
    CHECK(rep["lhs"] != rep["rhs"]);
}

TEST_CASE("input errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"validate"}).code == 2);
    CHECK(run({"validate", data("standard_k2n1.json"), "--bogus"}).code == 2);
    CHECK(run({"validate", "/nonexistent/file.json"}).code == 2);
    CHECK(run({"validate", temp_file("broken.json", "{\"dim\": 2, ")}).code == 2);
    CHECK(run({"validate", temp_file("skew.json", R"({"dim":2,"omega":[[["0","1"],["1","0"]]]})")}).code == 2);
    CHECK(run({"check", "--condition", "A7", "--input", data("bad_action.json")}).code == 2);
    CHECK(run({"campaign", "--property", "A2_IMPLIES_NONDEG", "--trials", "0"}).code == 2);
    CHECK(run({"campaign", "--property", "PRESYM_DOUBLE_ORTHO", "--dim-max", "50"}).code == 2);
    CHECK(run({"orthogonal", "--structure", data("standard_k2n2_sym.json"), "--subspace",
               data("subspace_q1_p11.json"), "--indices", "3"})
              .code == 2);
    CHECK(run({"dynamics", "residual", "--model", "k=2", "--hamiltonian", data("electrostatic_h.json")}).code == 2);
}

TEST_CASE("orthogonal with 1-based indices") {
    Run r = run({"orthogonal", "--structure", data("standard_k2n2_sym.json"), "--subspace", data("subspace_q1_p11.json"),
                 "--indices", "1"});
    CHECK(r.code == 0);
    CHECK(r.report()["orthogonal"]["dim"] == 4);
}

TEST_CASE("reduce and lift subcommands") {
    Run r = run({"reduce", data("translation_action.json")});
    CHECK(r.code == 0);
    CHECK(r.report()["reduction"]["reduced"]["dim"] == 3);
    std::string out = std::string(POLYRED_TEST_TMP) + "/lifted.json";
    Run l = run({"lift", data("standard_k2n1.json"), "-o", out});
    CHECK(l.code == 0);
    CHECK(l.report()["lifted_kind"]["kind"] == "Polysymplectic");
    Run v = run({"validate", out});
    CHECK(v.code == 0);
    CHECK(v.report()["structure"]["kind"] == "Polysymplectic");
}

TEST_CASE("dynamics residual for both Hamiltonian signs") {
    Run good = run({"dynamics", "residual", "--model", "k=2,n=1", "--hamiltonian", data("electrostatic_h.json"),
                    "--section", data("electrostatic_section.json")});
    CHECK(good.code == 0);
    Run bad = run({"dynamics", "residual", "--model", "k=2,n=1", "--hamiltonian", data("electrostatic_h_printed.json"),
                   "--section", data("electrostatic_section.json")});
    CHECK(bad.code == 1);
    Run lift = run({"dynamics", "lift", "--model", "k=2,n=1", "--hamiltonian", data("electrostatic_h.json"), "--kvector",
                    data("electrostatic_kvector.json")});
    CHECK(lift.code == 0);
    CHECK(lift.report()["h_tilde"] == "-t1*t2*q1 + 1/2*p1_1^2 + 1/2*p2_1^2 - 2*s");
}

TEST_CASE("campaign failures replay through the same subcommand") {
    Run r = run({"campaign", "--property", "A2_IMPLIES_NONDEG", "--trials", "200", "--seed", "3", "--dim-max", "12"});
    CHECK(r.code == 1);
    json rep = r.report()["campaign"];
    REQUIRE(!rep["failures"].empty());
    json first = rep["failures"][0];
    std::vector<std::string> args = {"campaign", "--property", "A2_IMPLIES_NONDEG", "--dim-max", "12",
                                     "--replay-seed", std::to_string(first["seed"].get<std::uint64_t>())};
    if (first["adversarial"].get<bool>()) args.push_back("--adversarial");
    Run again = run(args);
    CHECK(again.code == 1);
    CHECK(again.report()["replay"]["instance"] == first["instance"]);

    // the embedded instance fails the nondegeneracy check on its own
    std::string path = temp_file("failure.json", first["instance"].dump());
    CHECK(run({"check", "--condition", "A2", "--input", path}).code == 0);
    CHECK(run({"check", "--condition", "NONDEG_POLYSYM", "--input", path}).code == 1);
}

TEST_CASE("human rendering") {
    Run r = run({"validate", data("standard_k2n1.json"), "--human"});
    CHECK(r.code == 0);
    CHECK(r.out.find("kind: Polycosymplectic") != std::string::npos);
}
