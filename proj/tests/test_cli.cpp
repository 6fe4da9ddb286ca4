#include <catch_amalgamated.hpp>

#include <cstdio>
#include <sstream>

#include "hopfsimp/cli.hpp"

using namespace hopfsimp;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kPaw = std::string(HOPFSIMP_DATA) + "/paw.json";

}  // namespace

TEST_CASE("antipode of the paw file") {
    const Result r = run({"antipode", "--file", kPaw});
    REQUIRE(r.code == 0);
    std::multiset<std::string> coeffs;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) {
        coeffs.insert(line.substr(0, line.find('\t')));
    }
    CHECK(coeffs == std::multiset<std::string>{"12", "-18", "2", "4", "2", "-1"});
}

TEST_CASE("antipode table has ten rows") {
    const Result r = run({"antipode-table", "--file", kPaw});
    REQUIRE(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 10);
    const Result j = run({"--json", "antipode-table", "--file", kPaw});
    CHECK(json::parse(j.out).size() == 10);
}

TEST_CASE("fvector text and json") {
    CHECK(run({"fvector", "--file", kPaw}).out == "4 4 1\n");
    CHECK(run({"fvector", "--via-psi", "--file", kPaw}).out == "4 4 1\n");
    CHECK(run({"fvector", "--json", "--file", kPaw}).out == "[\"4\",\"4\",\"1\"]\n");
}

TEST_CASE("json and text outputs carry the same data") {
    const Result text = run({"antipode", "--file", kPaw});
    const Result js = run({"antipode", "--file", kPaw, "--json"});
    CHECK(to_text(lincomb_from_json(json::parse(js.out))) == text.out);
    CHECK(lincomb_from_text(text.out) == lincomb_from_json(json::parse(js.out)));

    const Result psi_text = run({"psi", "--s", "2", "--q", "--complex", "n=4; {0,1,2},{2,3}"});
    const Result psi_json = run({"psi", "--s", "2", "--q", "--json", "--complex", "n=4; {0,1,2},{2,3}"});
    CHECK(sympoly_from_json(json::parse(psi_json.out)).to_string() + "\n" == psi_text.out);

    const Result sk_text = run({"skeleton", "--k", "1", "--file", kPaw});
    const Result sk_json = run({"skeleton", "--k", "1", "--file", kPaw, "--json"});
    CHECK(to_text(complex_from_json(json::parse(sk_json.out))) + "\n" == sk_text.out);
    CHECK(sk_text.out == "n=4; {0,1},{0,2},{1,2},{2,3}\n");
}

TEST_CASE("other verbs") {
    CHECK(run({"psi", "--s", "2", "--complex", "n=4; {0,1,2,3}"}).out == "6*m[2,2] + 12*m[2,1,1] + 24*m[1,1,1,1]\n");
    CHECK(run({"chromatic", "--s", "1", "--complex", "n=3; {0,1},{0,2},{1,2}"}).out == "t^3 - 3*t^2 + 2*t\n");
    CHECK(run({"chromatic", "--s", "1", "--at", "-1", "--file", kPaw}).out == "12\n");
    CHECK(run({"euler", "--s", "1", "--complex", "n=2; {0,1}"}).out == "euler_character -2\neulerian false\n");
    CHECK(run({"subalgebra", "--s", "1", "--complex", "n=3;"}).out == "even false\nodd true\neulerian true\n");
    CHECK(run({"coproduct", "--complex", "n=1; {0}"}).out ==
          "1\tn=0; {}\t(x)\tn=1; {0}\n1\tn=1; {0}\t(x)\tn=0; {}\n");
    const Result e = run({"enumerate", "--n", "3"});
    CHECK(e.code == 0);
    CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 5);
}

TEST_CASE("verify suites report equality") {
    for (const std::string suite : {"kn", "star", "kostka", "trace", "tree"}) {
        const Result r = run({"verify", suite, "--max-n", "3"});
        CHECK(r.code == 0);
        CHECK(r.out.find("NOT EQUAL") == std::string::npos);
    }
    const Result j = run({"--json", "verify", "hopf", "--max-n", "3"});
    REQUIRE(j.code == 0);
    for (const auto& rep : json::parse(j.out)) {
        CHECK(rep.at("equal").get<bool>());
        CHECK(rep.contains("identity"));
        CHECK(rep.contains("lhs"));
        CHECK(rep.contains("rhs"));
        CHECK(rep.contains("parameters"));
    }
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"psi", "--complex", "n=1;"}).code == 1);
    CHECK(run({"verify", "nonsense"}).code == 1);
    CHECK(run({"antipode"}).code == 2);
    CHECK(run({"antipode", "--complex", "n=2; {0,7}"}).code == 2);
    CHECK(run({"antipode", "--file", "/nonexistent.json"}).code == 2);
    CHECK(run({"enumerate", "--n", "6"}).code == 3);
    CHECK(run({"verify", "hopf", "--max-n", "6"}).code == 3);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic across runs and thread counts") {
    const Result a = run({"antipode", "--complex", "n=5; {0,1,2},{1,3},{2,3},{3,4}"});
    const Result b = run({"antipode", "--complex", "n=5; {0,1,2},{1,3},{2,3},{3,4}"});
    const Result c = run({"--threads", "4", "antipode", "--complex", "n=5; {0,1,2},{1,3},{2,3},{3,4}"});
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("installed binary runs end to end") {
    const std::string cmd = std::string(HOPFSIMP_BIN) + " fvector --file " + kPaw;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[256];
    while (std::fgets(buf, sizeof buf, pipe) != nullptr) {
        out += buf;
    }
    const int status = pclose(pipe);
    CHECK(status == 0);
    CHECK(out == "4 4 1\n");
}
