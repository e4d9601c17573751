#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "braid3/corpus.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exitCode = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(BRAID3_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exitCode = WEXITSTATUS(status);
    return r;
}

}  // namespace

TEST_CASE("cli: normalize, plain and json") {
    RunResult r = run("normalize \"s1^-1 s2 s1^-1 s2\"");
    CHECK(r.exitCode == 0);
    CHECK(r.out == "d^-2 | a1^2 a2^2\n");

    r = run("--json normalize \"s1^-1 s2 s1^-1 s2\"");
    CHECK(r.exitCode == 0);
    json rec = json::parse(r.out);
    CHECK(rec["v"] == 1);
    CHECK(rec["normalForm"] == "d^-2 | a1^2 a2^2");
    CHECK(rec["inf"] == -2);
    CHECK(rec["len"] == 4);
}

TEST_CASE("cli: genus and exit codes") {
    RunResult r = run("genus \"a1^3 a2\"");
    CHECK(r.exitCode == 0);
    CHECK(r.out == "1\n");

    r = run("genus \"a1^2\"");  // 3-component link
    CHECK(r.exitCode == 1);

    r = run("genus \"a9\"");  // bad token
    CHECK(r.exitCode == 2);

    r = run("nonsense");
    CHECK(r.exitCode == 2);
}

TEST_CASE("cli: classify plain output") {
    RunResult r = run("classify \"a1^3 a2^-3\"");
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("labels=ConnectedSumTwoBraids") != std::string::npos);
    CHECK(r.out.find("relation=OPEN") != std::string::npos);
    CHECK(r.out.find("rep=\"a1^3 a2^-3\"") != std::string::npos);

    r = run("classify \"a1^5 a2\"");
    CHECK(r.out.find("labels=SQP,TwoBraid") != std::string::npos);
    CHECK(r.out.find("relation=EQUAL") != std::string::npos);
}

TEST_CASE("cli: summit, conjugate, shortest, unknot-seq") {
    RunResult r = run("summit \"a1^3 a2\"");
    CHECK(r.out.find("representative=d^2 |") != std::string::npos);

    r = run("conjugate a1 a2");
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("d^") == 0);

    r = run("conjugate a1 a1^-1");
    CHECK(r.out == "not-conjugate\n");

    r = run("shortest \"d^-3\"");
    CHECK(r.out == "a1^-1 a2^-1 a1^-1 a2^-1 a1^-1 a2^-1\n");

    r = run("unknot-seq \"s1^-1 s2 s1^-1 s2\"");
    CHECK(r.out.find("step 1: a3^-1 a2^-1 a1^2") != std::string::npos);
    CHECK(r.out.find("final:") != std::string::npos);
}

TEST_CASE("cli: oracle subcommands") {
    CHECK(run("oracle shortest \"s1^-1 s2 s1^-1 s2\" --max-len 6").out == "4\n");
    CHECK(run("oracle maxinf \"a1^3 a2\" --depth 6").out == "2\n");
    CHECK(run("oracle burau-equal \"a2 a1\" \"a3 a2\"").out == "true\n");
    RunResult r = run("oracle conjugate a1 a2 --depth 3");
    CHECK(r.exitCode == 0);
    CHECK(r.out != "null\n");
}

TEST_CASE("cli: corpus evaluates cleanly and deterministically") {
    RunResult r = run("--json corpus --eval");
    CHECK(r.exitCode == 0);
    json arr = json::parse(r.out);
    CHECK(arr.size() == braid3::corpus().size());
    for (const auto& rec : arr) {
        CHECK(rec.contains("invariants"));
        if (rec["invariants"]["isKnot"].get<bool>()) {
            CHECK(rec.contains("classification"));
        }
        if (rec["name"] == "figure-eight") {
            CHECK(rec["classification"]["labels"] == json::array({"FigureEight"}));
            CHECK(rec["classification"]["relation"] == "EQUAL");
            CHECK(rec["invariants"]["genus"] == 1);
        }
        if (rec["name"] == "delta-m4-a1-6") {
            CHECK(rec["classification"]["relation"] == "STRICT");
            CHECK(rec["classification"]["uBound"] == 1);
            CHECK(rec["invariants"]["genus"] == 2);
        }
        std::string name = rec["name"].get<std::string>();
        if (name.rfind("alpha-", 0) == 0) {
            int k = name[6] - '0';
            CHECK(rec["invariants"]["genus"] == k);
            if (k >= 2) {
                CHECK(rec["classification"]["relation"] == "STRICT");
                CHECK(rec["classification"]["uBound"] == 1);
            }
        }
    }
    // determinism
    RunResult r2 = run("--json corpus --eval");
    CHECK(r.out == r2.out);
}

TEST_CASE("cli: summit --full lists the set") {
    RunResult r = run("summit a1 --full");
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("size=3") != std::string::npos);
    CHECK(r.out.find("d^0 | a1") != std::string::npos);
    CHECK(r.out.find("d^0 | a2") != std::string::npos);
    CHECK(r.out.find("d^0 | a3") != std::string::npos);
}

TEST_CASE("cli: batch survives malformed lines") {
    std::string path = std::string(BRAID3_CLI_PATH) + ".batch-bad.jsonl";
    {
        std::ofstream f(path);
        f << "this is not json\n";
        f << R"({"v":1,"id":"ok","command":"normalize","word":"a1"})" << "\n";
        f << R"({"v":1,"id":"nocmd","word":"a1"})" << "\n";
    }
    RunResult r = run("batch --jsonl " + path);
    CHECK(r.exitCode == 0);
    std::vector<json> lines;
    std::size_t pos = 0;
    while (pos < r.out.size()) {
        std::size_t nl = r.out.find('\n', pos);
        lines.push_back(json::parse(r.out.substr(pos, nl - pos)));
        pos = nl + 1;
    }
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].contains("error"));
    CHECK(lines[1]["result"]["normalForm"] == "d^0 | a1");
    CHECK(lines[2].contains("error"));
    std::remove(path.c_str());
}

TEST_CASE("cli: batch jsonl is order-preserving and versioned") {
    std::string path = std::string(BRAID3_CLI_PATH) + ".batch-input.jsonl";
    {
        std::ofstream f(path);
        f << R"({"v":1,"id":"a","command":"normalize","word":"a2 a1"})" << "\n";
        f << R"({"v":1,"id":"b","command":"genus","word":"a1^3 a2"})" << "\n";
        f << R"({"v":1,"id":"c","command":"genus","word":"a1^2"})" << "\n";
        f << R"({"v":1,"id":"d","command":"conjugate","word":"a1","word2":"a2"})" << "\n";
    }
    RunResult r = run("batch --jsonl " + path);
    CHECK(r.exitCode == 0);
    std::vector<json> lines;
    std::size_t pos = 0;
    while (pos < r.out.size()) {
        std::size_t nl = r.out.find('\n', pos);
        lines.push_back(json::parse(r.out.substr(pos, nl - pos)));
        pos = nl + 1;
    }
    REQUIRE(lines.size() == 4);
    CHECK(lines[0]["id"] == "a");
    CHECK(lines[0]["result"]["normalForm"] == "d^1 |");
    CHECK(lines[1]["id"] == "b");
    CHECK(lines[1]["result"]["genus"] == 1);
    CHECK(lines[2]["id"] == "c");
    CHECK(lines[2].contains("error"));
    CHECK(lines[3]["result"]["conjugate"] == true);
    for (const auto& l : lines) CHECK(l["v"] == 1);

    RunResult r2 = run("batch --jsonl " + path);
    CHECK(r.out == r2.out);  // byte-identical across runs
    std::remove(path.c_str());
}
