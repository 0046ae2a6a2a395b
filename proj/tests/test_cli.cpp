#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

// End-to-end checks of the command-line tool. The binary path comes from the
// EGHFORGE_CLI environment variable set by ctest.

namespace {

using Json = nlohmann::ordered_json;

std::string cli_path() {
    const char* p = std::getenv("EGHFORGE_CLI");
    REQUIRE_MESSAGE(p != nullptr, "EGHFORGE_CLI must point at the built binary");
    return p;
}

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int raw = pclose(pipe);
    r.status = WEXITSTATUS(raw);
    return r;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

const char* kTriangle = "/tmp/eghforge_cli_triangle.json";
const char* kOctahedron = "/tmp/eghforge_cli_octa.json";
const char* kBadSeq = "/tmp/eghforge_cli_badseq.json";
const char* kGoodSeq = "/tmp/eghforge_cli_goodseq.json";

void write_inputs() {
    write_file(kTriangle, R"({"vars": 3, "gens": ["x1*x2", "x1*x3", "x2*x3"]})");
    write_file(kOctahedron, R"({
      "vertices": ["1","2","3","4","5","6"],
      "facets": [["1","3","5"],["1","3","6"],["1","4","5"],["1","4","6"],
                 ["2","3","5"],["2","3","6"],["2","4","5"],["2","4","6"]]
    })");
    write_file(kBadSeq, R"(["x1;x2", "x1;x3"])");
    write_file(kGoodSeq, R"(["x1;x2", "x3;x1+x2"])");
}

}  // namespace

TEST_CASE("egh command certifies the triangle and reports the witness") {
    write_inputs();
    RunResult r = run(std::string("egh ") + kTriangle + " --caps 2,2");
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["tool"] == "eghforge");
    CHECK(j["result"]["witness"]["gens"] == Json::array({"x1^2", "x1*x2", "x2^2"}));
    CHECK(j["result"]["certified"] == true);
    CHECK(j["assertions"]["all_pass"] == true);
}

TEST_CASE("reports are byte-identical across runs") {
    write_inputs();
    std::string args = std::string("egh ") + kTriangle + " --caps 2,2 --trust linear --seed 5";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
}

TEST_CASE("egh-verify reproduces certified from a saved report") {
    write_inputs();
    std::string report = "/tmp/eghforge_cli_report.json";
    RunResult first = run(std::string("egh ") + kTriangle + " --caps 2,2 --out " + report);
    REQUIRE(first.status == 0);
    RunResult second = run(std::string("egh-verify ") + kTriangle + " " + report);
    CHECK(second.status == 0);
    Json j = Json::parse(second.out);
    CHECK(j["certified"] == true);
    CHECK(j["assertions"]["all_pass"] == true);
}

TEST_CASE("regseq-verify accepts and rejects with a witness") {
    write_inputs();
    RunResult good = run(std::string("regseq-verify ") + kGoodSeq);
    CHECK(good.status == 0);
    CHECK(Json::parse(good.out)["regular"] == true);

    RunResult bad = run(std::string("regseq-verify ") + kBadSeq);
    CHECK(bad.status == 1);
    Json j = Json::parse(bad.out);
    CHECK(j["regular"] == false);
    CHECK(j["witness_selection"] == Json::array({0, 0}));
}

TEST_CASE("caps must be non-decreasing") {
    write_inputs();
    RunResult r = run(std::string("egh ") + kTriangle + " --caps 3,2");
    CHECK(r.status == 2);
}

TEST_CASE("characteristic must be prime") {
    write_inputs();
    RunResult r = run(std::string("cm-check ") + kOctahedron + " --char 4");
    CHECK(r.status == 2);
    RunResult ok = run(std::string("cm-check ") + kOctahedron + " --char 2");
    CHECK(ok.status == 0);
    CHECK(Json::parse(ok.out)["cohen_macaulay"] == true);
}

TEST_CASE("unknown commands and flags fail with exit 2") {
    write_inputs();
    CHECK(run("no-such-command x").status == 2);
    CHECK(run(std::string("height ") + kTriangle + " --bogus-flag 1").status == 2);
    CHECK(run(std::string("hilbert /tmp/eghforge_cli_missing.json")).status == 2);
}

TEST_CASE("transfer pipeline on the octahedron") {
    write_inputs();
    RunResult r = run(std::string("transfer ") + kOctahedron + " --caps 2,2,2 --char 2");
    CHECK(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["suggested_caps"] == Json::array({2, 2, 2}));
    CHECK(j["char"] == 2);
    CHECK(j["assertions"]["h_equal"] == true);
    CHECK(j["assertions"]["balanced"] == true);
    CHECK(j["assertions"]["gamma_cm"] == true);
    CHECK(j["partition"]["bounds"] == Json::array({1, 1, 1}));
    CHECK(j["h_gamma"] == Json::array({"1", "3", "3", "1"}));
}

TEST_CASE("hvec and series agree on the octahedron h-vector") {
    write_inputs();
    RunResult hv = run(std::string("hvec ") + kOctahedron);
    REQUIRE(hv.status == 0);
    CHECK(Json::parse(hv.out)["h_vector"] == Json::array({"1", "3", "3", "1"}));

    RunResult sr = run(std::string("sr ") + kOctahedron);
    REQUIRE(sr.status == 0);
    CHECK(Json::parse(sr.out)["ideal"]["gens"] == Json::array({"x1*x2", "x3*x4", "x5*x6"}));
}

TEST_CASE("balanced-check exit codes") {
    write_inputs();
    std::string part = "/tmp/eghforge_cli_partition.json";
    write_file(part, R"({"blocks": [["1","2"],["3","4"],["5","6"]], "bounds": [1,1,1]})");
    CHECK(run(std::string("balanced-check ") + kOctahedron + " " + part).status == 0);
    std::string bad = "/tmp/eghforge_cli_partition_bad.json";
    write_file(bad, R"({"blocks": [["1","2"],["3","4"],["5","6"]], "bounds": [1,2,1]})");
    CHECK(run(std::string("balanced-check ") + kOctahedron + " " + bad).status == 1);
}

TEST_CASE("regseq-search finds the triangle certificate deterministically") {
    write_inputs();
    std::string args = std::string("regseq-search ") + kTriangle + " --caps 2,2 --seed 1";
    RunResult a = run(args);
    CHECK(a.status == 0);
    Json j = Json::parse(a.out);
    CHECK(j["found"] == true);
    CHECK(j["verified"] == true);
    RunResult b = run(args);
    CHECK(a.out == b.out);
}

TEST_CASE("EGHFORGE_MAX_DEGREE provides the hilbert default") {
    write_inputs();
    std::string cmd = std::string("EGHFORGE_MAX_DEGREE=4 ") + cli_path() + " hilbert " +
                      kTriangle + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    pclose(pipe);
    Json j = Json::parse(out);
    CHECK(j["max_degree"] == 4);
    CHECK(j["values"] == Json::array({"1", "3", "3", "3", "3"}));
}
