#include "cli.hpp"

#include "toda/mass_vector.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = toda::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("toda_cli_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("relations verb") {
    auto r = run({"relations", "--family", "a", "--rank", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(run({"relations", "--family", "ct", "--rank", "4"}).code == 0);
}

TEST_CASE("chain verb") {
    auto r = run({"chain", "--family", "a", "--rank", "4", "--set", "1:2", "--verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("length: 6") != std::string::npos);
    CHECK(r.out.find("EQUAL") != std::string::npos);
    CHECK(run({"chain", "--family", "ct", "--rank", "3", "--set", "1:2", "--verify"}).code == 0);
    CHECK(run({"chain", "--family", "a", "--rank", "5", "--wrap", "5,2", "--verify"}).code == 0);
    CHECK(run({"chain", "--family", "a", "--rank", "3", "--set", "1:3"}).code == 1);
}

TEST_CASE("member verb exit codes") {
    const auto good = temp_file("good.json",
        R"({"family":"affine_a","n":2,"entries":[{"const":"0/1","mu":{"1":"2/1"},"s":{}},)"
        R"({"const":"0/1","mu":{"1":"2/1","2":"2/1"},"s":{}},{"const":"0/1","mu":{},"s":{}}]})");
    auto r = run({"member", "--input", good});
    CHECK(r.code == 0);
    CHECK(r.out.find("word: 1,2") != std::string::npos);

    const auto konst = temp_file("const.json",
        R"({"family":"affine_a","n":2,"entries":[{"const":"1/1"},{},{}]})");
    auto k = run({"member", "--input", konst});
    CHECK(k.code == 2);
    CHECK(k.out.find("NotInGammaN") != std::string::npos);

    const auto broken = temp_file("broken.json", "{\"family\": \"affine_a\",\n \"n\": 2,\n \"entries\": [,]}");
    auto b = run({"member", "--input", broken});
    CHECK(b.code == 1);
    CHECK(b.err.find("line 3") != std::string::npos);

    CHECK(run({"member"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
}

TEST_CASE("pohozaev, fold, rotate, sperm verbs") {
    const auto bad = temp_file("bad.json",
        R"({"family":"affine_a","n":2,"entries":[{"mu":{"1":"2"}},{},{"mu":{"1":"2"}}]})");
    CHECK(run({"pohozaev", "--input", bad}).code == 2);

    const auto ct = temp_file("ct.json", R"({"family":"affine_ct","n":2,"entries":[{"mu":{"1":"2"}},{},{}]})");
    auto f = run({"fold", "--input", ct});
    CHECK(f.code == 0);
    CHECK(toda::from_json(f.out).spec.n == 3);

    const auto a = temp_file("a.json", R"({"family":"affine_a","n":2,"entries":[{"mu":{"1":"2"}},{},{}]})");
    auto rot = run({"rotate", "--input", a, "--r", "2", "--out", "csv"});
    CHECK(rot.code == 0);
    CHECK(rot.out == "index,mass\n1,0\n2,0\n3,2\n");
    CHECK(run({"rotate", "--input", ct, "--r", "2"}).code == 1);

    auto s = run({"sperm", "--l", "1", "--word", "0,1", "--check"});
    CHECK(s.code == 0);
    CHECK(s.out.find("CONSTRAINT OK") != std::string::npos);
}

TEST_CASE("blowup-step verb") {
    auto ok = run({"blowup-step", "--family", "ct", "--rank", "4", "--case", "Ct-IV", "--block", "2:0", "--block", "4:0",
                   "--out", "csv"});
    CHECK(ok.code == 0);
    CHECK(ok.out == "index,mass\n1,0\n2,2\n3,0\n4,2\n5,0\n");
    auto bad = run({"blowup-step", "--family", "a", "--rank", "4", "--case", "A-II", "--wrap", "4,1", "--block", "3:0"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("maximality") != std::string::npos);
}

TEST_CASE("orbit verb output is worker independent") {
    auto one = run({"orbit", "--family", "ct", "--rank", "3", "--depth", "4", "--out", "json", "--workers", "1"});
    auto eight = run({"orbit", "--family", "ct", "--rank", "3", "--depth", "4", "--out", "json", "--workers", "8"});
    CHECK(one.code == 0);
    CHECK(one.out == eight.out);
    CHECK(run({"orbit", "--family", "a", "--rank", "2", "--depth", "1", "--out", "svg"}).code == 1);
}
