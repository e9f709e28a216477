#include "doctest.h"

#include <mixedcode/cli.hpp>
#include <mixedcode/mixedcode.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "test_data.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Result {
    int status;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = mixedcode::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

Result run_json(std::vector<std::string> args) {
    args.push_back("--json");
    Result r = run(std::move(args));
    // the emitted JSON must survive a parse and re-serialisation unchanged
    REQUIRE(Json::parse(r.out).dump(2) + "\n" == r.out);
    return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST_CASE("standard form command") {
    const Result r = run({"additive", "standard-form", data_path("example1.mtx")});
    CHECK(r.status == 0);
    CHECK(r.out.find("type (2,3,4;2;1,1;1,1,0)") != std::string::npos);
    const Json j = run_json({"additive", "standard-form", data_path("example1.mtx")}).json();
    CHECK(j["type"]["text"] == "(2,3,4;2;1,1;1,1,0)");
    CHECK(j["size"]["value"] == "1024");
    CHECK(j["standard_form"]["rows"].size() == 6);
}

TEST_CASE("dual command") {
    const Result r = run_json({"additive", "dual", data_path("example1.mtx")});
    CHECK(r.status == 0);
    const Json j = r.json();
    CHECK(j["dual_type"]["text"] == "(2,3,4;0;1,1;2,0,1)");
    CHECK(j["dual_size"]["log2"] == 10);
    mixedcode::MixedMatrix h(mixedcode::AlphabetSplit(2, 3, 4));
    for (const auto& row : j["parity_check"]["rows"]) h.append(mixedcode::parse_vector(h.split(), row.get<std::string>()));
    const auto c = mixedcode::span_closure(load_matrix("example1.mtx"));
    CHECK(mixedcode::span_closure(h) == mixedcode::brute_force_dual(c));
}

TEST_CASE("enumerate and gray commands") {
    const Result e = run({"additive", "enumerate", data_path("empty.mtx")});
    CHECK(e.status == 0);
    CHECK(e.out == "0 0 | 0 0 0 | 0 0 0 0\n");
    const Json j = run_json({"additive", "enumerate", data_path("example1.mtx")}).json();
    CHECK(j["count"] == 1024);
    const Json g = run_json({"additive", "gray", data_path("example1.mtx")}).json();
    CHECK(g["length"] == 24);
    CHECK(g["words"].size() == 1024);
    CHECK(g["words"][0] == std::string(24, '0'));
}

TEST_CASE("mindist command") {
    const Json j = run_json({"additive", "mindist", data_path("example1.mtx")}).json();
    CHECK(j["distance"] == 3);
    CHECK(j["exact"] == true);
    const Json bound = run_json({"additive", "mindist", data_path("example1.mtx"), "--max-codewords", "8"}).json();
    CHECK(bound["exact"] == false);
    CHECK(bound["distance"].get<int>() >= 3);
}

TEST_CASE("verify-dual command") {
    CHECK(run({"additive", "verify-dual", data_path("example1.mtx")}).status == 0);
    CHECK(run({"additive", "verify-dual", data_path("example1_gs.mtx"), data_path("example2_h.mtx")}).status == 0);
    const Result bad = run_json({"additive", "verify-dual", data_path("example1.mtx"), data_path("example2_h.mtx")});
    CHECK(bad.status == 1);
    CHECK(bad.json()["orthogonal"] == false);
    CHECK(bad.json().contains("witness"));
}

TEST_CASE("cyclic commands") {
    const Result m = run({"cyclic", "matrix", data_path("example3.gen")});
    CHECK(m.status == 0);
    CHECK(mixedcode::parse_matrix(m.out) == load_matrix("example3_matrix.mtx"));

    const Json size = run_json({"cyclic", "size", data_path("example3.gen")}).json();
    CHECK(size["size"]["log2"] == 33);
    CHECK(size["size"]["value"] == "8589934592");
    CHECK(run({"cyclic", "size", data_path("example3.gen")}).out == "2^33 = 8589934592\n");

    const Result ok = run_json({"cyclic", "validate", data_path("example3.gen")});
    CHECK(ok.status == 0);
    CHECK(ok.json()["valid"] == true);
    CHECK(ok.json()["cofactors"]["h_p"] == "7+5x+6x^2+x^3");

    const Result bad = run({"cyclic", "validate", data_path("example3_bad.gen")});
    CHECK(bad.status == 1);
    CHECK(bad.out.find("(v) FAIL") != std::string::npos);
    const Json bj = run_json({"cyclic", "validate", data_path("example3_bad.gen")}).json();
    CHECK(bj["conditions"][4]["name"] == "v");
    CHECK(bj["conditions"][4]["pass"] == false);
    CHECK(bj["conditions"][4]["remainder"] != "0");

    CHECK(run({"cyclic", "matrix", data_path("example3_bad.gen")}).status == 1);
    CHECK(run({"cyclic", "validate", data_path("even.gen")}).status == 2);

    CHECK(run({"cyclic", "closure", data_path("example3.gen")}).status == 0);
    const std::string single = temp_file("mixedcode_single.mtx", "3 1 1\n1 0 0 | 0 | 0\n");
    const Result open = run_json({"cyclic", "closure", single});
    CHECK(open.status == 1);
    CHECK(open.json()["first_failing_row"] == 0);
}

TEST_CASE("oracle command") {
    CHECK(run({"oracle", "check", data_path("example1.mtx")}).status == 0);
    CHECK(run({"oracle", "check", data_path("zero.mtx")}).status == 0);
    const Result bad = run_json({"oracle", "check", "--codewords", data_path("not_closed.mtx")});
    CHECK(bad.status == 1);
    CHECK(bad.json()["pass"] == false);
    CHECK(bad.json()["checks"][0]["detail"].get<std::string>().find("is not in the set") != std::string::npos);
}

TEST_CASE("exit codes for input errors and budgets") {
    const std::string broken = temp_file("mixedcode_broken.mtx", "1 1 1\n1 | 2 | 3\n1 | 9 | 3\n");
    const Result parse = run_json({"additive", "enumerate", broken});
    CHECK(parse.status == 2);
    CHECK(parse.json()["error"]["kind"] == "parse");
    CHECK(parse.json()["error"]["line"] == 3);
    CHECK(parse.err.find("line 3") != std::string::npos);

    CHECK(run({"additive", "enumerate", data_path("missing.mtx")}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({}).status == 2);
    CHECK(run({"additive", "enumerate"}).status == 2);
    CHECK(run({"--help"}).status == 0);

    const Result budget = run_json({"additive", "enumerate", data_path("example1.mtx"), "--max-codewords", "100"});
    CHECK(budget.status == 3);
    CHECK(budget.json()["error"]["required_log2"] == 10.0);
    CHECK(run({"oracle", "check", data_path("example1.mtx"), "--max-ambient", "1000"}).status == 3);

    setenv("MIXEDCODE_BUDGET", "100", 1);
    CHECK(run({"additive", "enumerate", data_path("example1.mtx")}).status == 3);
    CHECK(run({"additive", "enumerate", data_path("example1.mtx"), "--max-codewords", "2000"}).status == 0);
    setenv("MIXEDCODE_BUDGET", "100000,100", 1);
    CHECK(run({"oracle", "check", data_path("example1.mtx")}).status == 3);
    setenv("MIXEDCODE_BUDGET", "lots", 1);
    CHECK(run({"additive", "enumerate", data_path("example1.mtx")}).status == 2);
    unsetenv("MIXEDCODE_BUDGET");
}

TEST_CASE("reports can be written to a file") {
    const auto path = (std::filesystem::temp_directory_path() / "mixedcode_report.json").string();
    std::filesystem::remove(path);
    const Result r = run({"cyclic", "size", data_path("example3.gen"), "--json", "--out", path});
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    const Json j = Json::parse(mixedcode::read_text_file(path));
    CHECK(j["command"] == "cyclic size");
}
