#include "edmcp/cli.hpp"
#include "edmcp/edm.hpp"
#include "edmcp/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace edmcp;
using io::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "edmcp_cli_test";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

std::string save(const std::string& name, const std::string& text) {
    const std::string path = temp_path(name);
    io::write_text_file(path, text);
    return path;
}

}  // namespace

TEST_CASE("gen") {
    Run r = run({"gen", "an", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(io::matrix_from_json(json::parse(r.out)) == build_An(3));

    r = run({"gen", "bn", "--n", "6"});
    CHECK(json::parse(r.out)["entries"][0] == "35/1");

    r = run({"gen", "ei", "--n", "5", "--i", "2"});
    const SymMatrix e = io::matrix_from_json(json::parse(r.out));
    CHECK(e(0, 2) == Scalar(1));
    CHECK(e(0, 1) == Scalar(0));

    CHECK(run({"gen", "an", "--n", "1"}).code == 2);
    CHECK(run({"gen", "ei", "--n", "5", "--i", "7"}).code == 2);
    CHECK(run({"gen", "nope"}).code == 2);
    CHECK(run({"gen", "edm", "--points", "0,1,4"}).code == 0);
    CHECK(run({"gen", "edm", "--points", "0,1,0"}).code == 2);
}

TEST_CASE("factorize") {
    Run r = run({"factorize", "optimal", "--n", "6", "--verify"});
    CHECK(r.code == 0);
    const json manifest = json::parse(r.err);
    CHECK(manifest["command"] == "factorize optimal");
    CHECK(manifest["result"]["verification"]["passed"] == true);

    r = run({"factorize", "inductive", "--n", "8", "--q", R"({"rad":35,"coef":"1/5"})", "--verify"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["field"]["rad"] == 35);

    r = run({"factorize", "integer", "--n", "3"});
    CHECK(r.code == 0);
    const CpFactorization f = io::factorization_from_json(json::parse(r.out));
    REQUIRE(f.atoms.size() == 3);
    CHECK(f.atoms[1].weight == Scalar(3));

    r = run({"factorize", "lrl", "--n", "5", "--verify"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["R"][1][1] == -6);

    r = run({"factorize", "dd", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(run({"factorize", "dd", "--n", "4", "--shift", "13"}).code == 2);

    CHECK(run({"factorize", "inductive", "--n", "33", "--q", "21/20"}).code == 4);
    CHECK(run({"factorize", "optimal"}).code == 2);

    r = run({"factorize", "optimal", "--n", "4", "--numeric", "3"});
    CHECK(json::parse(r.out).contains("numeric"));
}

TEST_CASE("verify") {
    const std::string b2 = save("b2.json", run({"gen", "bn", "--n", "2"}).out);
    const std::string f2 = save("f2.json", run({"factorize", "optimal", "--n", "2"}).out);
    CHECK(run({"verify", b2, f2}).code == 0);

    const std::string b6 = save("b6.json", run({"gen", "bn", "--n", "6"}).out);
    const std::string f5 = save("f5.json", run({"factorize", "integer", "--n", "5"}).out);
    CHECK(run({"verify", b6, f5}).code == 2);

    const std::string b6i = save("b6i.json", io::matrix_to_json(build_An(6).plus_identity(Scalar(36))).dump());
    const std::string c6 = save("c6.json", io::factorization_to_json(smalln_certificate(6).integral).dump());
    Run r = run({"verify", b6i, c6});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["passed"] == true);

    const std::string b3 = save("b3.json", run({"gen", "bn", "--n", "3"}).out);
    const std::string f4 = save("f4.json", run({"factorize", "optimal", "--n", "4"}).out);
    const std::string b4shift = save("b4s.json", io::matrix_to_json(build_Bn(4).plus_identity(Scalar(1))).dump());
    r = run({"verify", b4shift, f4});
    CHECK(r.code == 1);
    CHECK(json::parse(r.out).contains("first_discrepancy"));

    CHECK(run({"verify", b3, temp_path("missing.json")}).code == 2);
}

TEST_CASE("round trip verdicts agree") {
    for (int n : {3, 6, 9}) {
        const Run fac = run({"factorize", "optimal", "--n", std::to_string(n), "--verify"});
        const std::string m = save("rt_m.json", run({"gen", "bn", "--n", std::to_string(n)}).out);
        const std::string f = save("rt_f.json", fac.out);
        CHECK(run({"verify", m, f}).code == fac.code);
    }
}

TEST_CASE("search") {
    const std::string b5 = run({"gen", "bn", "--n", "5"}).out;
    Run r = run({"search"}, b5);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["status"] == "found");
    CHECK(json::parse(r.err)["result"]["nodes"].get<long>() > 0);

    r = run({"search", "--jobs", "2"}, run({"gen", "bn", "--n", "6"}).out);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["status"] == "exhausted");

    r = run({"search"}, io::matrix_to_json(build_An(6).plus_identity(Scalar(36))).dump());
    CHECK(json::parse(r.out)["status"] == "found");

    r = run({"search", "--node-limit", "2"}, io::matrix_to_json(build_An(6).plus_identity(Scalar(36))).dump());
    CHECK(r.code == 3);
    CHECK(json::parse(r.out)["status"] == "limit");

    r = run({"search"}, run({"gen", "an", "--n", "4"}).out);
    CHECK(r.code == 2);
    CHECK(json::parse(r.out).contains("witness"));

    CHECK(run({"search"}, "{not json").code == 2);
}

TEST_CASE("bounds") {
    Run r = run({"bounds", "--n-max", "6"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, row2, line, row6;
    std::getline(lines, header);
    CHECK(header == "n,f,sqrt(7/5)*f,g_J,g_D,g_J/f");
    std::getline(lines, row2);
    CHECK(row2.rfind("2,1,1.1832,1,1,", 0) == 0);
    for (int k = 3; k <= 6; ++k) std::getline(lines, row6);
    CHECK(row6.rfind("6,35,41.4126,48,55,", 0) == 0);
    std::getline(lines, line);
    CHECK(line.find("1.66381") != std::string::npos);

    r = run({"bounds", "--n-max", "3", "--format", "json"});
    CHECK(json::parse(r.out)["rows"].size() == 2);
    CHECK(run({"bounds", "--n-max", "1"}).code == 2);
}

TEST_CASE("help and version") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--version"}).code == 0);
    CHECK(run({}).code == 2);
}
