#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tqft/cli.hpp"

using namespace tqft;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "tqftdims");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("dims rows") {
    const Run r = run({"dims", "--p", "5", "--gmax", "3", "--format", "csv"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("p,g,c,fe,fo,D,delta\n", 0) == 0);
    CHECK(contains(r.out, "\n5,3,0,14,1,15,13\n"));
    CHECK(contains(run({"dims", "--p", "7", "--gmax", "2", "--format", "csv"}).out, "\n7,2,0,14,0,14,14\n"));
    const Run one = run({"dims", "--p", "5", "--gmax", "1", "--format", "csv"});
    CHECK(one.out == "p,g,c,fe,fo,D,delta\n5,1,0,2,0,2,2\n5,1,1,1,0,1,1\n");
}

TEST_CASE("dims json and c filter") {
    const Run r = run({"dims", "--p", "7", "--gmax", "2", "--c", "0", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto j = nlohmann::ordered_json::parse(r.out);
    REQUIRE(j.size() == 2);
    CHECK(j[1]["g"] == 2);
    CHECK(j[1]["fe"] == 14);
    CHECK(j[1]["delta"] == 14);
    CHECK(j[0].begin().key() == "p");
}

TEST_CASE("dims float display agrees with exact values") {
    const Run r = run({"dims", "--p", "11", "--gmax", "3", "--format", "json", "--float-display"});
    REQUIRE(r.code == kExitOk);
    for (const auto& row : nlohmann::json::parse(r.out)) {
        CHECK(row["D_float"].get<double>() == doctest::Approx(row["D"].get<double>()).epsilon(1e-6));
        CHECK(row["delta_float"].get<double>() == doctest::Approx(row["delta"].get<double>()).epsilon(1e-6));
    }
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"dims", "--p", "13", "--gmax", "6", "--format", "json"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> list{"census", "--p", "7", "--g", "3", "--c", "1", "--list"};
    CHECK(run(list).out == run(list).out);
}

TEST_CASE("invalid input exits 2") {
    CHECK(run({"dims", "--p", "6", "--gmax", "2"}).code == kExitInvalidInput);
    CHECK(run({"dims", "--p", "5", "--gmax", "0"}).code == kExitInvalidInput);
    CHECK(run({"dims", "--p", "5", "--gmax", "2", "--format", "xml"}).code == kExitInvalidInput);
    CHECK(run({"dims", "--p", "5"}).code == kExitInvalidInput);
    CHECK(run({"frobnicate"}).code == kExitInvalidInput);
    CHECK(run({}).code == kExitInvalidInput);
    CHECK(run({"hopf", "--p", "4"}).code == kExitInvalidInput);
    CHECK(run({"census", "--p", "5", "--g", "2", "--c", "2"}).code == kExitInvalidInput);
    CHECK(run({"verify", "--p-list", "5,9"}).code == kExitInvalidInput);
    CHECK(run({"verify", "--suite", "everything"}).code == kExitInvalidInput);
}

TEST_CASE("census") {
    const Run r = run({"census", "--p", "5", "--g", "2", "--c", "1"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "fe=4 fo=1"));
    const Run list = run({"census", "--p", "5", "--g", "1", "--c", "0", "--list"});
    CHECK(list.out == "g;c;a_b;e;parity\n1;0;0,0;;even\n1;0;0,1;;even\n");
    const Run csv = run({"census", "--p", "5", "--g", "3", "--c", "0", "--format", "csv"});
    CHECK(csv.out == "p,g,c,fe,fo\n5,3,0,14,1\n");
}

TEST_CASE("census size guard") {
    const Run r = run({"census", "--p", "13", "--g", "5", "--c", "0"});
    CHECK(r.code == kExitSizeGuard);
    CHECK(r.out.empty());
    CHECK(contains(r.err, "--force"));
}

TEST_CASE("poly") {
    const Run delta = run({"poly", "--g", "2", "--emit", "delta"});
    CHECK(delta.code == kExitOk);
    CHECK(delta.out == "(1/24)P^3 + (-1/4)C^2P + (1/6)C^3 + (-1/4)CP + (1/4)C^2 + (-1/24)P + (1/12)C\n");
    const Run residue = run({"poly", "--g", "2", "--emit", "D", "--method", "residue"});
    const Run interp = run({"poly", "--g", "2", "--emit", "D", "--method", "interpolate"});
    CHECK(residue.code == kExitOk);
    CHECK(residue.out == interp.out);
    CHECK(run({"poly", "--g", "3", "--emit", "delta", "--method", "symbolic"}).out ==
          run({"poly", "--g", "3", "--emit", "delta"}).out);
    CHECK(run({"poly", "--g", "1", "--emit", "D", "--method", "residue"}).code == kExitInvalidInput);
    CHECK(run({"poly", "--g", "2", "--emit", "delta", "--method", "residue"}).code == kExitInvalidInput);
    const Run js = run({"poly", "--g", "2", "--emit", "fo", "--format", "json"});
    CHECK(js.code == kExitOk);
    CHECK(nlohmann::json::parse(js.out)["monomials"].size() == 9);
}

TEST_CASE("hopf") {
    const Run five = run({"hopf", "--p", "5"});
    CHECK(five.code == kExitOk);
    CHECK(contains(five.out, "valuation=1"));
    CHECK(contains(five.out, "unit=certified"));
    CHECK(contains(run({"hopf", "--p", "7"}).out, "valuation=3"));
}

TEST_CASE("verify") {
    const Run r = run({"verify", "--suite", "fusion", "--p-list", "5,7", "--gmax", "3"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "PASS S*S = -p I (p=7)"));
    CHECK_FALSE(contains(r.out, "FAIL"));
    const Run hopf = run({"verify", "--suite", "hopf", "--p-list", "5"});
    CHECK(hopf.code == kExitOk);
    CHECK(contains(hopf.out, "Hopf determinant"));
}

TEST_CASE("quadruple and scan") {
    const Run q = run({"quadruple"});
    CHECK(q.code == kExitOk);
    CHECK(q.out.rfind("p,g,fe0,fe2,fo2,fo0\n5,4,", 0) == 0);
    CHECK(contains(q.out, "\n5,8,"));
    const Run s = run({"scan", "--gmax", "4"});
    CHECK(s.code == kExitOk);
    CHECK(contains(s.out, "g=4 even-P-powers-vanish=yes divisible-by-delta2=yes"));
}
