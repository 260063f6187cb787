#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "apolar/invariants.hpp"
#include "apolar/text_format.hpp"
#include "cli.hpp"

using apolar::cli::run_cli;
using nlohmann::json;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
    json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::vector<const char*> argv{"apolar"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

struct EnvGuard {
    std::string name;
    EnvGuard(const std::string& n, const std::string& v) : name(n) { setenv(n.c_str(), v.c_str(), 1); }
    ~EnvGuard() { unsetenv(name.c_str()); }
};

const std::string kData = APOLAR_TEST_DATA_DIR;

} // namespace

TEST_CASE("hilbert command") {
    auto r = run({"hilbert", "--invariant", "det", "--n", "3", "--quiet"});
    CHECK(r.code == 0);
    auto j = r.parsed();
    CHECK(j["hilbert"] == json::array({1, 9, 9, 1}));
    CHECK(j["length"] == 20);
    CHECK(j["mode"] == "rational");
    CHECK(r.err.empty());

    r = run({"hilbert", "--invariant", "pf", "--n", "5", "--mode", "mod-p", "--quiet"});
    CHECK(r.code == 0);
    j = r.parsed();
    CHECK(j["hilbert"] == json::array({1, 45, 210, 210, 45, 1}));
    CHECK(j["mode"] == "mod-p");

    CHECK(run({"hilbert", "--invariant", "det", "--n", "0"}).code == 1);
    CHECK(run({"hilbert", "--invariant", "immanant", "--n", "2"}).code == 1);
    CHECK(run({"hilbert", "--invariant", "det"}).code == 1);

    r = run({"hilbert", "--invariant", "det", "--n", "2", "--mu", "--quiet"});
    CHECK(r.parsed()["mu"]["2"] == 9);

    r = run({"hilbert", "--invariant", "det", "--n", "3", "--format", "csv", "--quiet"});
    CHECK(r.out == "invariant,n,mode,length,hilbert\ndet,3,rational,20,1 9 9 1\n");
}

TEST_CASE("progress goes to stderr only") {
    const auto r = run({"hilbert", "--invariant", "det", "--n", "3"});
    CHECK(r.code == 0);
    CHECK_FALSE(r.err.empty());
    CHECK(r.out == run({"hilbert", "--invariant", "det", "--n", "3", "--quiet"}).out);
}

TEST_CASE("prime validation") {
    CHECK(run({"hilbert", "--invariant", "det", "--n", "3", "--mode", "mod-p", "--prime", "8"}).code == 1);
    CHECK(run({"hilbert", "--invariant", "pf", "--n", "5", "--mode", "mod-p", "--prime", "7"}).code == 1);
    CHECK(run({"hilbert", "--invariant", "det", "--n", "3", "--mode", "mod-p", "--prime", "7", "--quiet"}).code == 0);
    CHECK(run({"hilbert", "--invariant", "det", "--n", "3", "--mode", "fast"}).code == 1);
}

TEST_CASE("environment variables and precedence") {
    {
        EnvGuard g("APOLAR_MODE", "mod-p");
        CHECK(run({"hilbert", "--invariant", "det", "--n", "3", "--quiet"}).parsed()["mode"] == "mod-p");
        CHECK(run({"hilbert", "--invariant", "det", "--n", "3", "--mode", "rational", "--quiet"}).parsed()["mode"] ==
              "rational");
    }
    {
        EnvGuard g("APOLAR_CEILING", "10");
        CHECK(run({"verify", "--invariant", "det", "--n", "3", "--route", "direct", "--quiet"}).code == 2);
        CHECK(run({"verify", "--invariant", "det", "--n", "3", "--route", "direct", "--ceiling", "1000", "--quiet"}).code == 0);
    }
    {
        EnvGuard g("APOLAR_THREADS", "3");
        const auto a = run({"groebner", "--invariant", "pf", "--n", "3", "--quiet"});
        const auto b = run({"groebner", "--invariant", "pf", "--n", "3", "--threads", "1", "--quiet"});
        CHECK(a.out == b.out);
    }
}

TEST_CASE("verify command") {
    auto r = run({"verify", "--invariant", "det", "--n", "4", "--route", "both", "--quiet"});
    CHECK(r.code == 0);
    auto j = r.parsed();
    CHECK(j["passed"] == true);
    CHECK(j["direct"]["passed"] == true);
    CHECK(j["groebner"]["groebner"]["isGroebner"] == true);
    for (const auto& d : j["direct"]["degrees"]) CHECK(d["equal"] == true);

    r = run({"verify", "--invariant", "hf", "--n", "2", "--quiet"});
    CHECK(r.code == 0);
    for (const auto& d : r.parsed()["direct"]["degrees"]) CHECK(d["equal"] == true);

    r = run({"verify", "--invariant", "det", "--n", "3", "--route", "direct", "--drop-candidate", "0", "--quiet"});
    CHECK(r.code == 3);
    CHECK(r.parsed()["passed"] == false);

    CHECK(run({"verify", "--invariant", "det", "--n", "3", "--drop-candidate", "99"}).code == 1);
    CHECK(run({"verify", "--invariant", "det", "--n", "3", "--route", "sideways"}).code == 1);
    CHECK(run({"verify", "--invariant", "pf", "--n", "3", "--route", "groebner", "--quiet"}).code == 0);
    CHECK(run({"verify", "--invariant", "det", "--n", "3", "--mu", "--quiet"}).code == 0);
    CHECK(run({"verify", "--invariant", "pf", "--n", "4", "--route", "direct", "--quiet"}).code == 2);
}

TEST_CASE("groebner command") {
    auto r = run({"groebner", "--invariant", "det", "--n", "3", "--quiet"});
    CHECK(r.code == 0);
    auto j = r.parsed();
    CHECK(j["report"]["isGroebner"] == true);
    CHECK(j["report"]["pairs"] == 630);
    CHECK(j["report"]["failures"].empty());

    r = run({"groebner", "--invariant", "pf", "--n", "2", "--quiet"});
    CHECK(r.code == 3);
    j = r.parsed();
    REQUIRE(j["report"]["failures"].size() == 1);
    const auto pf4 = apolar::build_invariant(apolar::InvariantKind::Pfaffian, 2);
    const std::string rem = j["report"]["failures"][0]["remainder"];
    CHECK_FALSE(apolar::parse_polynomial(rem, apolar::Ring::S, pf4.grid()).is_zero());

    CHECK(run({"groebner", "--invariant", "det", "--n", "3", "--basis", "ls", "--quiet"}).code == 0);
    CHECK(run({"groebner", "--invariant", "det", "--n", "3", "--basis", "permanents", "--quiet"}).code == 3);
    CHECK(run({"groebner", "--invariant", "pf", "--n", "3", "--basis", "ls"}).code == 1);
    r = run({"groebner", "--invariant", "det", "--n", "3", "--no-coprime", "--quiet"});
    CHECK(r.parsed()["report"]["skipped"] == 0);
}

TEST_CASE("bounds and table commands") {
    auto j = run({"bounds", "--invariant", "pf", "--n", "4", "--quiet"}).parsed();
    CHECK(j["rs_lower"] == 64);
    j = run({"bounds", "--invariant", "det", "--n", "2", "--quiet"}).parsed();
    CHECK(j["rs_lower"] == 3);
    CHECK(j["lt_lower"] == 4);
    CHECK(j["l_diff"] == 4);
    CHECK(run({"bounds", "--invariant", "det", "--n", "3", "--certify", "none", "--strict", "--quiet"}).code == 3);
    CHECK(run({"bounds", "--invariant", "det", "--n", "3", "--certify", "none", "--quiet"}).code == 0);

    auto r = run({"table", "--n", "2..6", "--golden", kData + "/table1.csv", "--quiet"});
    CHECK(r.code == 0);
    r = run({"table", "--n", "2..4", "--format", "csv", "--quiet"});
    CHECK(r.out == "n,rs_lower,lt_lower,l_diff\n2,3,4,4\n3,10,14,9\n4,35,43,36\n");

    const auto bad = std::filesystem::temp_directory_path() / "apolar_bad_table.csv";
    {
        std::ofstream f(bad);
        f << "n,rs_lower,lt_lower,l_diff\n2,3,4,5\n";
    }
    CHECK(run({"table", "--n", "2..2", "--golden", bad.string(), "--quiet"}).code == 3);
    std::filesystem::remove(bad);
    CHECK(run({"table", "--n", "2..2", "--golden", "/nonexistent/table.csv", "--quiet"}).code == 1);
    CHECK(run({"table", "--n", "six", "--quiet"}).code == 1);
}

TEST_CASE("contract and waring commands") {
    auto r = run({"contract", "--invariant", "det", "--n", "3", "--op", "d_{2,2}*d_{3,3} + d_{2,3}*d_{3,2}", "--format",
                  "text-poly"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
    r = run({"contract", "--f", "a_{1,1}*a_{2,2} - a_{1,2}*a_{2,1}", "--grid", "generic:2x2", "--op", "d_{1,1}"});
    CHECK(r.code == 0);
    const auto j = r.parsed();
    CHECK(j["result"] == "a_{2,2}");
    const auto g = apolar::VariableGrid::generic(2, 2);
    CHECK(apolar::format_polynomial(apolar::parse_polynomial(j["f"].get<std::string>(), apolar::Ring::R, g)) == j["f"]);
    CHECK(run({"contract", "--f", "a_{1,1}", "--op", "d_{1,1}"}).code == 1);
    CHECK(run({"contract", "--f", "a_{1,1}", "--grid", "banded:3", "--op", "d_{1,1}"}).code == 1);

    r = run({"waring", "--invariant", "det", "--n", "2", "--form", "a_{1,1} + a_{2,2}", "--form", "a_{1,1} - a_{2,2}",
             "--form", "a_{1,2} + a_{2,1}", "--form", "a_{1,2} - a_{2,1}", "--coeff", "1/4", "--coeff", "-1/4",
             "--coeff", "-1/4", "--coeff", "1/4"});
    CHECK(r.code == 0);
    CHECK(r.parsed()["verified"] == true);
    r = run({"waring", "--invariant", "det", "--n", "2", "--form", "a_{1,1}", "--form", "a_{2,2}"});
    CHECK(r.code == 3);
    CHECK(r.parsed()["coefficients"].is_null());
    r = run({"waring", "--f", "a_{1,1}*a_{1,2}*a_{1,3}", "--grid", "generic:1x3", "--form", "a_{1,1} + a_{1,2} + a_{1,3}",
             "--form", "a_{1,1} - a_{1,2} - a_{1,3}", "--form", "a_{1,1} - a_{1,2} + a_{1,3}", "--form",
             "a_{1,1} + a_{1,2} - a_{1,3}"});
    CHECK(r.code == 0);
    CHECK(r.parsed()["coefficients"] == json::array({"1/24", "1/24", "-1/24", "-1/24"}));
}

TEST_CASE("exit codes for the command surface") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"hilbert", "--invariant", "det", "--n", "3", "--bogus"}).code == 1);
}

TEST_CASE("identical runs give identical bytes") {
    const std::vector<std::string> args{"verify", "--invariant", "pf", "--n", "3", "--route", "both", "--quiet"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> t{"table", "--n", "2..5", "--format", "json", "--quiet"};
    CHECK(run(t).out == run(t).out);
}
