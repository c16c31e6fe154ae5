#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "corpus.hpp"

#include "bosonorder/cli.hpp"

using namespace bosonorder;
using Json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// Every number in an exact record must be an integer and every result value
// a "p" or "p/q" string; nothing may look like a float.
void check_exact_payload(const Json& node) {
    static const std::regex exact_value("^-?[0-9]+(/[0-9]+)?$");
    if (node.is_number_float()) {
        FAIL_CHECK("float number in exact record: ", node.dump());
    } else if (node.is_string()) {
        CHECK(std::regex_match(node.get<std::string>(), exact_value));
    } else if (node.is_array()) {
        for (const auto& child : node) check_exact_payload(child);
    } else if (node.is_object()) {
        for (const auto& [key, child] : node.items()) {
            if (key == "kind") continue;  // structural label, not a value
            check_exact_payload(child);
        }
    }
}

}  // namespace

TEST_CASE("order emits sorted exact terms") {
    const RunResult r = run({"order", "a ad"});
    REQUIRE(r.exit_code == kExitOk);
    const Json record = Json::parse(r.out);
    CHECK(record["command"] == "order");
    CHECK(record["mode"] == "exact");
    CHECK(record["inputs"]["expr"] == "a ad");
    const Json& terms = record["result"]["terms"];
    REQUIRE(terms.size() == 2);
    CHECK(terms[0]["r"] == 0);
    CHECK(terms[0]["s"] == 0);
    CHECK(terms[0]["coeff"] == "1");
    CHECK(terms[1]["r"] == 1);
    CHECK(terms[1]["s"] == 1);
    CHECK(terms[1]["coeff"] == "1");
}

TEST_CASE("order handles the double-contraction example") {
    const RunResult r = run({"order", "--expr", "a a ad ad"});
    REQUIRE(r.exit_code == kExitOk);
    const Json terms = Json::parse(r.out)["result"]["terms"];
    REQUIRE(terms.size() == 3);
    CHECK(terms[0]["coeff"] == "2");   // identity
    CHECK(terms[1]["coeff"] == "4");   // ad a
    CHECK(terms[2]["coeff"] == "1");   // ad^2 a^2
}

TEST_CASE("tables") {
    const RunResult bell = run({"tables", "bell", "--n", "5"});
    REQUIRE(bell.exit_code == kExitOk);
    CHECK(Json::parse(bell.out)["result"]["values"] ==
          Json::array({"1", "1", "2", "5", "15", "52"}));

    const RunResult stirling = run({"tables", "stirling", "--n", "4"});
    const Json rows = Json::parse(stirling.out)["result"]["rows"];
    REQUIRE(rows.size() == 4);
    CHECK(rows[3]["entries"]["2"] == "7");
    CHECK(rows[3]["entries"]["3"] == "6");

    const RunResult single = run({"tables", "stirling", "--n", "5", "--k", "3"});
    CHECK(Json::parse(single.out)["result"]["value"] == "25");

    const RunResult gen = run({"tables", "genstirling", "--expr", "ad^2 a^2", "--n", "2"});
    const Json grows = Json::parse(gen.out)["result"]["rows"];
    CHECK(grows[1]["entries"] == Json({{"2", "2"}, {"3", "4"}, {"4", "1"}}));

    const RunResult genb =
        run({"tables", "genbell", "--alpha", "2:1", "--d", "0", "--n", "3"});
    CHECK(Json::parse(genb.out)["result"]["values"] == Json::array({"1", "1", "7", "87"}));

    // Rational coefficients surface as p/q strings.
    const RunResult half =
        run({"tables", "genstirling", "--alpha", "1:1/2", "--d", "0", "--n", "2"});
    CHECK(Json::parse(half.out)["result"]["rows"][1]["entries"]["1"] == "1/4");
}

TEST_CASE("numeric evaluators") {
    const RunResult dob = run({"numeric", "dobinski", "--n", "3", "--x", "1"});
    REQUIRE(dob.exit_code == kExitOk);
    const Json record = Json::parse(dob.out);
    CHECK(record["mode"] == "float");
    CHECK(record["inputs"]["eps"].get<std::string>() != "");
    CHECK(std::stod(record["result"]["value"].get<std::string>()) ==
          doctest::Approx(5.0).epsilon(1e-9));

    const RunResult closed_run = run({"numeric", "egf", "closed", "--lambda", "0", "--x", "7"});
    CHECK(Json::parse(closed_run.out)["result"]["value"] == "1");

    const RunResult dd = run({"numeric", "egf", "dobinski", "--alpha", "2:1", "--d", "0",
                              "--lambda", "-0.3", "--x", "1"});
    REQUIRE(dd.exit_code == kExitOk);
    const double reference = std::stod(Json::parse(dd.out)["result"]["value"].get<std::string>());

    const RunResult pade = run({"numeric", "pade", "egf", "--expr", "ad^2 a^2", "--lambda",
                                "-0.3", "--x", "1", "--m", "5", "--pade-n", "5"});
    REQUIRE(pade.exit_code == kExitOk);
    const double resummed =
        std::stod(Json::parse(pade.out)["result"]["value"].get<std::string>());
    CHECK(std::abs(resummed - reference) < 1e-3);

    const RunResult coh = run({"numeric", "coherent", "--alpha", "1:1", "--d", "0", "--lambda",
                               "0.3", "--z", "1", "--trunc", "40"});
    REQUIRE(coh.exit_code == kExitOk);
    CHECK(std::stod(Json::parse(coh.out)["result"]["re"].get<std::string>()) ==
          doctest::Approx(std::exp(std::expm1(0.3))).epsilon(1e-9));

    const RunResult sheff = run({"numeric", "sheffer", "--q", "0,1", "--v", "0", "--z", "1",
                                 "--order", "4"});
    REQUIRE(sheff.exit_code == kExitOk);
    const Json values = Json::parse(sheff.out)["result"]["values"];
    REQUIRE(values.size() == 5);
    CHECK(std::stod(values[0]["re"].get<std::string>()) == doctest::Approx(1.0));
}

TEST_CASE("exit codes") {
    CHECK(run({"order", "a +"}).exit_code == kExitUserError);
    CHECK(run({"order", ""}).exit_code == kExitUserError);
    CHECK(run({"tables", "stirling"}).exit_code == kExitUserError);  // missing --n
    CHECK(run({"tables", "nosuch", "--n", "3"}).exit_code == kExitUserError);
    CHECK(run({"numeric", "egf", "dobinski", "--alpha", "2:1", "--d", "0", "--lambda", "0.3",
               "--x", "1"})
              .exit_code == kExitUserError);  // divergence condition
    CHECK(run({"--bogus"}).exit_code == kExitUserError);
    CHECK(run({"tables", "genstirling", "--expr", "ad + a", "--n", "2"}).exit_code ==
          kExitUserError);  // mixed excess
    CHECK(run({"tables", "genstirling", "--expr", "a", "--n", "2"}).exit_code ==
          kExitUserError);  // negative excess
    CHECK(run({"tables", "genbell", "--expr", "ad a", "--alpha", "1:1", "--n", "2"}).exit_code ==
          kExitUserError);  // ambiguous polynomial input
    CHECK(run({"numeric", "egf", "dobinski", "--alpha", "1:1", "--lambda", "-1", "--x",
               "1"}).exit_code == kExitOk);
    CHECK(run({"--version"}).exit_code == kExitOk);
    CHECK(run({"--help"}).exit_code == kExitOk);
}

TEST_CASE("error messages mention the failure") {
    const RunResult r = run({"order", "a +"});
    CHECK(r.err.find("syntax error") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("determinism and exactness over the corpus") {
    for (const std::string& expr : expression_corpus(50)) {
        CAPTURE(expr);
        const RunResult first = run({"order", "--expr", expr});
        const RunResult second = run({"order", "--expr", expr});
        REQUIRE(first.exit_code == kExitOk);
        CHECK(first.out == second.out);
        const Json record = Json::parse(first.out);
        check_exact_payload(record["result"]);
    }
}

TEST_CASE("table format and --out") {
    const RunResult table = run({"order", "(ad a)^2", "--format", "table"});
    CHECK(table.out.find("r\ts\tcoeff") == 0);
    CHECK(table.out.find("2\t2\t1") != std::string::npos);

    const std::string path = "cli_out_test.json";
    const RunResult filed = run({"order", "a", "--out", path});
    REQUIRE(filed.exit_code == kExitOk);
    CHECK(filed.out.empty());
    std::ifstream f(path);
    std::string line;
    std::getline(f, line);
    CHECK(Json::parse(line)["result"]["terms"][0]["s"] == 1);
    f.close();
    std::remove(path.c_str());
}

TEST_CASE("iteration cap from the environment") {
    setenv("BOSONORDER_MAX_TERMS", "4", 1);
    const RunResult starved = run({"numeric", "dobinski", "--n", "3", "--x", "1"});
    CHECK(starved.exit_code == kExitUserError);
    setenv("BOSONORDER_MAX_TERMS", "junk", 1);
    CHECK(run({"numeric", "dobinski", "--n", "3", "--x", "1"}).exit_code == kExitUserError);
    unsetenv("BOSONORDER_MAX_TERMS");
    CHECK(run({"numeric", "dobinski", "--n", "3", "--x", "1"}).exit_code == kExitOk);
}
