#include <doctest.h>
#include <json.hpp>

#include "arclift/cli.hpp"

using arclift::cli::Outcome;

namespace {

Outcome call(std::vector<std::string> args) {
    try {
        return arclift::cli::run(arclift::cli::parse_args(args));
    } catch (const std::exception& e) {
        return Outcome{1, "", e.what()};
    }
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("prepare") {
    const auto o = call({"prepare", "--ring", "Artin(Fp(5); eps; 2)", "--series", "[eps, 1] + O(t^4)"});
    CHECK(o.exit_code == 0);
    CHECK(o.out == "{u: [1, 0, 0, 0] + O(t^4), q: t + eps, n: 2, N: 4}\n");
    const auto j = call({"prepare", "--ring", "Zmod(9)", "--series", "3 + t", "--N", "6", "--output", "json"});
    REQUIRE(j.exit_code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["q"] == "t + 3");
    CHECK(doc["n"] == 2);
    CHECK(doc["N"] == 6);
}

TEST_CASE("divide") {
    const auto h = call({"divide", "--ring", "Artin(Fp(5); eps; 2)", "--series", "t^3 + O(t^4)", "--poly", "t + eps"});
    CHECK(h.exit_code == 0);
    CHECK(contains(h.out, "a: 0"));
    const auto c = call({"divide", "--ring", "Zmod(9)", "--poly", "t + 3", "--power", "2"});
    CHECK(c.out == "cofactor: t + 6\n");
    const auto no = call({"divide", "--ring", "Q", "--poly", "t - 1", "--power", "3"});
    CHECK(no.exit_code == 2);
    CHECK(contains(no.out, "NoDivide"));
    CHECK(contains(no.out, "witness: 1"));
    const auto l = call({"divide", "--ring", "Fp(7)", "--series", "t^3", "--by", "t", "--N", "5"});
    CHECK(l.exit_code == 0);
    CHECK(contains(l.out, "quotient: "));
}

TEST_CASE("lift") {
    const std::vector<std::string> args{"lift", "--ring", "Q", "--map", "vars:[x1,y1]; split:1; eqs:[y1^2-x1^3]",
                                        "--arc", "t^2; t^3 + t^4", "--N", "16"};
    const auto o = call(args);
    REQUIRE(o.exit_code == 0);
    CHECK(contains(o.out, "N': 9"));
    CHECK(contains(o.out, "residual_order: "));
    CHECK(call(args).out == o.out);
    auto json_args = args;
    json_args.insert(json_args.end(), {"--output", "json"});
    const auto doc = nlohmann::json::parse(call(json_args).out);
    CHECK(doc["N'"] == 9);
    CHECK(doc["residual_order"].get<std::size_t>() >= 9);
    CHECK(doc["x_new"][1] == "[0, 0, 0, 1, 0, 0, 0, 0, 0] + O(t^9)");

    const auto bad = call({"lift", "--ring", "Q", "--map", "vars:[x1,y1]; split:1; eqs:[y1^2-x1^3]", "--arc",
                           "t^2; 2*t^3", "--N", "16"});
    CHECK(bad.exit_code == 2);
    CHECK(contains(bad.out, "NotInN1"));
}

TEST_CASE("fiber, patho and bizzard") {
    const auto f = call({"fiber", "--ring", "Fp(7)", "--poly", "t^3 - 3*t^2 + 2*t", "--N", "8"});
    CHECK(f.exit_code == 0);
    CHECK(contains(f.out, "dimension: 2"));
    const auto p = call({"patho", "--check", "identities", "--bound", "8"});
    CHECK(p.exit_code == 0);
    CHECK(contains(p.out, "PASS"));
    CHECK_FALSE(contains(p.out, "FAIL"));
    CHECK(call({"patho", "--check", "sawed", "--n", "3"}).exit_code == 0);
    CHECK(call({"patho", "--check", "xy"}).exit_code == 0);
    const auto b = call({"bizzard", "--p", "5", "--n", "3", "--output", "json"});
    CHECK(nlohmann::json::parse(b.out)["modulus"] == 125);
}

TEST_CASE("errors and exit codes") {
    const auto bad_ring = call({"prepare", "--ring", "Fp(4)", "--series", "[1] + O(t^2)"});
    CHECK(bad_ring.exit_code == 1);
    CHECK(contains(bad_ring.err, "InvalidDescriptor"));
    CHECK(call({"frobnicate"}).exit_code == 1);
    CHECK(call({"prepare", "--ring", "Q"}).exit_code == 1);
    const auto ind = call({"prepare", "--ring", "Artin(Fp(5); eps; 2)", "--series", "[eps, eps] + O(t^4)"});
    CHECK(ind.exit_code == 2);
    CHECK(contains(ind.out, "Indeterminate"));
    CHECK(call({"patho", "--check", "identities", "--bound", "13"}).exit_code == 1);
    CHECK(call({"patho", "--check", "identities", "--c", "0", "--bound", "4"}).exit_code == 2);
}

TEST_CASE("printed output parses back as input") {
    const auto o = call({"prepare", "--ring", "Artin(Q; s1, s2; 3)", "--series", "[s1, s2 + 1, 3] + O(t^6)"});
    REQUIRE(o.exit_code == 0);
    const auto u = o.out.substr(4, o.out.find(", q:") - 4);
    const auto again = call({"prepare", "--ring", "Artin(Q; s1, s2; 3)", "--series", u});
    CHECK(again.exit_code == 0);
}
