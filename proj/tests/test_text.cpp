#include <doctest.h>

#include "arclift/text.hpp"
#include "support/build.hpp"
#include "support/oracles.hpp"

using namespace arclift;
using namespace arclift::text;
using build::error_of;

TEST_CASE("rings") {
    for (const char* s : {"Fp(5)", "Q", "Zmod(9)", "Artin(Fp(5); eps; 2)", "Artin(Q; s1, s2; 3)"})
        CHECK(parse_ring(s).to_string() == s);
    CHECK(error_of([] { parse_ring("Fp(4)"); }) == ErrorKind::invalid_descriptor);
    CHECK(error_of([] { parse_ring("Z"); }) == ErrorKind::parse_error);
    CHECK(error_of([] { parse_ring("Artin(Fp(5); t; 2)"); }).has_value());
}

TEST_CASE("elements") {
    const Ring r = parse_ring("Artin(Q; s1, s2; 3)");
    CHECK(to_string(parse_element(r, "3*s1*s2 - s1 + 1/2")) == "1/2 - s1 + 3*s1*s2");
    CHECK(parse_element(r, "(1 + s1)^2") == parse_element(r, "1 + 2 s1 + s1^2"));
    CHECK(parse_element(r, "s1^3").is_zero());
    const Ring z9 = parse_ring("Zmod(9)");
    CHECK(parse_element(z9, "1/2") == z9.from_int(5));
    CHECK(error_of([&] { parse_element(z9, "1/3"); }) == ErrorKind::not_a_unit);
    CHECK(error_of([&] { parse_element(z9, "2 +"); }) == ErrorKind::parse_error);
}

TEST_CASE("series and polynomials") {
    const Ring r = parse_ring("Artin(Fp(5); eps; 2)");
    const auto s = parse_series(r, "[eps, 1] + O(t^4)");
    CHECK(s.precision() == 4);
    CHECK(format_series(s) == "[eps, 1, 0, 0] + O(t^4)");
    CHECK(parse_series(r, "t^3 + eps*t + O(t^5)") == parse_series(r, "[0, eps, 0, 1, 0] + O(t^5)"));
    CHECK(parse_series(r, "1 + t", 3).precision() == 3);
    CHECK(error_of([&] { parse_series(r, "1 + t"); }) == ErrorKind::parse_error);
    CHECK(format_monic(parse_monic(r, "t^2 + (1 + eps)*t + 3*eps")) == "t^2 + (1 + eps)*t + 3*eps");
    CHECK(format_low(parse_low(r, "2 + eps*t", 3)) == "eps*t + 2");
    const auto l = laurent_divide(TruncatedSeries::constant(r.one(), 6), parse_series(r, "[eps, 1, 0, 0, 0, 0] + O(t^6)"));
    const auto back = parse_laurent(r, format_laurent(l));
    CHECK(back.offset == l.offset);
    CHECK(back.body == l.body);
}

TEST_CASE("maps and records") {
    const Ring q = parse_ring("Q");
    const auto f = parse_map(q, "vars: [x1, y1]; split: 1; eqs: [y1^2 - x1^3]");
    CHECK(f.split == 1);
    CHECK(parse_map(q, format_map(f)).eqs == f.eqs);
    CHECK(parse_map(q, "vars:[x1,y1]; eqs:[y1^2-x1^3]").split == 1);
    const Ring r = parse_ring("Artin(Fp(5); eps; 2)");
    const FactorizationRecord rec{parse_series(r, "[1, eps] + O(t^3)"), parse_monic(r, "t + eps"), 2, 3};
    CHECK(format_factorization(rec) == "{u: [1, eps, 0] + O(t^3), q: t + eps, n: 2, N: 3}");
    CHECK(parse_factorization(r, format_factorization(rec)) == rec);
    const ModQVector v{parse_monic(r, "t^2"), {parse_low(r, "1 + eps*t", 2), parse_low(r, "3", 2)}};
    CHECK(parse_modq(r, format_modq(v)) == v);
    const auto arc = parse_arc(q, "t^2; t^3 + t^4", 8);
    REQUIRE(arc.size() == 2);
    CHECK(arc[1][4] == q.one());
    CHECK(split_top_level("a, (b, c), [d, e]", ',') == std::vector<std::string>{"a", "(b, c)", "[d, e]"});
}

TEST_CASE("printed values parse back") {
    oracle::Rng rng(71);
    for (const Ring& r : oracle::test_rings()) {
        CAPTURE(r.to_string());
        CHECK(parse_ring(r.to_string()) == r);
        for (int i = 0; i < 100; ++i) {
            const auto a = oracle::random_element(r, rng);
            CHECK(parse_element(r, to_string(a)) == a);
            const auto s = oracle::random_series(r, 1 + static_cast<std::size_t>(i % 6), rng);
            CHECK(parse_series(r, format_series(s)) == s);
            std::vector<RingElement> low;
            for (int k = 0; k < i % 4; ++k) low.push_back(oracle::random_element(r, rng));
            const MonicPoly q(r, low);
            CHECK(parse_monic(r, format_monic(q)) == q);
        }
    }
}
