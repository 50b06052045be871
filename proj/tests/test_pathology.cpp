#include <doctest.h>

#include "arclift/pathology.hpp"
#include "support/build.hpp"
#include "support/oracles.hpp"

using namespace arclift;
using build::error_of;
using build::fp;

namespace {

using CE = ColimitElement;

CE x(std::size_t n, Family f = Family::V1) { return CE::x(f, fp(7), n); }
CE q0(Family f = Family::V1) { return CE::q0(f, fp(7)); }
CE c(long v, Family f = Family::V1) { return CE::constant(f, fp(7).from_int(v)); }

CE power(const CE& a, unsigned k) {
    CE out = c(1, a.family());
    for (unsigned i = 0; i < k; ++i) out = out * a;
    return out;
}

}  // namespace

TEST_CASE("colimit arithmetic") {
    CHECK((x(0) * x(5)).is_zero());
    CHECK(x(0) == -(q0() * x(1)));
    CHECK_FALSE(x(3) == c(0));
    CHECK_FALSE(x(3).is_zero());
    CHECK(x(2) == power(q0(), 2) * x(4));
    CHECK((x(1) + x(1)) == c(2) * x(1));
    CHECK((c(6) * power(q0(), 3) * x(2)).is_zero());
    CHECK(to_string(c(6, Family::R1) * power(q0(Family::R1), 3) * x(2, Family::R1)) == "6*q0^3*x2");
    CHECK(to_string(c(0)) == "0");
}

TEST_CASE("decisions report their level") {
    const auto d = decide_equal(x(2) * x(3), c(0));
    CHECK(d.holds);
    CHECK(d.level >= 6);
    const auto e = decide_equal(x(0), -(q0() * x(1)));
    CHECK(e.holds);
    CHECK_FALSE(decide_equal(x(4), c(0)).holds);
}

TEST_CASE("families and rings do not mix") {
    CHECK(error_of([] { (void)(x(0) + x(0, Family::R1)); }) == ErrorKind::mixed_families);
    CHECK(error_of([] { (void)(x(0) == x(0, Family::R1)); }) == ErrorKind::mixed_families);
    CHECK(error_of([] { (void)(x(0) * CE::x(Family::V1, fp(5), 0)); }) == ErrorKind::mixed_rings);
    CHECK(error_of([] { CE::x(Family::V1, build::zmod(9), 0); }).has_value());
}

TEST_CASE("the nilradical of V1 squares to zero") {
    oracle::Rng rng(61);
    std::uniform_int_distribution<int> coef(0, 6), idx(0, 6), pw(0, 3);
    auto random_ideal_element = [&] {
        CE s = c(0);
        for (int k = 0; k < 3; ++k) s = s + c(coef(rng)) * power(q0(), static_cast<unsigned>(pw(rng))) * x(static_cast<std::size_t>(idx(rng)));
        return s;
    };
    for (int i = 0; i < 200; ++i) CHECK((random_ideal_element() * random_ideal_element()).is_zero());
}

TEST_CASE("R1 is a polynomial colimit") {
    const auto a0 = CE::a0(fp(7));
    CHECK_FALSE((x(0, Family::R1) * x(0, Family::R1)).is_zero());
    CHECK(a0 == -(q0(Family::R1) * x(0, Family::R1)));
    CHECK(a0 == power(q0(Family::R1), 2) * x(1, Family::R1));
    CHECK(a0 == -(power(q0(Family::R1), 3) * x(2, Family::R1)));
    CHECK(x(1, Family::R1).settling_level() == 1);
}

TEST_CASE("identity table") {
    const Ring k = fp(7);
    const auto rows = check_identities(k, 12, k.from_int(3));
    CHECK(rows.size() > 100);
    for (const auto& row : rows) {
        CAPTURE(row.identity);
        CHECK(row.holds);
    }
    // q0 = 0 is not a unit, so nothing is killed by that specialisation.
    const auto at0 = check_identities(k, 4, k.zero());
    CHECK(std::any_of(at0.begin(), at0.end(), [](const IdentityRow& r) { return !r.holds; }));
}

TEST_CASE("sawed completion") {
    const Ring k = fp(7);
    const auto one = sawed_completion(k, 1);
    CHECK(one.dimension == 1);
    CHECK(one.basis == std::vector<std::string>{"1"});
    const auto three = sawed_completion(k, 3);
    CHECK(three.dimension == 3);
    CHECK(three.basis == std::vector<std::string>{"1", "q0", "q0^2"});
    REQUIRE(three.generators.size() == 7);
    CHECK(three.generators.front().name == "a0");
    CHECK(to_string(three.generators.front().factorization) == "6*q0^3*x2");
    for (const auto& g : three.generators) CHECK(g.verified);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(sawed_completion(k, n).dimension == n);
}

TEST_CASE("completion of Z[t]/(t - p)") {
    const auto a = bizzard_completion(3, 2);
    CHECK(a.modulus == 9);
    CHECK(a.t_image == 3);
    const auto b = bizzard_completion(2, 1);
    CHECK(b.modulus == 2);
    CHECK(b.t_image == 0);
    const auto c5 = bizzard_completion(5, 3);
    CHECK(c5.modulus == 125);
    CHECK(c5.t_image == 5);
    for (const auto& w : {a, b, c5}) {
        CHECK(w.kills_t_minus_p);
        CHECK(w.kills_t_power);
    }
    CHECK(error_of([] { bizzard_completion(4, 2); }).has_value());
}

TEST_CASE("xy = 0 arc over V1") {
    const auto xy = xy_arc_counterexample(fp(7), 10);
    CHECK(xy.product_zero);
    CHECK(xy.x_nonzero);
    CHECK(xy.q_nondegenerate);
    REQUIRE(xy.product.size() == 10);
    for (const auto& p : xy.product) CHECK(p.is_zero());
    CHECK(xy.x.front() == x(0));
    CHECK_FALSE(xy.x.front().is_zero());
    CHECK(xy.x[2] + q0() * xy.x[3] == c(0));
}
