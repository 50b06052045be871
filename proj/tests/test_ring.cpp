#include <doctest.h>

#include "arclift/ring.hpp"
#include "support/build.hpp"
#include "support/oracles.hpp"

using namespace arclift;
using build::dual;
using build::fp;
using build::rationals;
using build::zmod;

TEST_CASE("descriptors are validated") {
    CHECK_THROWS_AS(fp(6), Error);
    CHECK_THROWS_AS(zmod(1), Error);
    CHECK_THROWS_AS(Ring(RingDescriptor::artinian(RingDescriptor::prime_field(5), {"e"}, 0)), Error);
    CHECK_THROWS_AS(Ring(RingDescriptor::artinian(RingDescriptor::prime_field(5), {"s", "s"}, 2)), Error);
    try {
        fp(9);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_descriptor);
    }
}

TEST_CASE("basic rings") {
    CHECK(*fp(5).cardinality() == 5);
    const Ring d = Ring(RingDescriptor::artinian(RingDescriptor::prime_field(2), {"eps"}, 2));
    const RingElement eps = d.generator(0);
    CHECK((eps * eps).is_zero());
    CHECK(*d.cardinality() == 4);
    const Ring z9 = zmod(9);
    CHECK(z9.is_local());
    CHECK(z9.nilpotency_index() == 2);
    CHECK_FALSE(zmod(6).is_local());
    CHECK(zmod(27).nilpotency_index() == 3);
    CHECK(fp(7).nilpotency_index() == 1);
    CHECK(dual(5).to_string() == "Artin(Fp(5); eps; 2)");
}

TEST_CASE("arithmetic examples") {
    const Ring z9 = zmod(9);
    CHECK((z9.from_int(3) * z9.from_int(3)).is_zero());
    const Ring r = dual(5);
    const RingElement eps = r.generator(0);
    CHECK((r.one() + eps) * (r.one() - eps) == r.one());
    const Ring q = rationals();
    CHECK(q.from_rational(mpq_class(1, 2)) + q.from_rational(mpq_class(1, 3)) == q.from_rational(mpq_class(5, 6)));
    CHECK(q.from_rational(mpq_class(2, 4)) == q.from_rational(mpq_class(1, 2)));
    CHECK_THROWS_AS(z9.one() + fp(3).one(), Error);
}

TEST_CASE("units and inverses") {
    const Ring r = dual(5);
    const RingElement eps = r.generator(0);
    CHECK(invert(r.from_int(2) + eps) == r.from_int(3) + eps);
    CHECK_FALSE(is_unit(zmod(9).from_int(3)));
    const Ring q = rationals();
    CHECK(invert(q.from_rational(mpq_class(-2, 3))) == q.from_rational(mpq_class(-3, 2)));
    CHECK_THROWS_AS(invert(eps), Error);
    CHECK(is_unit(zmod(6).from_int(5)));
    CHECK_FALSE(is_unit(zmod(6).from_int(4)));
}

TEST_CASE("residue and nilpotency") {
    const Ring z9 = zmod(9);
    CHECK(residue(z9.from_int(6)).is_zero());
    CHECK(residue(z9.from_int(6)).ring() == fp(3));
    CHECK(is_nilpotent(z9.from_int(6)));
    const Ring r = dual(5);
    CHECK(residue(r.from_int(2) + r.generator(0)) == fp(5).from_int(2));
    CHECK(is_nilpotent(fp(7).zero()));
    CHECK_FALSE(is_nilpotent(fp(7).from_int(3)));
    CHECK_THROWS_AS(residue(zmod(6).one()), Error);
    CHECK_THROWS_AS(is_nilpotent(zmod(6).one()), Error);
}

TEST_CASE("printing") {
    const Ring r = Ring(RingDescriptor::artinian(RingDescriptor::rationals(), {"s1", "s2"}, 3));
    const RingElement s1 = r.generator(0), s2 = r.generator(1);
    CHECK(to_string(r.zero()) == "0");
    CHECK(to_string(s1 * s2 * r.from_int(3) - s1 + r.from_rational(mpq_class(1, 2))) == "1/2 - s1 + 3*s1*s2");
    CHECK(to_string(rationals().from_int(-4)) == "-4");
    CHECK(to_string(fp(7).from_int(-1)) == "6");
}

TEST_CASE("ring axioms on random elements") {
    oracle::Rng rng(11);
    for (const Ring& r : oracle::test_rings()) {
        CAPTURE(r.to_string());
        for (int i = 0; i < 300; ++i) {
            const auto a = oracle::random_element(r, rng);
            const auto b = oracle::random_element(r, rng);
            const auto c = oracle::random_element(r, rng);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == r.zero());
            CHECK(a * r.one() == a);
        }
    }
}

TEST_CASE("inverse property and nilpotent powers") {
    oracle::Rng rng(12);
    for (const Ring& r : oracle::test_rings()) {
        CAPTURE(r.to_string());
        const auto e = static_cast<std::uint64_t>(r.nilpotency_index());
        for (int i = 0; i < 1000; ++i) {
            const auto a = oracle::random_element(r, rng);
            CHECK(is_unit(a) == !is_nilpotent(a));
            if (is_unit(a)) CHECK(a * invert(a) == r.one());
            const auto nu = oracle::random_nilpotent(r, rng);
            CHECK(pow(nu, e).is_zero());
        }
    }
}
