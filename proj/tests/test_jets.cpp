#include <doctest.h>

#include "arclift/jets.hpp"
#include "arclift/text.hpp"
#include "arclift/weierstrass.hpp"
#include "support/build.hpp"
#include "support/oracles.hpp"

using namespace arclift;
using build::dual;
using build::fp;
using build::series;

namespace {

PolyMap map(const Ring& r, const char* s) { return text::parse_map(r, s); }

LowPoly low(const Ring& r, std::vector<RingElement> c) { return LowPoly(r, std::move(c)); }

}  // namespace

TEST_CASE("reduction modulo q") {
    const Ring f7 = fp(7);
    const auto q = text::parse_monic(f7, "t^2 - 1");
    const auto red = mod_q_reduce(series(f7, {1, 1, 1}, 4), q);
    CHECK(red.remainder == low(f7, {f7.from_int(2), f7.one()}));
    CHECK_FALSE(red.exact);  // t^2 - 1 is not strict
    const auto t3 = mod_q_reduce(series(f7, {0, 0, 0, 1}, 5), MonicPoly::power_of_t(f7, 2));
    CHECK(t3.remainder.is_zero());
    CHECK(t3.exact);
    const Ring r = dual(5);
    const auto eps = r.generator(0);
    const auto c = mod_q_reduce(TruncatedSeries::constant(eps + r.one(), 2), text::parse_monic(r, "t + eps"));
    CHECK(c.remainder == low(r, {eps + r.one()}));
    CHECK_FALSE(c.exact);
    CHECK_THROWS_AS(mod_q_reduce(series(f7, {1}, 1), q), Error);
}

TEST_CASE("reduction reconstructs the truncated arc") {
    oracle::Rng rng(41);
    std::size_t cases = 0;
    for (const Ring& r : oracle::test_rings()) {
        const std::size_t e = static_cast<std::size_t>(r.nilpotency_index());
        for (int i = 0; i < 170; ++i, ++cases) {
            const std::size_t d = 1 + static_cast<std::size_t>(i % 3);
            const std::size_t n = d * (e + 1) + static_cast<std::size_t>(i % 3);
            const auto q = strict_prepare(oracle::random_nondegenerate(r, d, n, rng)).q;
            const auto x = oracle::random_series(r, n, rng);
            const auto red = mod_q_reduce(x, q);
            CHECK(red.exact);
            // x - remainder is q times a series: divide that by q exactly.
            const auto div = divide_by_monic(x.coefficients(), q);
            CHECK(div.remainder == red.remainder.coefficients());
            auto back = oracle::convolve(div.quotient, q.coefficients());
            back.resize(n, r.zero());
            for (std::size_t k = 0; k < d; ++k) back[k] += red.remainder.coefficients()[k];
            CHECK(back == x.coefficients());
        }
    }
    CHECK(cases >= 1000);
}

TEST_CASE("maps on the quotient") {
    const Ring f7 = fp(7);
    const auto q = MonicPoly::power_of_t(f7, 2);
    const ModQVector xbar{q, {low(f7, {f7.from_int(3), f7.from_int(5)})}};
    const auto sq = map_on_Qd(map(f7, "vars: [y]; split: 0; eqs: [y^2]"), xbar);
    CHECK(sq.comps.front() == low(f7, {f7.from_int(2), f7.from_int(2)}));
    CHECK(map_on_Qd(map(f7, "vars: [y]; split: 0; eqs: [y]"), xbar) == xbar);
    const auto c = map_on_Qd(map(f7, "vars: [y]; split: 0; eqs: [4]"), xbar);
    CHECK(c.comps.front() == low(f7, {f7.from_int(4), f7.zero()}));
}

TEST_CASE("maps on the quotient are functorial") {
    oracle::Rng rng(42);
    const Ring r = dual(5);
    const auto g = map(r, "vars: [a, b]; split: 0; eqs: [a*b + eps, a^2 - b]");
    const auto f = map(r, "vars: [u, v]; split: 0; eqs: [u^3 + v, 2*u*v]");
    const auto fg = f.compose(g);
    for (int i = 0; i < 50; ++i) {
        const auto q = strict_prepare(oracle::random_nondegenerate(r, 2, 8, rng)).q;
        ModQVector x{q, {}};
        for (int c = 0; c < 2; ++c)
            x.comps.push_back(low(r, {oracle::random_element(r, rng), oracle::random_element(r, rng)}));
        CHECK(map_on_Qd(fg, x) == map_on_Qd(f, map_on_Qd(g, x)));
    }
}

TEST_CASE("expansion around a reduced arc") {
    const Ring f7 = fp(7);
    const auto q = MonicPoly::power_of_t(f7, 1);
    const ModQVector xbar{q, {low(f7, {f7.from_int(2)})}};
    const auto sq = map(f7, "vars: [y]; split: 0; eqs: [y^2]");
    const auto e0 = expand_around(sq, xbar, {TruncatedSeries(f7, 6)});
    CHECK(e0.gbar.q == times_t(q));
    CHECK(e0.gbar.comps.front() == low(f7, {f7.from_int(4), f7.zero()}));
    CHECK(e0.gprime.front().is_zero());

    // (2 + t^2 x')^2 = 4 + t^2 (4 x' + t^2 x'^2)
    const auto xp = series(f7, {1, 1}, 6);
    const auto e1 = expand_around(sq, xbar, {xp});
    const auto want = xp * f7.from_int(4) + (xp * xp).shifted(2);
    CHECK(e1.gprime.front() == want.truncated(e1.gprime.front().precision()));
    CHECK_THROWS_AS(expand_around(sq, xbar, {TruncatedSeries(f7, 2)}), Error);
}

TEST_CASE("expansion of a linear map") {
    oracle::Rng rng(43);
    const Ring r = dual(5);
    const auto g = map(r, "vars: [a, b]; split: 0; eqs: [3*a + b + eps]");
    for (int i = 0; i < 40; ++i) {
        const auto q = strict_prepare(oracle::random_nondegenerate(r, 2, 8, rng)).q;
        ModQVector xbar{q, {}};
        std::vector<TruncatedSeries> xp;
        for (int c = 0; c < 2; ++c) {
            xbar.comps.push_back(low(r, {oracle::random_element(r, rng), oracle::random_element(r, rng)}));
            xp.push_back(oracle::random_series(r, 10, rng));
        }
        const auto ex = expand_around(g, xbar, xp);
        // Direct evaluation of g on the full arc.
        const auto tq = times_t(q);
        std::vector<TruncatedSeries> arc;
        for (int c = 0; c < 2; ++c) {
            const auto poly = oracle::convolve(tq.coefficients(), xp[c].coefficients());
            auto s = TruncatedSeries::from_polynomial(r, poly, 10);
            s += TruncatedSeries::from_polynomial(r, xbar.comps[c].coefficients(), 10);
            arc.push_back(s);
        }
        const auto w = arc[0] * r.from_int(3) + arc[1] + TruncatedSeries::constant(r.generator(0), 10);
        auto rebuilt = oracle::convolve(tq.coefficients(), ex.gprime.front().coefficients());
        rebuilt.resize(10, r.zero());
        for (std::size_t k = 0; k < 3; ++k) rebuilt[k] += ex.gbar.comps.front().coefficients()[k];
        const std::size_t known = ex.gprime.front().precision() + 3;
        for (std::size_t k = 0; k < known && k < 10; ++k) CHECK(rebuilt[k] == w[k]);
    }
}

TEST_CASE("jets at t^d") {
    const Ring f5 = fp(5);
    const auto q = MonicPoly::power_of_t(f5, 3);
    const auto x = series(f5, {1, 2, 3, 4, 1}, 6);
    CHECK(mod_q_reduce(x, q).remainder == low(f5, {f5.one(), f5.from_int(2), f5.from_int(3)}));
    const ModQVector v{q, {low(f5, {f5.one(), f5.one(), f5.zero()})}};
    const auto cube = map_on_Qd(map(f5, "vars: [y]; split: 0; eqs: [y^3]"), v);
    CHECK(cube.comps.front() == low(f5, {f5.one(), f5.from_int(3), f5.from_int(3)}));
}
