#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncl/poly.hpp"
#include "ncl/ratfun.hpp"
#include "ncl/rational.hpp"
#include "ncl/rng.hpp"
#include "ncl/series.hpp"

using namespace ncl;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("rational field axioms on random samples") {
    Rng rng(2024);
    for (int it = 0; it < 200; ++it) {
        Rational a = rng.rational(20, 9), b = rng.rational(20, 9), c = rng.rational(20, 9);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("poly division and gcd") {
    Poly z = Poly::var();
    Poly a = (z * z - Poly(Rational(1)));  // z^2 - 1
    Poly b = (z - Poly(Rational(1)));      // z - 1
    auto [q, r] = Poly::divmod(a, b);
    CHECK(r.is_zero());
    CHECK(q == z + Poly(Rational(1)));
    CHECK(Poly::gcd(a, b) == b.monic());

    Rng rng(7);
    for (int it = 0; it < 60; ++it) {
        Poly f = rng.poly(4), g = rng.nonzero_poly(3);
        auto [qq, rr] = Poly::divmod(f, g);
        CHECK(qq * g + rr == f);
        CHECK((rr.is_zero() || rr.degree() < g.degree()));
    }
}

TEST_CASE("ratfun normalization") {
    Poly z = Poly::var();
    // (z^2 - 1)/(z - 1) -> z + 1
    RatFun f(z * z - Poly(Rational(1)), z - Poly(Rational(1)));
    CHECK(f == RatFun(z + Poly(Rational(1))));
    // 0/(z - 3) -> 0/1
    RatFun g(Poly(), z - Poly(Rational(3)));
    CHECK(g.is_zero());
    CHECK(g.den().is_one());
    // (2z)/4 -> (z/2)/1
    RatFun h(z.scaled(Rational(2)), Poly(Rational(4)));
    CHECK(h.den().is_one());
    CHECK(h.num() == z.scaled(Rational(1, 2)));
    CHECK_THROWS_AS(RatFun(z, Poly()), std::domain_error);
}

TEST_CASE("ratfun evaluation, derivative, shift") {
    RatFun f = simple_pole(Rational(1));  // 1/(z-1)
    CHECK(f.eval(Rational(3)) == Rational(1, 2));
    CHECK_THROWS_AS(f.eval(Rational(1)), PoleError);

    RatFun z2 = RatFun::var() * RatFun::var();
    CHECK(z2.eval(Rational(-2)) == Rational(4));

    // d/dz 1/(z-a) = -1/(z-a)^2
    RatFun fa = simple_pole(Rational(5));
    CHECK(fa.derivative() == -(fa * fa));
    CHECK(RatFun(Rational(5)).derivative().is_zero());
    RatFun z3 = RatFun::var() * RatFun::var() * RatFun::var();
    CHECK(z3.derivative() == RatFun(Rational(3)) * RatFun::var() * RatFun::var());

    // shifts
    RatFun invz(Poly(Rational(1)), Poly::var());
    CHECK(invz.shifted(Rational(1)) == simple_pole(Rational(-1)));  // 1/(z+1)
    CHECK(simple_pole(Rational(1)).shifted(Rational(1)) == invz);   // 1/z
    Poly z = Poly::var();
    CHECK(RatFun(z * z).shifted(Rational(-1)) ==
          RatFun(z * z - z.scaled(Rational(2)) + Poly(Rational(1))));
}

TEST_CASE("ratfun random-sample identities") {
    Rng rng(99);
    for (int it = 0; it < 80; ++it) {
        RatFun a = rng.ratfun(), b = rng.ratfun();
        CHECK(a + b - b == a);  // normalization is canonical
        Rational c = rng.rational(4, 2);
        CHECK(a.shifted(c).shifted(-c) == a);
        CHECK(a.shifted(c).derivative() == a.derivative().shifted(c));
    }
}

TEST_CASE("truncated series inversion") {
    // s = 1 - t, N = 3 -> 1 + t + t^2 + t^3
    TruncSeries<Rational> s(3, Rational(0));
    s.at(0) = Rational(1);
    s.at(1) = Rational(-1);
    TruncSeries<Rational> r = s.inverse();
    for (int k = 0; k <= 3; ++k) CHECK(r.at(k) == Rational(1));

    // s = 1, N = 5 -> 1
    auto one5 = TruncSeries<Rational>::one(5, Rational(0));
    CHECK(one5.inverse() == one5);

    // s = 1 + 2t, N = 2 -> 1 - 2t + 4t^2
    TruncSeries<Rational> u(2, Rational(0));
    u.at(0) = Rational(1);
    u.at(1) = Rational(2);
    auto ui = u.inverse();
    CHECK(ui.at(0) == Rational(1));
    CHECK(ui.at(1) == Rational(-2));
    CHECK(ui.at(2) == Rational(4));

    TruncSeries<Rational> zc(2, Rational(0));
    CHECK_THROWS_AS(zc.inverse(), std::domain_error);
}

TEST_CASE("series inverse is two-sided on random samples") {
    Rng rng(11);
    for (int it = 0; it < 40; ++it) {
        TruncSeries<RatFun> s(4, RatFun());
        s.at(0) = RatFun(rng.nonzero_rational());
        for (int k = 1; k <= 4; ++k) s.at(k) = rng.ratfun(1);
        auto inv = s.inverse();
        auto one = TruncSeries<RatFun>::one(4, RatFun());
        CHECK(s * inv == one);
        CHECK(inv * s == one);
    }
}
