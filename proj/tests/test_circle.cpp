#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "portraits/circle.hpp"
#include "portraits/errors.hpp"

using namespace portraits;

TEST_CASE("angles are stored reduced and modulo one") {
    Angle a(6, 14);
    CHECK(a.num() == 3);
    CHECK(a.den() == 7);
    CHECK(Angle(10, 7) == Angle(3, 7));
    CHECK(Angle(-1, 3) == Angle(2, 3));
    CHECK(Angle(5, 5).is_zero());
    CHECK(Angle(5, 5).str() == "0");
    CHECK_THROWS_AS(Angle(1, 0), std::invalid_argument);
}

TEST_CASE("angle parsing") {
    CHECK(Angle::parse("3/7") == Angle(3, 7));
    CHECK(Angle::parse(" 0 ") == Angle());
    CHECK(Angle::parse("4/8").str() == "1/2");
    CHECK_THROWS_AS(Angle::parse("3/"), ParseError);
    CHECK_THROWS_AS(Angle::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Angle::parse("a/3"), ParseError);
    try {
        Angle::parse("3/7x");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("map_neg_d") {
    CHECK(map_neg_d(Angle(), 2) == Angle());
    CHECK(map_neg_d(Angle(1, 3), 2) == Angle(1, 3));
    CHECK(map_neg_d(Angle(3, 7), 2) == Angle(1, 7));
    CHECK_THROWS_AS(map_neg_d(Angle(1, 3), 1), std::invalid_argument);
}

TEST_CASE("angle_class and period") {
    CHECK(angle_class(Angle(1, 5), 2) == AngleClass::Periodic);
    CHECK(angle_class(Angle(1, 6), 2) == AngleClass::Preperiodic);
    CHECK(angle_class(Angle(1, 2), 3) == AngleClass::Periodic);
    CHECK(angle_class(Angle(), 7) == AngleClass::Periodic);
    CHECK(period(Angle(4, 9), 2) == 3);
    CHECK(period(Angle(3, 7), 2) == 6);
    CHECK(period(Angle(), 5) == 1);
    CHECK_THROWS_AS(period(Angle(1, 6), 2), NotPeriodic);
    CHECK_THROWS_AS(orbit(Angle(1, 4), 2), NotPeriodic);
}

TEST_CASE("orbit examples") {
    CHECK(orbit(Angle(1, 5), 2) == std::vector<Angle>{Angle(1, 5), Angle(3, 5), Angle(4, 5), Angle(2, 5)});
    CHECK(orbit(Angle(1, 9), 2) == std::vector<Angle>{Angle(1, 9), Angle(7, 9), Angle(4, 9)});
    CHECK(orbit(Angle(), 2) == std::vector<Angle>{Angle()});
}

TEST_CASE("arc containment is open and exact") {
    CircleArc arc(Angle(3, 7), Angle(4, 9));
    CHECK(arc_contains(arc, Angle(13, 30)));
    CHECK_FALSE(arc_contains(arc, Angle(3, 7)));
    CHECK_FALSE(arc_contains(arc, Angle(4, 9)));
    CHECK(arc_contains(CircleArc(Angle(2, 3), Angle(1, 3)), Angle()));
    CHECK(arc.length() == Rational(1, 63));
    CHECK_THROWS_AS(CircleArc(Angle(1, 3), Angle(1, 3)), std::invalid_argument);
    CHECK(CircleArc::parse("(3/7, 4/9)") == arc);
    CHECK_THROWS_AS(CircleArc::parse("(1/3,1/3)"), ParseError);
    CHECK_THROWS_AS(CircleArc::parse("1/3,2/3)"), ParseError);
}

TEST_CASE("subarc relations") {
    CircleArc outer(Angle(3, 7), Angle(4, 7));
    CHECK(CircleArc(Angle(3, 7), Angle(4, 9)).strictly_inside(outer));
    CHECK(CircleArc(Angle(4, 9), Angle(5, 9)).strictly_inside(outer));
    CHECK_FALSE(outer.strictly_inside(outer));
    CHECK(outer.subset_of(outer));
    CHECK_FALSE(CircleArc(Angle(4, 7), Angle(3, 7)).subset_of(outer));
    CHECK(CircleArc(Angle(9, 10), Angle(1, 10)).subset_of(CircleArc(Angle(4, 5), Angle(1, 5))));
}

TEST_CASE("unlinked examples") {
    CHECK(unlinked(AngleSet{Angle(1, 5), Angle(4, 5)}, AngleSet{Angle(2, 5), Angle(3, 5)}));
    CHECK_FALSE(unlinked(AngleSet{Angle(), Angle(1, 2)}, AngleSet{Angle(1, 4), Angle(3, 4)}));
    CHECK(unlinked(AngleSet{Angle(1, 9), Angle(8, 9)}, AngleSet{Angle(4, 9), Angle(5, 9)}));
    CHECK_THROWS_AS(unlinked(AngleSet{Angle(1, 3)}, AngleSet{Angle(1, 3), Angle(2, 3)}), SetsIntersect);
}

TEST_CASE("angle sets") {
    AngleSet s{Angle(4, 7), Angle(3, 7), Angle(4, 9)};
    CHECK(s.str() == "{3/7,4/9,4/7}");
    auto arcs = s.complementary_arcs();
    REQUIRE(arcs.size() == 3);
    CHECK(arcs[2] == CircleArc(Angle(4, 7), Angle(3, 7)));
    CHECK(AngleSet{Angle(1, 3)}.complementary_arcs().empty());
    CHECK(s.rotated(Angle(1, 2)).contains(Angle(1, 14)));
}

TEST_CASE("simplest angle in an arc") {
    CHECK(simplest_angle_in(CircleArc(Angle(3, 7), Angle(4, 7))) == Angle(1, 2));
    CHECK(simplest_angle_in(CircleArc(Angle(3, 7), Angle(4, 9))) == Angle(7, 16));
    CHECK(simplest_angle_in(CircleArc(Angle(2, 3), Angle(1, 3))) == Angle());
    CHECK(simplest_angle_in(CircleArc(Angle(7, 9), Angle(1, 7))) == Angle());
    CHECK(midpoint(CircleArc(Angle(3, 4), Angle(1, 4))) == Angle());
}

// ---- properties with seeded generators ----

TEST_CASE("property: map_neg_d agrees with machine arithmetic and keeps periodic angles periodic") {
    std::mt19937_64 rng(0x5eed01);
    for (int trial = 0; trial < 2000; ++trial) {
        int d = 2 + static_cast<int>(rng() % 4);
        oracle::Frac f = oracle::random_frac(rng, 500);
        Angle a = oracle::to_angle(f);
        CHECK(oracle::to_frac(map_neg_d(a, d)) == oracle::neg_d(f, d));
        if (angle_class(a, d) == AngleClass::Periodic) {
            CHECK(angle_class(map_neg_d(a, d), d) == AngleClass::Periodic);
        }
    }
}

TEST_CASE("property: period is constant along orbits and matches brute force (denominators <= 200)") {
    for (int d : {2, 3}) {
        for (long long den = 1; den <= 200; ++den) {
            for (long long num = 0; num < den; ++num) {
                oracle::Frac f = oracle::reduce(num, den);
                if (f.d != den) {
                    continue;
                }
                Angle a(num, den);
                if (!is_periodic(a, d)) {
                    continue;
                }
                std::size_t q = period(a, d);
                REQUIRE(q == oracle::period_brute(f, d));
                REQUIRE(period(map_neg_d(a, d), d) == q);
                REQUIRE(orbit(a, d).size() == q);
            }
        }
    }
}

TEST_CASE("property: (-d)^n theta = theta forces (d^n -+ 1) theta integral") {
    for (int d : {2, 3}) {
        long long dn = 1;
        for (int n = 1; n <= 6; ++n) {
            dn *= d;
            long long m = n % 2 == 0 ? dn - 1 : dn + 1;
            for (long long den = 1; den <= dn + 1; ++den) {
                for (long long num = 0; num < den; ++num) {
                    if (std::gcd(num, den) != 1 && num != 0) {
                        continue;
                    }
                    if (num == 0 && den != 1) {
                        continue;
                    }
                    Angle a(num, den);
                    if (iterate_neg_d(a, d, static_cast<std::size_t>(n)) == a) {
                        REQUIRE((m * num) % den == 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("property: unlinked matches the four-point alternation oracle") {
    std::mt19937_64 rng(0x5eed02);
    int checked = 0;
    while (checked < 1500) {
        std::vector<oracle::Frac> a, b;
        std::vector<Angle> aa, bb;
        std::size_t na = 1 + rng() % 4, nb = 1 + rng() % 4;
        for (std::size_t i = 0; i < na; ++i) {
            a.push_back(oracle::random_frac(rng, 30));
        }
        for (std::size_t i = 0; i < nb; ++i) {
            b.push_back(oracle::random_frac(rng, 30));
        }
        for (auto f : a) aa.push_back(oracle::to_angle(f));
        for (auto f : b) bb.push_back(oracle::to_angle(f));
        AngleSet sa(aa), sb(bb);
        if (sa.intersects(sb)) {
            continue;
        }
        bool expected = !oracle::alternate(a, b);
        CHECK(unlinked(sa, sb) == expected);
        CHECK(unlinked(sb, sa) == expected);
        Angle shift = oracle::to_angle(oracle::random_frac(rng, 40));
        CHECK(unlinked(sa.rotated(shift), sb.rotated(shift)) == expected);
        ++checked;
    }
}

TEST_CASE("property: arc lengths of three ccw-ordered angles sum to one") {
    std::mt19937_64 rng(0x5eed03);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Angle> pts;
        while (pts.size() < 3) {
            Angle a = oracle::to_angle(oracle::random_frac(rng, 100));
            if (std::find(pts.begin(), pts.end(), a) == pts.end()) {
                pts.push_back(a);
            }
        }
        std::sort(pts.begin(), pts.end());
        Rational total = CircleArc(pts[0], pts[1]).length() + CircleArc(pts[1], pts[2]).length() +
                         CircleArc(pts[2], pts[0]).length();
        CHECK(total == 1);
    }
}

TEST_CASE("property: arc_contains agrees with the oracle; simplest angle is inside and minimal") {
    std::mt19937_64 rng(0x5eed04);
    for (int trial = 0; trial < 500; ++trial) {
        oracle::Frac a = oracle::random_frac(rng, 60), b = oracle::random_frac(rng, 60);
        if (a == b) {
            continue;
        }
        CircleArc arc(oracle::to_angle(a), oracle::to_angle(b));
        for (int k = 0; k < 10; ++k) {
            oracle::Frac x = oracle::random_frac(rng, 60);
            CHECK(arc.contains(oracle::to_angle(x)) == oracle::in_arc(a, b, x));
        }
        Angle s = simplest_angle_in(arc);
        REQUIRE(arc.contains(s));
        // No smaller denominator fits in the arc.
        for (long long den = 1; den < static_cast<long long>(s.den()); ++den) {
            for (long long num = 0; num < den; ++num) {
                CHECK_FALSE(oracle::in_arc(a, b, oracle::Frac{num, den}));
            }
        }
    }
}
