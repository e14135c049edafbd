#include <doctest.h>

#include "portraits/enumeration.hpp"
#include "portraits/errors.hpp"
#include "portraits/itinerary.hpp"
#include "portraits/realization.hpp"

using namespace portraits;

namespace {

const char* const ex2 = "{3/7,4/7};{1/7,6/7};{2/7,5/7}";
const char* const ex4 = "{3/7,4/9,4/7};{1/7,1/9,6/7};{5/7,7/9,2/7}";

OrbitPortrait P(const char* s, int d = 2) { return parse_portrait(s, d); }

bool appears(const OrbitPortrait& p, const Angle& t) {
    PortraitAtOptions opts;
    opts.max_ray_period = std::max(2 * p.period(), period(p.set(0)[0], p.degree()));
    auto found = portrait_at(t, p.degree(), p.period(), opts);
    return std::find(found.begin(), found.end(), canonical_form(p)) != found.end();
}

// Hull of the admissible pieces, from the first start to the last end.
CircleArc hull(const std::vector<CircleArc>& pieces) {
    return CircleArc(pieces.front().start(), pieces.back().end());
}

} // namespace

TEST_CASE("necessary condition") {
    CHECK(necessary_condition(P(ex2), Angle(1, 2)));
    CHECK_FALSE(necessary_condition(P(ex2), Angle(1, 5)));
    CHECK_FALSE(necessary_condition(P(ex2), Angle(3, 7)));
}

TEST_CASE("realization cases") {
    CHECK(realization_case(P("{1/5,4/5};{2/5,3/5}")) == RealizationCase::Case1);
    CHECK(realization_case(P("{1/3,2/3}")) == RealizationCase::Case2);
    CHECK(realization_case(P(ex4)) == RealizationCase::Case3);
    CHECK(realization_case(P(ex2)) == RealizationCase::Case4);
    CHECK_THROWS_AS(realization_case(P("{1/3}")), PreconditionViolated);
}

TEST_CASE("admissible set of example 2 is (4/9,5/9) minus short-period points") {
    std::vector<CircleArc> s = admissible_set(P(ex2));
    REQUIRE_FALSE(s.empty());
    CHECK(hull(s) == CircleArc(Angle(4, 9), Angle(5, 9)));
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        // Cut points are periodic of period <= 6.
        CHECK(s[i].end() == s[i + 1].start());
        CHECK(is_periodic(s[i].end(), 2));
        CHECK(period(s[i].end(), 2) <= 6);
    }
}

TEST_CASE("admissible set of Case 2 and Case 3 portraits") {
    std::vector<CircleArc> s2 = admissible_set(P("{1/3,2/3}"));
    CHECK(hull(s2) == CircleArc(Angle(1, 3), Angle(2, 3)));
    std::vector<CircleArc> s4 = admissible_set(P(ex4));
    CHECK(hull(s4) == CircleArc(Angle(3, 7), Angle(4, 9)));
    for (const CircleArc& a : s4) {
        CHECK(a.subset_of(CircleArc(Angle(3, 7), Angle(4, 9))));
    }
}

TEST_CASE("realize examples") {
    RealizationWitness w2 = realize(P(ex2));
    CHECK(w2.witness_angle == Angle(1, 2));
    CHECK(w2.case_id == RealizationCase::Case4);

    RealizationWitness w1 = realize(P("{1/3,2/3}"));
    CHECK(w1.witness_angle == Angle(1, 2));
    CHECK(w1.case_id == RealizationCase::Case2);

    RealizationWitness w4 = realize(P(ex4));
    CHECK(w4.case_id == RealizationCase::Case3);
    CHECK(CircleArc(Angle(3, 7), Angle(4, 9)).contains(w4.witness_angle));
    // The parameter angle quoted for example 4 realizes it too.
    CHECK(appears(P(ex4), Angle(13, 30)));

    CHECK_THROWS_AS(realize(P("{1/5,2/5}")), PreconditionViolated);
}

TEST_CASE("witness choice rule") {
    std::vector<CircleArc> pieces{CircleArc(Angle(1, 10), Angle(2, 10)), CircleArc(Angle(2, 10), Angle(4, 10)),
                                  CircleArc(Angle(4, 10), Angle(6, 10))};
    // Two largest pieces of length 1/5; the first one wins.
    CHECK(choose_witness(pieces) == Angle(1, 3));
    CHECK_THROWS_AS(choose_witness({}), RealizationFailed);
}

TEST_CASE("Case 4 wake structure around example 2") {
    OrbitPortrait two_ray = P(ex2);
    OrbitPortrait three_ray = P(ex4);
    // Inside (4/9,5/9): the two-ray portrait, and never the three-ray one.
    for (const Angle& t : {Angle(1, 2), Angle(23, 45), Angle(83, 170)}) {
        CAPTURE(t.str());
        CHECK(appears(two_ray, t));
        CHECK_FALSE(appears(three_ray, t));
    }
    // Inside (3/7,4/9): the three-ray portrait instead.
    for (const Angle& t : {Angle(13, 30), Angle(7, 16)}) {
        CAPTURE(t.str());
        CHECK(appears(three_ray, t));
        CHECK_FALSE(appears(two_ray, t));
    }
    // Mirror side (5/9,4/7): the mirror image of the three-ray portrait.
    CHECK(appears(P("{3/7,5/9,4/7};{1/7,8/9,6/7};{2/9,2/7,5/7}"), Angle(9, 16)));
}

TEST_CASE("property: every catalog portrait is realized inside its admissible set") {
    for (auto [d, n] : {std::pair{2, 4}, std::pair{3, 2}}) {
        for (const CatalogEntry& e : build_catalog(d, static_cast<std::size_t>(n)).entries) {
            CAPTURE(format_portrait(e.portrait));
            RealizationWitness w = realize(e.portrait);
            CHECK(necessary_condition(e.portrait, w.witness_angle));
            bool inside = false;
            for (const CircleArc& a : w.admissible_set) {
                inside = inside || a.contains(w.witness_angle);
                CHECK(a.subset_of(e.char_arc.arc));
            }
            CHECK(inside);
        }
    }
}

TEST_CASE("property: sampled admissible parameters make adjacent rays co-land") {
    for (auto [d, n] : {std::pair{2, 4}, std::pair{3, 2}}) {
        for (const CatalogEntry& e : build_catalog(d, static_cast<std::size_t>(n)).entries) {
            CAPTURE(format_portrait(e.portrait));
            std::vector<CircleArc> pieces = admissible_set(e.portrait);
            // A few samples: the simplest and the midpoint of the first, the
            // middle and the last piece.
            std::vector<Angle> samples;
            for (std::size_t k : {std::size_t{0}, pieces.size() / 2, pieces.size() - 1}) {
                samples.push_back(simplest_angle_in(pieces[k]));
                samples.push_back(midpoint(pieces[k]));
            }
            for (const Angle& t : samples) {
                for (const AngleSet& s : e.portrait.sets()) {
                    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
                        CHECK(co_land(s[i], s[i + 1], t, d));
                    }
                }
            }
        }
    }
}
