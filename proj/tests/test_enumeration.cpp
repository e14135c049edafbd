#include <doctest.h>

#include <set>
#include <sstream>

#include <json.hpp>

#include "oracle.hpp"
#include "portraits/enumeration.hpp"
#include "portraits/realization.hpp"

using namespace portraits;

namespace {

std::set<std::string> names(const Catalog& c) {
    std::set<std::string> out;
    for (const CatalogEntry& e : c.entries) out.insert(format_portrait(e.portrait));
    return out;
}

std::string canon(const char* s, int d = 2) { return format_portrait(canonical_form(parse_portrait(s, d))); }

} // namespace

TEST_CASE("periodic angles examples") {
    CHECK(periodic_angles(2, 1) == std::vector<Angle>{Angle(), Angle(1, 3), Angle(2, 3)});
    CHECK(periodic_angles(2, 2).empty());
    CHECK(periodic_angles(2, 3) ==
          std::vector<Angle>{Angle(1, 9), Angle(2, 9), Angle(4, 9), Angle(5, 9), Angle(7, 9), Angle(8, 9)});
    CHECK(periodic_angles(2, 4).size() == 12);
    CHECK(periodic_angles(3, 1) == std::vector<Angle>{Angle(), Angle(1, 4), Angle(1, 2), Angle(3, 4)});

    auto c3 = cycles(2, 3);
    REQUIRE(c3.size() == 2);
    CHECK(c3[0] == std::vector<Angle>{Angle(1, 9), Angle(7, 9), Angle(4, 9)});
    CHECK(c3[1] == std::vector<Angle>{Angle(2, 9), Angle(5, 9), Angle(8, 9)});

    CHECK(periodic_angles_up_to(2, 3).size() == 9);
    CHECK_THROWS_AS(periodic_angles(1, 2), std::invalid_argument);
}

TEST_CASE("property: periodic_angles matches the Mobius count and a denominator scan") {
    for (int d : {2, 3, 4}) {
        for (std::size_t n = 1; n <= 8; ++n) {
            CAPTURE(d);
            CAPTURE(n);
            std::vector<Angle> got = periodic_angles(d, n);
            REQUIRE(static_cast<long long>(got.size()) == oracle::mobius_count(d, static_cast<long long>(n)));
            CHECK(std::is_sorted(got.begin(), got.end()));
            for (const Angle& a : got) {
                CHECK(period(a, d) == n);
            }
        }
        // Full scan only where it is cheap.
        for (std::size_t n = 1; n <= (d == 2 ? 6u : 3u); ++n) {
            long long max_den = 1;
            for (std::size_t i = 0; i < n; ++i) max_den *= d;
            std::vector<oracle::Frac> scan = oracle::periodic_by_scan(d, n, max_den + 1);
            std::vector<Angle> got = periodic_angles(d, n);
            REQUIRE(scan.size() == got.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                CHECK(oracle::to_frac(got[i]) == scan[i]);
            }
        }
    }
}

TEST_CASE("periodic universe successor table") {
    PeriodicUniverse u = PeriodicUniverse::build(2, 6);
    REQUIRE(u.angles.size() == periodic_angles_up_to(2, 6).size());
    for (std::size_t i = 0; i < u.angles.size(); ++i) {
        CHECK(u.angles[u.next[i]] == map_neg_d(u.angles[i], 2));
        CHECK(u.period[i] == period(u.angles[i], 2));
        CHECK(Angle(u.num[i], u.den[i]) == u.angles[i]);
    }
}

TEST_CASE("sweep intervals tile the circle") {
    std::vector<CircleArc> gaps = sweep_intervals(2, 3);
    CHECK(gaps.size() == periodic_angles_up_to(2, 6).size());
    Rational total = 0;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        total += gaps[i].length();
        CHECK(gaps[i].end() == gaps[(i + 1) % gaps.size()].start());
        CHECK(gaps[i].contains(sample_in(gaps[i], SampleRule::Simplest)));
        CHECK(gaps[i].contains(sample_in(gaps[i], SampleRule::Midpoint)));
    }
    CHECK(total == 1);
}

TEST_CASE("catalog examples") {
    Catalog c1 = build_catalog(2, 1);
    // Each gap between 0, 1/3 and 2/3 makes the other two fixed rays co-land
    // (the three arms related by the order-3 symmetry).
    CHECK(names(c1) == std::set<std::string>{"{0,1/3}", "{0,2/3}", "{1/3,2/3}"});
    CHECK(c1.stats.event_angles == 3);

    Catalog c3 = build_catalog(2, 3);
    std::set<std::string> n3 = names(c3);
    CHECK(n3.count(canon("{3/7,4/7};{1/7,6/7};{2/7,5/7}")));
    CHECK(n3.count(canon("{3/7,4/9,4/7};{1/7,1/9,6/7};{5/7,7/9,2/7}")));
    CHECK(n3.count(canon("{1/9,2/9};{4/9,5/9};{7/9,8/9}")) == 0);
    CHECK(c3.entries.size() == 24);
    CHECK(c3.stats.event_angles == 105);
    CHECK(c3.stats.max_odd_class_size == 3);
    CHECK(verify_catalog_against_theorem(c3).empty());

    for (std::size_t i = 0; i + 1 < c3.entries.size(); ++i) {
        CHECK(c3.entries[i].portrait.period() <= c3.entries[i + 1].portrait.period());
    }
}

TEST_CASE("catalog entries are canonical and carry consistent witnesses") {
    Catalog c = build_catalog(2, 4);
    for (const CatalogEntry& e : c.entries) {
        CAPTURE(format_portrait(e.portrait));
        CHECK(canonical_form(e.portrait) == e.portrait);
        REQUIRE(e.witnesses.size() == e.witness_intervals.size());
        REQUIRE_FALSE(e.witnesses.empty());
        for (std::size_t k = 0; k < e.witnesses.size(); ++k) {
            CHECK(e.witness_intervals[k].contains(e.witnesses[k]));
            CHECK(necessary_condition(e.portrait, e.witnesses[k]));
        }
    }
}

TEST_CASE("parallel kernel equals the serial reference") {
    for (auto [d, n] : {std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 2}}) {
        CAPTURE(d);
        CAPTURE(n);
        Catalog k = build_catalog(d, static_cast<std::size_t>(n));
        Catalog r = build_catalog_reference(d, static_cast<std::size_t>(n));
        CHECK(catalog_jsonl(k) == catalog_jsonl(r));
        CHECK(k.stats.samples == r.stats.samples);
        CHECK(k.stats.event_angles == r.stats.event_angles);
    }
}

TEST_CASE("sample rule does not change the set of portraits") {
    for (auto [d, n] : {std::pair{2, 4}, std::pair{3, 2}}) {
        CatalogOptions mid;
        mid.rule = SampleRule::Midpoint;
        CHECK(names(build_catalog(d, static_cast<std::size_t>(n))) ==
              names(build_catalog(d, static_cast<std::size_t>(n), mid)));
    }
}

TEST_CASE("output does not depend on the worker count") {
    CatalogOptions one, eight;
    one.workers = 1;
    eight.workers = 8;
    CHECK(catalog_jsonl(build_catalog(2, 4, one)) == catalog_jsonl(build_catalog(2, 4, eight)));
}

TEST_CASE("verification reports an injected bad entry") {
    Catalog c = build_catalog(2, 3);
    REQUIRE(verify_catalog_against_theorem(c).empty());

    Catalog bad_class = c;
    bad_class.entries[0].cls.kind = PortraitClass::Kind::OddThreeRaysMixed;
    auto v1 = verify_catalog_against_theorem(bad_class);
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].entry == 0);

    Catalog four_rays = c;
    four_rays.entries.push_back(four_rays.entries.back());
    four_rays.entries.back().portrait = parse_portrait("{1/9,2/9,4/9,5/9}", 2);
    auto v2 = verify_catalog_against_theorem(four_rays);
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].entry == c.entries.size());
    CHECK(v2[0].reason.find("C") != std::string::npos);
}

TEST_CASE("realized witnesses fall in the closure of a witness interval") {
    Catalog c = build_catalog(2, 4);
    for (const CatalogEntry& e : c.entries) {
        CAPTURE(format_portrait(e.portrait));
        Angle w = realize(e.portrait).witness_angle;
        bool hit = false;
        for (const CircleArc& g : e.witness_intervals) {
            hit = hit || g.contains(w) || g.start() == w || g.end() == w;
        }
        CHECK(hit);
    }
}

TEST_CASE("JSON lines output") {
    Catalog c = build_catalog(2, 3);
    std::istringstream in(catalog_jsonl(c));
    std::string line;
    REQUIRE(std::getline(in, line));
    auto header = nlohmann::json::parse(line);
    CHECK(header["degree"] == 2);
    CHECK(header["max_period"] == 3);
    CHECK(header["tool_version"] == tool_version);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        auto row = nlohmann::json::parse(line);
        OrbitPortrait p = parse_portrait(row["portrait"].get<std::string>(), 2);
        CHECK(p == c.entries[rows].portrait);
        CHECK(row["class"] == c.entries[rows].cls.str());
        CHECK(row["witnesses"].is_array());
        ++rows;
    }
    CHECK(rows == c.entries.size());
}
