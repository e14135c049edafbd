#include "portraits/realization.hpp"

#include <algorithm>

#include "portraits/enumeration.hpp"
#include "portraits/errors.hpp"
#include "portraits/itinerary.hpp"

namespace portraits {

std::string to_string(RealizationCase c) {
    switch (c) {
    case RealizationCase::Case1: return "Case1";
    case RealizationCase::Case2: return "Case2";
    case RealizationCase::Case3: return "Case3";
    case RealizationCase::Case4: return "Case4";
    }
    return "?";
}

bool necessary_condition(const OrbitPortrait& portrait, const Angle& t) {
    return characteristic_arc(portrait).arc.contains(t);
}

RealizationCase realization_case(const OrbitPortrait& portrait) {
    switch (classify(portrait).kind) {
    case PortraitClass::Kind::EvenPeriod: return RealizationCase::Case1;
    case PortraitClass::Kind::OddTwoRaysPeriodP: return RealizationCase::Case2;
    case PortraitClass::Kind::OddThreeRaysMixed: return RealizationCase::Case3;
    case PortraitClass::Kind::OddTwoRaysPeriod2P: return RealizationCase::Case4;
    case PortraitClass::Kind::Trivial: break;
    }
    throw PreconditionViolated("trivial portraits have no characteristic arc to realize");
}

namespace {

// Ray bound that keeps every angle of P, and every angle that could join
// its orbit, inside the periodic universe.
std::size_t ray_bound(const OrbitPortrait& portrait) {
    return std::max(2 * portrait.period(), period(portrait.set(0)[0], portrait.degree()));
}

} // namespace

std::vector<CircleArc> admissible_set(const OrbitPortrait& portrait) {
    const int d = portrait.degree();
    const std::size_t p = portrait.period();
    RealizationCase kase = realization_case(portrait);
    const CircleArc ch = characteristic_arc(portrait).arc;
    const Rational len = ch.length();

    // Window (lo, hi) measured as ccw offsets from t-.
    Rational lo = 0;
    Rational hi = len;
    if (kase == RealizationCase::Case4) {
        // A period-p angle s splits off a mixed three-ray portrait exactly
        // when the piece between s and the nearer endpoint has length
        // len / (1 + d^p); that piece is where s co-lands with the orbit.
        const Rational piece = len / Rational(1 + boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(p)));
        for (const Angle& s : periodic_angles(d, p)) {
            if (!ch.contains(s)) {
                continue;
            }
            Rational offset = ccw_distance(ch.start(), s);
            if (offset == piece) {
                lo = std::max(lo, offset);
            }
            if (len - offset == piece) {
                hi = std::min(hi, offset);
            }
        }
    }
    if (lo >= hi) {
        return {};
    }

    std::vector<Rational> cuts{lo};
    for (const Angle& a : periodic_angles_up_to(d, ray_bound(portrait))) {
        if (!ch.contains(a)) {
            continue;
        }
        Rational offset = ccw_distance(ch.start(), a);
        if (offset > lo && offset < hi) {
            cuts.push_back(offset);
        }
    }
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());

    std::vector<CircleArc> pieces;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        pieces.emplace_back(Angle(ch.start().value() + cuts[i]), Angle(ch.start().value() + cuts[i + 1]));
    }
    return pieces;
}

Angle choose_witness(const std::vector<CircleArc>& pieces) {
    if (pieces.empty()) {
        throw RealizationFailed("admissible set is empty");
    }
    const CircleArc* best = &pieces.front();
    for (const CircleArc& piece : pieces) {
        if (piece.length() > best->length()) {
            best = &piece;
        }
    }
    return simplest_angle_in(*best);
}

RealizationWitness realize(const OrbitPortrait& portrait) {
    ValidationReport report = validate_formal(portrait);
    if (!report.valid || report.trivial) {
        throw PreconditionViolated("realize needs a valid non-trivial portrait");
    }
    RealizationCase kase = realization_case(portrait);
    std::vector<CircleArc> pieces = admissible_set(portrait);
    Angle witness = choose_witness(pieces);

    PortraitAtOptions opts;
    opts.max_ray_period = ray_bound(portrait);
    std::vector<OrbitPortrait> found = portrait_at(witness, portrait.degree(), portrait.period(), opts);
    OrbitPortrait target = canonical_form(portrait);
    if (std::find(found.begin(), found.end(), target) == found.end()) {
        throw RealizationFailed(format_portrait(portrait) + " does not appear at t = " + witness.str());
    }
    return RealizationWitness{portrait, witness, std::move(pieces), kase};
}

} // namespace portraits
