#pragma once

#include <string>
#include <vector>

#include "portraits/circle.hpp"
#include "portraits/portrait.hpp"

namespace portraits {

enum class RealizationCase {
    Case1, // even orbit period
    Case2, // odd period, two rays of period p
    Case3, // odd period, one ray of period p and two of period 2p
    Case4, // odd period, two rays of period 2p
};

std::string to_string(RealizationCase c);

struct RealizationWitness {
    OrbitPortrait portrait;
    Angle witness_angle;
    std::vector<CircleArc> admissible_set; // disjoint open pieces, ccw from t-
    RealizationCase case_id;
};

/// t lies in the characteristic arc of P.
bool necessary_condition(const OrbitPortrait& portrait, const Angle& t);

/// Throws PreconditionViolated for trivial portraits.
RealizationCase realization_case(const OrbitPortrait& portrait);

/// Parameter angles for which P is realized, as the pieces left after cutting
/// every short periodic angle out of the characteristic arc. In Case 4 the
/// sub-arcs next to t- and t+ in which a period-p ray joins the orbit are
/// removed first.
std::vector<CircleArc> admissible_set(const OrbitPortrait& portrait);

/// Simplest rational in the largest piece; ties go to the first piece.
Angle choose_witness(const std::vector<CircleArc>& pieces);

/// Picks a witness parameter angle and confirms through portrait_at that P
/// is realized there. Throws RealizationFailed otherwise.
RealizationWitness realize(const OrbitPortrait& portrait);

} // namespace portraits
