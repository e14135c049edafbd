#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "portraits/circle.hpp"
#include "portraits/portrait.hpp"

namespace portraits {

/// The d preimages of the parameter angle t cut the circle into d open arcs
/// of length 1/d, labelled L_0..L_{d-1} counter-clockwise with 0 in L_0.
struct Partition {
    Angle parameter_angle;
    int degree = 2;
    std::vector<Angle> boundary;        // (j - t)/d, sorted
    std::vector<CircleArc> components;  // components[i] is L_i

    /// Label of theta, or -1 when theta is a boundary angle.
    int label(const Angle& theta) const;
};

/// Throws ZeroOnBoundary when t = 0.
Partition build_partition(const Angle& t, int d);

/// Eventually periodic symbol sequence in canonical form: the period is a
/// primitive word and the preperiod is as short as possible.
struct Itinerary {
    std::vector<int> preperiod;
    std::vector<int> period;

    /// Symbol at index n of the infinite sequence.
    int at(std::size_t n) const;

    /// "01(10)"; symbols are comma-separated when d > 10.
    std::string str() const;

    friend bool operator==(const Itinerary&, const Itinerary&) = default;
    friend auto operator<=>(const Itinerary&, const Itinerary&) = default;
};

/// Builds the canonical form from any (preperiod, period) description.
Itinerary make_itinerary(std::vector<int> preperiod, std::vector<int> period);

/// Throws HitsBoundary(n) when the n-th iterate of theta is a boundary angle.
Itinerary itinerary(const Angle& theta, const Partition& part);

/// Equality of itineraries at parameter angle t.
bool co_land(const Angle& theta1, const Angle& theta2, const Angle& t, int d);

/// Groups every periodic angle of period <= max_ray_period by itinerary at t.
/// Classes are sorted by their smallest angle. Throws
/// ParameterAngleTooPeriodic when t itself is such an angle.
std::vector<AngleSet> landing_classes(const Angle& t, int d, std::size_t max_ray_period);

struct PortraitAtOptions {
    bool include_trivial = false;
    std::size_t max_ray_period = 0; // 0 means 2 * max_period
};

/// Every portrait of orbit period <= max_period formed by the landing
/// classes at t, each in canonical form, sorted by period then angles.
std::vector<OrbitPortrait> portrait_at(const Angle& t, int d, std::size_t max_period,
                                       const PortraitAtOptions& opts = {});

/// Orders portraits by period, then lexicographically by their sets.
bool portrait_less(const OrbitPortrait& a, const OrbitPortrait& b);

/// Assembles portraits from itinerary classes. `words[i]` is the primitive
/// itinerary word of `angles[i]` (all angles periodic). Shared by
/// portrait_at and the catalog kernel.
std::vector<OrbitPortrait> portraits_from_words(int d, const std::vector<Angle>& angles,
                                                const std::vector<std::vector<int>>& words,
                                                std::size_t max_period, bool include_trivial);

} // namespace portraits
