#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "portraits/angle.hpp"

namespace portraits {

/// Open arc of R/Z traversed counter-clockwise from start to end.
class CircleArc {
public:
    CircleArc(Angle start, Angle end);

    /// "(a/b,c/d)"
    static CircleArc parse(std::string_view text);

    const Angle& start() const noexcept { return start_; }
    const Angle& end() const noexcept { return end_; }

    /// (end - start) mod 1, always in (0,1).
    Rational length() const { return ccw_distance(start_, end_); }

    bool contains(const Angle& theta) const;

    /// True when this arc is a subset of `outer` (endpoints may coincide).
    bool subset_of(const CircleArc& outer) const;
    bool strictly_inside(const CircleArc& outer) const {
        return subset_of(outer) && *this != outer;
    }

    std::string str() const;

    friend bool operator==(const CircleArc&, const CircleArc&) = default;

private:
    Angle start_;
    Angle end_;
};

bool arc_contains(const CircleArc& arc, const Angle& theta);

/// Nonempty finite set of angles kept in counter-clockwise order from 0.
class AngleSet {
public:
    explicit AngleSet(std::vector<Angle> angles);
    AngleSet(std::initializer_list<Angle> angles) : AngleSet(std::vector<Angle>(angles)) {}

    std::size_t size() const noexcept { return angles_.size(); }
    const Angle& operator[](std::size_t i) const { return angles_[i]; }
    auto begin() const noexcept { return angles_.begin(); }
    auto end() const noexcept { return angles_.end(); }
    const std::vector<Angle>& angles() const noexcept { return angles_; }

    bool contains(const Angle& theta) const;
    bool intersects(const AngleSet& other) const;

    /// The |A| open arcs between circularly consecutive members, starting with
    /// (a_0, a_1). Empty for a singleton.
    std::vector<CircleArc> complementary_arcs() const;

    AngleSet rotated(const Angle& shift) const;

    /// "{a/b,c/d,...}"
    std::string str() const;

    friend bool operator==(const AngleSet&, const AngleSet&) = default;
    friend auto operator<=>(const AngleSet& a, const AngleSet& b) {
        return a.angles_ <=> b.angles_;
    }

private:
    std::vector<Angle> angles_;
};

/// s1 and s2 lie in disjoint sub-intervals of the circle, i.e. their merged
/// circular sequence has at most two runs. Throws SetsIntersect unless the
/// sets are disjoint.
bool unlinked(const AngleSet& s1, const AngleSet& s2);

/// The rational with the smallest denominator strictly inside the arc.
Angle simplest_angle_in(const CircleArc& arc);

/// Exact midpoint of the arc.
Angle midpoint(const CircleArc& arc);

} // namespace portraits
