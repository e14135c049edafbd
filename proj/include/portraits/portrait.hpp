#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "portraits/circle.hpp"

namespace portraits {

/// Ordered collection [A_1, ..., A_p] of angle sets for a degree-d
/// anti-polynomial. Set j is expected to map onto set j+1 (mod p) under
/// theta -> -d theta; that and every other axiom is checked by
/// validate_formal, not by the constructor.
///
/// Indices are 0-based in the API and 1-based in all text I/O.
class OrbitPortrait {
public:
    OrbitPortrait(int degree, std::vector<AngleSet> sets);

    int degree() const noexcept { return degree_; }
    std::size_t period() const noexcept { return sets_.size(); }
    const AngleSet& set(std::size_t j) const { return sets_.at(j % sets_.size()); }
    const std::vector<AngleSet>& sets() const noexcept { return sets_; }

    bool is_trivial() const;

    /// All angles of all sets, sorted.
    std::vector<Angle> all_angles() const;

    /// Same orbit, relabelled so that set k becomes the first one.
    OrbitPortrait rotated(std::size_t k) const;

    friend bool operator==(const OrbitPortrait&, const OrbitPortrait&) = default;

private:
    int degree_;
    std::vector<AngleSet> sets_;
};

enum class Condition { C1, C2, C3, C4, C5, Cyclic };

std::string to_string(Condition c);

struct Violation {
    Condition condition;
    std::string detail;
};

struct ValidationReport {
    bool valid = true;
    bool trivial = false;
    std::vector<Violation> violations;

    bool has(Condition c) const;
};

/// Checks every axiom of a formal orbit portrait and reports every failure.
///
///  C1  every angle rational and periodic under -d
///  C2  -d maps A_j bijectively onto A_{j+1}, reversing cyclic order
///  C3  each A_j fits in an arc shorter than 1/d
///  C4  translates A_i + k/d are pairwise unlinked and unlinked from every A_m
///  C5  ray periods follow the even/odd period pattern
///  Cyclic  the p sets are pairwise disjoint (p distinct orbit points)
///
/// Trivial portraits (one angle per set) are accepted when they satisfy the
/// applicable conditions; `trivial` is set so callers can refuse them.
ValidationReport validate_formal(const OrbitPortrait& portrait);

/// Longest complementary arc of A_j (length > 1 - 1/d). Throws NoSuchArc for
/// singleton sets.
CircleArc critical_arc(const OrbitPortrait& portrait, std::size_t j);

/// Complementary arc of A_j covered d times by the critical arc of A_{j-1}.
CircleArc critical_value_arc(const OrbitPortrait& portrait, std::size_t j);

struct CharacteristicArc {
    CircleArc arc;
    std::size_t owner; // 0-based index of the set whose complementary arc it is
};

/// Unique shortest complementary arc over all sets. Verifies that it is the
/// critical value arc of its owner and strictly inside every other critical
/// value arc. Throws NonUniqueMinimum on a tie and Unclassifiable if the
/// verification fails.
CharacteristicArc characteristic_arc(const OrbitPortrait& portrait);

/// Shortest complementary arc without the critical-value-arc verification;
/// usable on unvalidated input. Throws NoSuchArc / NonUniqueMinimum.
CharacteristicArc shortest_complementary_arc(const OrbitPortrait& portrait);

struct PortraitClass {
    enum class Kind {
        Trivial,
        EvenPeriod,
        OddTwoRaysPeriodP,
        OddTwoRaysPeriod2P,
        OddThreeRaysMixed,
    };

    Kind kind = Kind::Trivial;
    std::size_t ray_period = 0;
    bool transitive = false; // meaningful for EvenPeriod only

    std::string name() const;
    std::string str() const; // name plus the even-period parameters

    friend bool operator==(const PortraitClass&, const PortraitClass&) = default;
};

/// Taxonomy of a valid portrait. Throws Unclassifiable when the input breaks
/// the classification theorem.
PortraitClass classify(const OrbitPortrait& portrait);

struct MixedGeometryReport {
    Angle t_minus;
    Angle t_mid; // the angle of period p
    Angle t_plus;
    CharacteristicArc characteristic;
    Rational shorter_component_length;
    Rational characteristic_length;

    bool periods_ok = false;     // (i) characteristic angles have periods p and 2p
    bool inside_shorter = false; // (ii) t_mid lies in the shorter component
    bool length_identity = false; // (iii) shorter = (1 + d^p) * characteristic

    bool ok() const { return periods_ok && inside_shorter && length_identity; }
};

/// Geometry of a three-ray odd-period portrait, evaluated on the owner set of
/// the characteristic arc. Requires odd p and, in every set, one angle of
/// period p and two of period 2p (PreconditionViolated otherwise).
MixedGeometryReport check_mixed_geometry(const OrbitPortrait& portrait);

/// Throws GeometryViolation naming the first failed clause.
void require_mixed_geometry(const MixedGeometryReport& report);

/// Grammar: sets separated by ';', each "{a/b,c/d,...}"; whitespace ignored.
/// The sets are read as a collection: when -d cycles through all of them,
/// they are relabelled in orbit order starting from the first one listed.
/// Otherwise they are kept in the written order.
OrbitPortrait parse_portrait(std::string_view text, int degree);
std::string format_portrait(const OrbitPortrait& portrait);

/// Rotation of the orbit used for deduplication: the owner of the
/// characteristic arc first; trivial or degenerate portraits fall back to
/// the lexicographically smallest rotation.
OrbitPortrait canonical_form(const OrbitPortrait& portrait);

} // namespace portraits
