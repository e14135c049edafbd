#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "portraits/circle.hpp"
#include "portraits/portrait.hpp"

namespace portraits {

/// Angles of exact period n under -d, sorted.
std::vector<Angle> periodic_angles(int d, std::size_t n);

/// periodic_angles(d, n) split into orbits; each orbit starts at its
/// smallest angle and follows -d. Orbits are sorted by first angle.
std::vector<std::vector<Angle>> cycles(int d, std::size_t n);

/// All angles of period 1..max_n, sorted.
std::vector<Angle> periodic_angles_up_to(int d, std::size_t max_n);

/// Periodic angles of period <= max_n with -d successor indices, in a form
/// the catalog kernel can label without big-integer arithmetic.
struct PeriodicUniverse {
    int degree = 2;
    std::size_t max_period = 0;
    std::vector<Angle> angles;        // sorted
    std::vector<std::size_t> next;    // index of -d * angles[i]
    std::vector<std::size_t> period;
    std::vector<long long> num;       // angles[i] = num[i] / den[i]
    std::vector<long long> den;

    static PeriodicUniverse build(int d, std::size_t max_n);
};

enum class SampleRule {
    Simplest, // smallest-denominator rational in the gap
    Midpoint,
};

struct CatalogEntry {
    OrbitPortrait portrait; // canonical form
    PortraitClass cls;
    CharacteristicArc char_arc;
    std::vector<Angle> witnesses;            // sampled t where it appeared
    std::vector<CircleArc> witness_intervals; // the sweep gap of each witness
};

struct CatalogStats {
    std::size_t event_angles = 0;
    std::size_t samples = 0;
    std::size_t max_odd_class_size = 0; // over every class of odd orbit period seen
};

struct Catalog {
    int degree = 2;
    std::size_t max_period = 0;
    std::vector<CatalogEntry> entries; // sorted by period, then angles
    CatalogStats stats;
};

struct CatalogOptions {
    SampleRule rule = SampleRule::Simplest;
    int workers = 0; // 0 leaves the OpenMP default
};

/// Parameter-angle sweep: one sample per gap between consecutive periodic
/// angles of period <= 2N, non-trivial portraits of period <= N collected
/// and deduplicated. The OpenMP kernel; output does not depend on workers.
Catalog build_catalog(int d, std::size_t max_period, const CatalogOptions& opts = {});

/// Serial sweep calling portrait_at directly. Kept as the reference the
/// parallel kernel is tested against.
Catalog build_catalog_reference(int d, std::size_t max_period, SampleRule rule = SampleRule::Simplest);

/// The gaps swept for (d, N), in counter-clockwise order starting after 0.
std::vector<CircleArc> sweep_intervals(int d, std::size_t max_period);
Angle sample_in(const CircleArc& gap, SampleRule rule);

struct CatalogViolation {
    std::size_t entry;
    std::string portrait;
    std::string reason;
};

/// Re-checks every entry against the classification theorem.
std::vector<CatalogViolation> verify_catalog_against_theorem(const Catalog& cat);

extern const char* const tool_version;

/// JSON Lines: header {"degree","max_period","tool_version"}, then one
/// {"portrait","class","char_arc","witnesses"} object per entry.
void write_catalog_jsonl(const Catalog& cat, std::ostream& out);
std::string catalog_jsonl(const Catalog& cat);

} // namespace portraits
