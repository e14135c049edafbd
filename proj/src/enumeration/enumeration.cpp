#include "portraits/enumeration.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>
#include <omp.h>

#include "portraits/errors.hpp"
#include "portraits/itinerary.hpp"

namespace portraits {

const char* const tool_version = "0.3.0";

std::vector<Angle> periodic_angles(int d, std::size_t n) {
    checked_degree(d);
    if (n == 0) {
        throw std::invalid_argument("period must be at least 1");
    }
    // (-d)^n theta = theta  <=>  ((-d)^n - 1) theta is an integer.
    BigInt dn = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(n));
    BigInt modulus = n % 2 == 0 ? BigInt(dn - 1) : BigInt(dn + 1);
    std::vector<Angle> out;
    for (BigInt k = 0; k < modulus; ++k) {
        Angle a(k, modulus);
        if (period(a, d) == n) {
            out.push_back(std::move(a));
        }
    }
    return out;
}

std::vector<std::vector<Angle>> cycles(int d, std::size_t n) {
    std::vector<std::vector<Angle>> out;
    std::vector<Angle> todo = periodic_angles(d, n);
    std::vector<bool> used(todo.size(), false);
    for (std::size_t i = 0; i < todo.size(); ++i) {
        if (used[i]) {
            continue;
        }
        std::vector<Angle> orb = orbit(todo[i], d);
        for (const Angle& a : orb) {
            used[std::lower_bound(todo.begin(), todo.end(), a) - todo.begin()] = true;
        }
        out.push_back(std::move(orb));
    }
    return out;
}

std::vector<Angle> periodic_angles_up_to(int d, std::size_t max_n) {
    std::vector<Angle> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::vector<Angle> level = periodic_angles(d, n);
        out.insert(out.end(), level.begin(), level.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

PeriodicUniverse PeriodicUniverse::build(int d, std::size_t max_n) {
    PeriodicUniverse u;
    u.degree = d;
    u.max_period = max_n;
    u.angles = periodic_angles_up_to(d, max_n);
    const BigInt limit = BigInt(1) << 40;
    for (const Angle& a : u.angles) {
        if (a.den() > limit) {
            throw std::overflow_error("periodic universe too large for the labelling kernel");
        }
        u.num.push_back(static_cast<long long>(a.num()));
        u.den.push_back(static_cast<long long>(a.den()));
        Angle image = map_neg_d(a, d);
        u.next.push_back(static_cast<std::size_t>(
            std::lower_bound(u.angles.begin(), u.angles.end(), image) - u.angles.begin()));
    }
    u.period.resize(u.angles.size(), 0);
    for (std::size_t i = 0; i < u.angles.size(); ++i) {
        std::size_t q = 1;
        for (std::size_t j = u.next[i]; j != i; j = u.next[j]) {
            ++q;
        }
        u.period[i] = q;
    }
    return u;
}

std::vector<CircleArc> sweep_intervals(int d, std::size_t max_period) {
    std::vector<Angle> events = periodic_angles_up_to(d, 2 * max_period);
    std::vector<CircleArc> gaps;
    gaps.reserve(events.size());
    for (std::size_t i = 0; i < events.size(); ++i) {
        gaps.emplace_back(events[i], events[(i + 1) % events.size()]);
    }
    return gaps;
}

Angle sample_in(const CircleArc& gap, SampleRule rule) {
    return rule == SampleRule::Midpoint ? midpoint(gap) : simplest_angle_in(gap);
}

namespace {

__extension__ using i128 = __int128;

std::vector<int> primitive_word(std::vector<int> word) {
    return make_itinerary({}, std::move(word)).period;
}

// Labels every universe angle at parameter t. The sample t is never an event
// angle, so no label is a boundary hit.
std::vector<int> label_universe(const PeriodicUniverse& u, const Angle& t) {
    std::vector<int> labels(u.angles.size());
    const BigInt limit = BigInt(1) << 62;
    if (t.den() < limit) {
        const i128 tn = static_cast<long long>(t.num());
        const i128 td = static_cast<long long>(t.den());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            i128 n = i128(u.degree) * u.num[i] * td + tn * u.den[i];
            i128 m = i128(u.den[i]) * td;
            labels[i] = static_cast<int>((n / m) % u.degree);
        }
        return labels;
    }
    Partition part = build_partition(t, u.degree);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        labels[i] = part.label(u.angles[i]);
    }
    return labels;
}

std::vector<OrbitPortrait> sample_kernel(const PeriodicUniverse& u, const Angle& t, std::size_t max_period) {
    std::vector<int> labels = label_universe(u, t);
    std::vector<std::vector<int>> words(u.angles.size());
    for (std::size_t i = 0; i < u.angles.size(); ++i) {
        std::vector<int> w;
        w.reserve(u.period[i]);
        for (std::size_t j = i, k = 0; k < u.period[i]; j = u.next[j], ++k) {
            w.push_back(labels[j]);
        }
        words[i] = primitive_word(std::move(w));
    }
    return portraits_from_words(u.degree, u.angles, words, max_period, false);
}

struct PortraitLess {
    bool operator()(const OrbitPortrait& a, const OrbitPortrait& b) const { return portrait_less(a, b); }
};

Catalog merge_samples(int d, std::size_t max_period, const std::vector<CircleArc>& gaps,
                      const std::vector<Angle>& samples, const std::vector<std::vector<OrbitPortrait>>& found) {
    Catalog cat;
    cat.degree = d;
    cat.max_period = max_period;
    cat.stats.event_angles = gaps.size();
    cat.stats.samples = samples.size();

    std::map<OrbitPortrait, CatalogEntry, PortraitLess> merged;
    for (std::size_t s = 0; s < samples.size(); ++s) {
        for (const OrbitPortrait& p : found[s]) {
            auto it = merged.find(p);
            if (it == merged.end()) {
                CatalogEntry entry{p, classify(p), characteristic_arc(p), {}, {}};
                it = merged.emplace(p, std::move(entry)).first;
            }
            it->second.witnesses.push_back(samples[s]);
            it->second.witness_intervals.push_back(gaps[s]);
        }
    }
    for (auto& [key, entry] : merged) {
        if (entry.portrait.period() % 2 == 1) {
            cat.stats.max_odd_class_size = std::max(cat.stats.max_odd_class_size, entry.portrait.set(0).size());
        }
        cat.entries.push_back(std::move(entry));
    }
    return cat;
}

} // namespace

Catalog build_catalog(int d, std::size_t max_period, const CatalogOptions& opts) {
    checked_degree(d);
    if (max_period == 0) {
        throw std::invalid_argument("max_period must be at least 1");
    }
    const PeriodicUniverse universe = PeriodicUniverse::build(d, 2 * max_period);
    std::vector<CircleArc> gaps;
    gaps.reserve(universe.angles.size());
    for (std::size_t i = 0; i < universe.angles.size(); ++i) {
        gaps.emplace_back(universe.angles[i], universe.angles[(i + 1) % universe.angles.size()]);
    }
    std::vector<Angle> samples;
    samples.reserve(gaps.size());
    for (const CircleArc& g : gaps) {
        samples.push_back(sample_in(g, opts.rule));
    }

    std::vector<std::vector<OrbitPortrait>> found(samples.size());
    std::vector<std::exception_ptr> errors(samples.size());
    const int workers = opts.workers > 0 ? opts.workers : omp_get_max_threads();
    const long long n = static_cast<long long>(samples.size());

#pragma omp parallel for schedule(dynamic, 4) num_threads(workers)
    for (long long s = 0; s < n; ++s) {
        try {
            found[s] = sample_kernel(universe, samples[s], max_period);
        } catch (...) {
            errors[s] = std::current_exception();
        }
    }

    for (const std::exception_ptr& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return merge_samples(d, max_period, gaps, samples, found);
}

Catalog build_catalog_reference(int d, std::size_t max_period, SampleRule rule) {
    std::vector<CircleArc> gaps = sweep_intervals(d, max_period);
    std::vector<Angle> samples;
    std::vector<std::vector<OrbitPortrait>> found;
    for (const CircleArc& g : gaps) {
        samples.push_back(sample_in(g, rule));
        found.push_back(portrait_at(samples.back(), d, max_period));
    }
    return merge_samples(d, max_period, gaps, samples, found);
}

std::vector<CatalogViolation> verify_catalog_against_theorem(const Catalog& cat) {
    std::vector<CatalogViolation> out;
    for (std::size_t i = 0; i < cat.entries.size(); ++i) {
        const CatalogEntry& e = cat.entries[i];
        const OrbitPortrait& p = e.portrait;
        auto fail = [&](const std::string& why) { out.push_back({i, format_portrait(p), why}); };

        if (p.degree() != cat.degree) {
            fail("degree " + std::to_string(p.degree()) + " differs from catalog degree");
            continue;
        }
        ValidationReport report = validate_formal(p);
        if (!report.valid) {
            fail("fails " + to_string(report.violations.front().condition) + ": " +
                 report.violations.front().detail);
            continue;
        }
        if (report.trivial) {
            fail("trivial portrait in catalog");
            continue;
        }
        PortraitClass cls;
        try {
            cls = classify(p);
        } catch (const Error& err) {
            fail(std::string("classify: ") + err.what());
            continue;
        }
        if (!(cls == e.cls)) {
            fail("stored class " + e.cls.str() + " but classify gives " + cls.str());
        }
        const bool odd = p.period() % 2 == 1;
        for (const AngleSet& s : p.sets()) {
            if (odd && s.size() > 3) {
                fail("odd orbit period with " + std::to_string(s.size()) + " rays at one point");
                break;
            }
        }
        if (cls.kind == PortraitClass::Kind::OddThreeRaysMixed) {
            MixedGeometryReport g = check_mixed_geometry(p);
            if (!g.ok()) {
                try {
                    require_mixed_geometry(g);
                } catch (const GeometryViolation& err) {
                    fail(err.what());
                }
            }
        }
        if (cls.kind == PortraitClass::Kind::EvenPeriod) {
            bool dichotomy = cls.ray_period == p.period() * p.set(0).size() ||
                             (p.set(0).size() == 2 && cls.ray_period == p.period());
            if (!dichotomy) {
                fail("even orbit period breaks the transitivity dichotomy");
            }
        }
        try {
            CharacteristicArc ch = characteristic_arc(p);
            if (ch.arc != e.char_arc.arc || ch.owner != e.char_arc.owner) {
                fail("stored characteristic arc " + e.char_arc.arc.str() + " but recomputed " + ch.arc.str());
            }
        } catch (const Error& err) {
            fail(std::string("characteristic arc: ") + err.what());
        }
    }
    return out;
}

void write_catalog_jsonl(const Catalog& cat, std::ostream& out) {
    using nlohmann::ordered_json;
    ordered_json header;
    header["degree"] = cat.degree;
    header["max_period"] = cat.max_period;
    header["tool_version"] = tool_version;
    out << header.dump() << '\n';
    for (const CatalogEntry& e : cat.entries) {
        ordered_json line;
        line["portrait"] = format_portrait(e.portrait);
        line["class"] = e.cls.str();
        line["char_arc"] = e.char_arc.arc.str();
        ordered_json witnesses = ordered_json::array();
        for (const Angle& w : e.witnesses) {
            witnesses.push_back(w.str());
        }
        line["witnesses"] = std::move(witnesses);
        out << line.dump() << '\n';
    }
}

std::string catalog_jsonl(const Catalog& cat) {
    std::ostringstream out;
    write_catalog_jsonl(cat, out);
    return out.str();
}

} // namespace portraits
