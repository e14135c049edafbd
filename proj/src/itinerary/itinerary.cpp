#include "portraits/itinerary.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "portraits/enumeration.hpp"
#include "portraits/errors.hpp"

namespace portraits {

int Partition::label(const Angle& theta) const {
    const Angle& t = parameter_angle;
    // floor(d*theta + t) mod d, with d*theta + t = n / m.
    BigInt n = BigInt(degree) * theta.num() * t.den() + t.num() * theta.den();
    BigInt m = theta.den() * t.den();
    if (n % m == 0) {
        return -1;
    }
    return static_cast<int>((n / m) % degree);
}

Partition build_partition(const Angle& t, int d) {
    checked_degree(d);
    if (t.is_zero()) {
        throw ZeroOnBoundary("t = 0 puts angle 0 on the partition boundary");
    }
    Partition part;
    part.parameter_angle = t;
    part.degree = d;
    for (int j = 1; j <= d; ++j) {
        part.boundary.emplace_back(BigInt(j) * t.den() - t.num(), BigInt(d) * t.den());
    }
    part.components.emplace_back(part.boundary.back(), part.boundary.front());
    for (int j = 1; j < d; ++j) {
        part.components.emplace_back(part.boundary[j - 1], part.boundary[j]);
    }
    return part;
}

int Itinerary::at(std::size_t n) const {
    if (n < preperiod.size()) {
        return preperiod[n];
    }
    return period[(n - preperiod.size()) % period.size()];
}

std::string Itinerary::str() const {
    bool wide = false;
    for (int s : preperiod) {
        wide = wide || s > 9;
    }
    for (int s : period) {
        wide = wide || s > 9;
    }
    auto join = [wide](const std::vector<int>& word) {
        std::string out;
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (wide && i != 0) {
                out += ',';
            }
            out += std::to_string(word[i]);
        }
        return out;
    };
    std::string pre = join(preperiod);
    if (wide && !pre.empty()) {
        pre += ',';
    }
    return pre + "(" + join(period) + ")";
}

namespace {

std::vector<int> primitive_root(const std::vector<int>& word) {
    const std::size_t n = word.size();
    for (std::size_t k = 1; k < n; ++k) {
        if (n % k != 0) {
            continue;
        }
        bool repeats = true;
        for (std::size_t i = k; i < n && repeats; ++i) {
            repeats = word[i] == word[i - k];
        }
        if (repeats) {
            return std::vector<int>(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
        }
    }
    return word;
}

} // namespace

Itinerary make_itinerary(std::vector<int> preperiod, std::vector<int> period) {
    if (period.empty()) {
        throw std::invalid_argument("itinerary period must be nonempty");
    }
    Itinerary it{std::move(preperiod), primitive_root(period)};
    while (!it.preperiod.empty() && it.preperiod.back() == it.period.back()) {
        it.preperiod.pop_back();
        std::rotate(it.period.rbegin(), it.period.rbegin() + 1, it.period.rend());
    }
    return it;
}

Itinerary itinerary(const Angle& theta, const Partition& part) {
    std::map<Angle, std::size_t> seen;
    std::vector<int> symbols;
    Angle x = theta;
    while (true) {
        auto hit = seen.find(x);
        if (hit != seen.end()) {
            auto split = symbols.begin() + static_cast<std::ptrdiff_t>(hit->second);
            return make_itinerary(std::vector<int>(symbols.begin(), split), std::vector<int>(split, symbols.end()));
        }
        int symbol = part.label(x);
        if (symbol < 0) {
            throw HitsBoundary(symbols.size());
        }
        seen.emplace(x, symbols.size());
        symbols.push_back(symbol);
        x = map_neg_d(x, part.degree);
    }
}

bool co_land(const Angle& theta1, const Angle& theta2, const Angle& t, int d) {
    Partition part = build_partition(t, d);
    return itinerary(theta1, part) == itinerary(theta2, part);
}

namespace {

void require_generic_parameter(const Angle& t, int d, std::size_t max_ray_period) {
    if (!is_periodic(t, d)) {
        return;
    }
    Angle x = t;
    for (std::size_t n = 1; n <= max_ray_period; ++n) {
        x = map_neg_d(x, d);
        if (x == t) {
            throw ParameterAngleTooPeriodic(t.str() + " has period " + std::to_string(n) +
                                            " <= " + std::to_string(max_ray_period) +
                                            "; some itineraries are undefined there");
        }
    }
}

std::vector<std::vector<int>> words_at(const Angle& t, int d, const std::vector<Angle>& angles) {
    Partition part = build_partition(t, d);
    std::vector<std::vector<int>> words;
    words.reserve(angles.size());
    for (const Angle& a : angles) {
        words.push_back(itinerary(a, part).period);
    }
    return words;
}

} // namespace

std::vector<AngleSet> landing_classes(const Angle& t, int d, std::size_t max_ray_period) {
    require_generic_parameter(t, d, max_ray_period);
    std::vector<Angle> angles = periodic_angles_up_to(d, max_ray_period);
    std::vector<std::vector<int>> words = words_at(t, d, angles);
    std::map<std::vector<int>, std::vector<Angle>> groups;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        groups[words[i]].push_back(angles[i]);
    }
    std::vector<AngleSet> classes;
    for (auto& [word, members] : groups) {
        classes.emplace_back(std::move(members));
    }
    std::sort(classes.begin(), classes.end(),
              [](const AngleSet& a, const AngleSet& b) { return a[0] < b[0]; });
    return classes;
}

bool portrait_less(const OrbitPortrait& a, const OrbitPortrait& b) {
    if (a.period() != b.period()) {
        return a.period() < b.period();
    }
    return a.sets() < b.sets();
}

std::vector<OrbitPortrait> portraits_from_words(int d, const std::vector<Angle>& angles,
                                                const std::vector<std::vector<int>>& words,
                                                std::size_t max_period, bool include_trivial) {
    std::map<std::vector<int>, std::vector<Angle>> groups;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        groups[words[i]].push_back(angles[i]);
    }
    // -d shifts the itinerary, so the class after word w is w rotated left.
    // The orbit period of a class is therefore the length of its word.
    std::map<std::vector<int>, bool> visited;
    std::vector<OrbitPortrait> out;
    for (const auto& [word, members] : groups) {
        if (visited[word] || word.size() > max_period) {
            continue;
        }
        std::vector<AngleSet> sets;
        std::vector<int> w = word;
        bool trivial = true;
        for (std::size_t j = 0; j < word.size(); ++j) {
            auto cls = groups.find(w);
            if (cls == groups.end()) {
                throw std::logic_error("itinerary class without an image class");
            }
            visited[w] = true;
            trivial = trivial && cls->second.size() == 1;
            sets.emplace_back(cls->second);
            std::rotate(w.begin(), w.begin() + 1, w.end());
        }
        if (trivial && !include_trivial) {
            continue;
        }
        out.push_back(canonical_form(OrbitPortrait(d, std::move(sets))));
    }
    std::sort(out.begin(), out.end(), portrait_less);
    return out;
}

std::vector<OrbitPortrait> portrait_at(const Angle& t, int d, std::size_t max_period,
                                       const PortraitAtOptions& opts) {
    if (max_period == 0) {
        throw std::invalid_argument("max_period must be at least 1");
    }
    std::size_t ray_bound = opts.max_ray_period != 0 ? opts.max_ray_period : 2 * max_period;
    require_generic_parameter(t, d, ray_bound);
    std::vector<Angle> angles = periodic_angles_up_to(d, ray_bound);
    return portraits_from_words(d, angles, words_at(t, d, angles), max_period, opts.include_trivial);
}

} // namespace portraits
