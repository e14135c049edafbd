#include "portraits/portrait.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "portraits/errors.hpp"

namespace portraits {

OrbitPortrait::OrbitPortrait(int degree, std::vector<AngleSet> sets)
    : degree_(checked_degree(degree)), sets_(std::move(sets)) {
    if (sets_.empty()) {
        throw std::invalid_argument("orbit portrait needs at least one angle set");
    }
}

bool OrbitPortrait::is_trivial() const {
    return std::all_of(sets_.begin(), sets_.end(), [](const AngleSet& s) { return s.size() == 1; });
}

std::vector<Angle> OrbitPortrait::all_angles() const {
    std::vector<Angle> out;
    for (const AngleSet& s : sets_) {
        out.insert(out.end(), s.begin(), s.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

OrbitPortrait OrbitPortrait::rotated(std::size_t k) const {
    std::vector<AngleSet> out;
    out.reserve(sets_.size());
    for (std::size_t j = 0; j < sets_.size(); ++j) {
        out.push_back(sets_[(j + k) % sets_.size()]);
    }
    return OrbitPortrait(degree_, std::move(out));
}

std::string to_string(Condition c) {
    switch (c) {
    case Condition::C1: return "C1";
    case Condition::C2: return "C2";
    case Condition::C3: return "C3";
    case Condition::C4: return "C4";
    case Condition::C5: return "C5";
    case Condition::Cyclic: return "Cyclic";
    }
    return "?";
}

bool ValidationReport::has(Condition c) const {
    return std::any_of(violations.begin(), violations.end(),
                       [c](const Violation& v) { return v.condition == c; });
}

namespace {

std::string set_label(std::size_t j) {
    return "A_" + std::to_string(j + 1);
}

Rational longest_gap(const AngleSet& s) {
    Rational best = 0;
    for (const CircleArc& arc : s.complementary_arcs()) {
        best = std::max(best, arc.length());
    }
    return best;
}

bool reverses_cyclic_order(const std::vector<Angle>& images, const AngleSet& target) {
    // images[m] is the image of the m-th angle (ccw order) of the source set.
    const std::size_t k = images.size();
    auto first = std::find(target.begin(), target.end(), images[0]);
    std::size_t i0 = static_cast<std::size_t>(first - target.begin());
    for (std::size_t m = 0; m < k; ++m) {
        if (images[m] != target[(i0 + k - m) % k]) {
            return false;
        }
    }
    return true;
}

void check_translates(const OrbitPortrait& portrait, ValidationReport& report) {
    const int d = portrait.degree();
    const std::size_t p = portrait.period();
    for (std::size_t i = 0; i < p; ++i) {
        std::vector<AngleSet> translates;
        for (int k = 0; k < d; ++k) {
            translates.push_back(portrait.set(i).rotated(Angle(k, d)));
        }
        auto record = [&](const AngleSet& a, const std::string& a_name, const AngleSet& b,
                          const std::string& b_name) {
            if (a.intersects(b)) {
                report.violations.push_back(
                    {Condition::C4, a_name + " " + a.str() + " intersects " + b_name + " " + b.str()});
            } else if (!unlinked(a, b)) {
                report.violations.push_back(
                    {Condition::C4, a_name + " " + a.str() + " is linked with " + b_name + " " + b.str()});
            }
        };
        auto translate_name = [&](int k) {
            return k == 0 ? set_label(i) : set_label(i) + "+" + std::to_string(k) + "/" + std::to_string(d);
        };
        for (int k = 0; k < d; ++k) {
            for (int l = k + 1; l < d; ++l) {
                record(translates[k], translate_name(k), translates[l], translate_name(l));
            }
        }
        for (std::size_t m = 0; m < p; ++m) {
            if (m == i) {
                continue;
            }
            for (int k = 0; k < d; ++k) {
                // Pairs of untranslated sets are reported once, for i < m.
                if (k == 0 && m < i) {
                    continue;
                }
                // Overlapping untranslated sets are a Cyclic violation.
                if (k == 0 && portrait.set(i).intersects(portrait.set(m))) {
                    continue;
                }
                record(translates[k], translate_name(k), portrait.set(m), set_label(m));
            }
        }
    }
}

void check_periods(const OrbitPortrait& portrait, bool trivial, ValidationReport& report) {
    const int d = portrait.degree();
    const std::size_t p = portrait.period();
    std::optional<std::size_t> common;
    for (std::size_t j = 0; j < p; ++j) {
        const AngleSet& s = portrait.set(j);
        std::vector<std::size_t> periods;
        for (const Angle& a : s) {
            periods.push_back(period(a, d));
        }
        std::ostringstream list;
        for (std::size_t m = 0; m < periods.size(); ++m) {
            list << (m ? "," : "") << periods[m];
        }
        const std::string where = set_label(j) + " has ray periods {" + list.str() + "}";
        if (trivial) {
            if (periods[0] != p) {
                report.violations.push_back({Condition::C5, where + "; a lone ray must have period " +
                                                                std::to_string(p)});
            }
            continue;
        }
        if (p % 2 == 0) {
            for (std::size_t q : periods) {
                if (q % p != 0 || (common && *common != q)) {
                    report.violations.push_back(
                        {Condition::C5, where + "; even orbit period needs one common multiple of " +
                                            std::to_string(p)});
                    break;
                }
                common = q;
            }
            continue;
        }
        std::size_t n_p = std::count(periods.begin(), periods.end(), p);
        std::size_t n_2p = std::count(periods.begin(), periods.end(), 2 * p);
        bool ok = (s.size() == 2 && (n_p == 2 || n_2p == 2)) || (s.size() == 3 && n_p == 1 && n_2p == 2);
        if (!ok) {
            report.violations.push_back(
                {Condition::C5, where + "; odd orbit period " + std::to_string(p) +
                                    " allows only {p,p}, {2p,2p} or {p,2p,2p}"});
        }
    }
}

} // namespace

ValidationReport validate_formal(const OrbitPortrait& portrait) {
    ValidationReport report;
    const int d = portrait.degree();
    const std::size_t p = portrait.period();
    report.trivial = portrait.is_trivial();

    bool all_periodic = true;
    for (std::size_t j = 0; j < p; ++j) {
        for (const Angle& a : portrait.set(j)) {
            if (!is_periodic(a, d)) {
                all_periodic = false;
                report.violations.push_back(
                    {Condition::C1, a.str() + " in " + set_label(j) + " is strictly preperiodic"});
            }
        }
    }

    for (std::size_t j = 0; j < p; ++j) {
        const AngleSet& src = portrait.set(j);
        const AngleSet& dst = portrait.set(j + 1);
        std::vector<Angle> images;
        for (const Angle& a : src) {
            images.push_back(map_neg_d(a, d));
        }
        AngleSet image_set(images);
        if (image_set.size() != src.size()) {
            report.violations.push_back(
                {Condition::C2, "-" + std::to_string(d) + " is not injective on " + set_label(j)});
        } else if (image_set != dst) {
            report.violations.push_back({Condition::C2, "-" + std::to_string(d) + " maps " + set_label(j) +
                                                            " onto " + image_set.str() + ", not " +
                                                            set_label((j + 1) % p) + " " + dst.str()});
        } else if (src.size() >= 3 && !reverses_cyclic_order(images, dst)) {
            report.violations.push_back({Condition::C2, "-" + std::to_string(d) + " does not reverse the cyclic order of " +
                                                            set_label(j)});
        }
    }

    const Rational critical_threshold = Rational(1) - Rational(1, d);
    for (std::size_t j = 0; j < p; ++j) {
        const AngleSet& s = portrait.set(j);
        if (s.size() >= 2 && longest_gap(s) <= critical_threshold) {
            report.violations.push_back(
                {Condition::C3, set_label(j) + " " + s.str() + " is not contained in an arc shorter than 1/" +
                                    std::to_string(d)});
        }
    }

    check_translates(portrait, report);

    if (all_periodic) {
        check_periods(portrait, report.trivial, report);
    }

    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t m = i + 1; m < p; ++m) {
            if (portrait.set(i).intersects(portrait.set(m))) {
                report.violations.push_back(
                    {Condition::Cyclic, set_label(i) + " and " + set_label(m) + " share an angle"});
            }
        }
    }

    // Checks above ran in C1, C2, C3, C4, C5, Cyclic order already.
    report.valid = report.violations.empty();
    return report;
}

CircleArc critical_arc(const OrbitPortrait& portrait, std::size_t j) {
    const AngleSet& s = portrait.set(j);
    if (s.size() < 2) {
        throw NoSuchArc(set_label(j % portrait.period()) + " has a single angle; no critical arc");
    }
    std::vector<CircleArc> arcs = s.complementary_arcs();
    auto longest = std::max_element(arcs.begin(), arcs.end(), [](const CircleArc& a, const CircleArc& b) {
        return a.length() < b.length();
    });
    return *longest;
}

CircleArc critical_value_arc(const OrbitPortrait& portrait, std::size_t j) {
    const std::size_t p = portrait.period();
    const std::size_t prev = (j % p + p - 1) % p;
    CircleArc crit = critical_arc(portrait, prev);
    // -d reverses orientation, so (a,b) covers the arc from -d b to -d a.
    return CircleArc(map_neg_d(crit.end(), portrait.degree()), map_neg_d(crit.start(), portrait.degree()));
}

CharacteristicArc shortest_complementary_arc(const OrbitPortrait& portrait) {
    std::optional<CharacteristicArc> best;
    bool tie = false;
    for (std::size_t j = 0; j < portrait.period(); ++j) {
        for (const CircleArc& arc : portrait.set(j).complementary_arcs()) {
            if (!best || arc.length() < best->arc.length()) {
                best = CharacteristicArc{arc, j};
                tie = false;
            } else if (arc.length() == best->arc.length() && arc != best->arc) {
                tie = true;
            }
        }
    }
    if (!best) {
        throw NoSuchArc("trivial portrait has no complementary arcs");
    }
    if (tie) {
        throw NonUniqueMinimum("several complementary arcs share the minimal length " +
                               best->arc.length().str());
    }
    return *best;
}

CharacteristicArc characteristic_arc(const OrbitPortrait& portrait) {
    CharacteristicArc result = shortest_complementary_arc(portrait);
    if (critical_value_arc(portrait, result.owner) != result.arc) {
        throw Unclassifiable("shortest arc " + result.arc.str() + " is not the critical value arc of " +
                             set_label(result.owner));
    }
    for (std::size_t j = 0; j < portrait.period(); ++j) {
        if (j == result.owner) {
            continue;
        }
        CircleArc other = critical_value_arc(portrait, j);
        if (!result.arc.strictly_inside(other)) {
            throw Unclassifiable("characteristic arc " + result.arc.str() +
                                 " is not strictly inside the critical value arc " + other.str() + " of " +
                                 set_label(j));
        }
    }
    return result;
}

std::string PortraitClass::name() const {
    switch (kind) {
    case Kind::Trivial: return "Trivial";
    case Kind::EvenPeriod: return "EvenPeriod";
    case Kind::OddTwoRaysPeriodP: return "OddTwoRaysPeriodP";
    case Kind::OddTwoRaysPeriod2P: return "OddTwoRaysPeriod2P";
    case Kind::OddThreeRaysMixed: return "OddThreeRaysMixed";
    }
    return "?";
}

std::string PortraitClass::str() const {
    if (kind != Kind::EvenPeriod) {
        return name();
    }
    return name() + "(ray_period=" + std::to_string(ray_period) +
           ",transitive=" + (transitive ? "true" : "false") + ")";
}

PortraitClass classify(const OrbitPortrait& portrait) {
    ValidationReport report = validate_formal(portrait);
    if (!report.valid) {
        std::string why;
        for (const Violation& v : report.violations) {
            why += " [" + to_string(v.condition) + "] " + v.detail;
        }
        throw Unclassifiable("not a formal orbit portrait:" + why);
    }
    const int d = portrait.degree();
    const std::size_t p = portrait.period();
    const AngleSet& first = portrait.set(0);
    PortraitClass cls;
    if (report.trivial) {
        cls.kind = PortraitClass::Kind::Trivial;
        cls.ray_period = p;
        return cls;
    }
    if (p % 2 == 0) {
        cls.kind = PortraitClass::Kind::EvenPeriod;
        cls.ray_period = period(first[0], d);
        cls.transitive = cls.ray_period == p * first.size();
        if (!cls.transitive && !(first.size() == 2 && cls.ray_period == p)) {
            throw Unclassifiable("even-period portrait is neither transitive nor a pair of fixed rays");
        }
        return cls;
    }
    std::size_t n_p = 0;
    std::size_t n_2p = 0;
    for (const Angle& a : first) {
        std::size_t q = period(a, d);
        n_p += q == p;
        n_2p += q == 2 * p;
    }
    if (first.size() == 2 && n_p == 2) {
        cls.kind = PortraitClass::Kind::OddTwoRaysPeriodP;
        cls.ray_period = p;
    } else if (first.size() == 2 && n_2p == 2) {
        cls.kind = PortraitClass::Kind::OddTwoRaysPeriod2P;
        cls.ray_period = 2 * p;
    } else if (first.size() == 3 && n_p == 1 && n_2p == 2) {
        cls.kind = PortraitClass::Kind::OddThreeRaysMixed;
        cls.ray_period = 2 * p;
    } else {
        throw Unclassifiable("odd-period ray pattern outside the four allowed cases");
    }
    return cls;
}

MixedGeometryReport check_mixed_geometry(const OrbitPortrait& portrait) {
    const int d = portrait.degree();
    const std::size_t p = portrait.period();
    if (p % 2 == 0) {
        throw PreconditionViolated("mixed geometry needs an odd orbit period, got " + std::to_string(p));
    }
    for (std::size_t j = 0; j < p; ++j) {
        const AngleSet& s = portrait.set(j);
        bool shape = s.size() == 3;
        std::size_t n_p = 0;
        std::size_t n_2p = 0;
        for (const Angle& a : s) {
            if (!is_periodic(a, d)) {
                shape = false;
                break;
            }
            std::size_t q = period(a, d);
            n_p += q == p;
            n_2p += q == 2 * p;
        }
        if (!shape || n_p != 1 || n_2p != 2) {
            throw PreconditionViolated("mixed geometry needs one period-p and two period-2p angles in " +
                                       set_label(j) + " " + s.str());
        }
    }

    CharacteristicArc ch = shortest_complementary_arc(portrait);
    const AngleSet& owner = portrait.set(ch.owner);
    std::vector<Angle> doubled;
    std::optional<Angle> mid;
    for (const Angle& a : owner) {
        if (period(a, d) == p) {
            mid = a;
        } else {
            doubled.push_back(a);
        }
    }
    // Put the period-2p characteristic endpoint first when there is one.
    if (doubled[1] == ch.arc.start() || doubled[1] == ch.arc.end()) {
        std::swap(doubled[0], doubled[1]);
    }

    MixedGeometryReport r{doubled[0], *mid, doubled[1], ch, 0, ch.arc.length()};

    std::size_t q_start = period(ch.arc.start(), d);
    std::size_t q_end = period(ch.arc.end(), d);
    r.periods_ok = (q_start == p && q_end == 2 * p) || (q_start == 2 * p && q_end == p);

    CircleArc forward(r.t_minus, r.t_plus);
    CircleArc backward(r.t_plus, r.t_minus);
    const CircleArc& shorter = forward.length() < backward.length() ? forward : backward;
    r.shorter_component_length = shorter.length();
    r.inside_shorter = forward.length() != backward.length() && shorter.contains(r.t_mid);

    BigInt dp = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(p));
    r.length_identity = r.shorter_component_length == Rational(1 + dp) * r.characteristic_length;
    return r;
}

void require_mixed_geometry(const MixedGeometryReport& report) {
    if (!report.periods_ok) {
        throw GeometryViolation("i", "characteristic angles " + report.characteristic.arc.str() +
                                         " do not have periods p and 2p");
    }
    if (!report.inside_shorter) {
        throw GeometryViolation("ii", report.t_mid.str() + " is not in the shorter component cut by " +
                                          report.t_minus.str() + " and " + report.t_plus.str());
    }
    if (!report.length_identity) {
        throw GeometryViolation("iii", "shorter component length " + report.shorter_component_length.str() +
                                           " != (1+d^p) * " + report.characteristic_length.str());
    }
}

namespace {

class PortraitParser {
public:
    explicit PortraitParser(std::string_view text) : text_(text) {}

    std::vector<AngleSet> run() {
        std::vector<AngleSet> sets;
        skip();
        if (at_end()) {
            throw ParseError(pos_, "empty portrait");
        }
        while (true) {
            sets.push_back(parse_set());
            skip();
            if (at_end()) {
                break;
            }
            expect(';', "expected ';' between sets");
            skip();
        }
        return sets;
    }

private:
    AngleSet parse_set() {
        expect('{', "expected '{'");
        std::vector<Angle> angles;
        std::size_t set_start = pos_;
        while (true) {
            skip();
            std::size_t angle_pos = pos_;
            Angle a = parse_angle();
            if (std::find(angles.begin(), angles.end(), a) != angles.end()) {
                throw ParseError(angle_pos, "duplicate angle " + a.str());
            }
            angles.push_back(std::move(a));
            skip();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == '}') {
                ++pos_;
                break;
            }
            throw ParseError(pos_, "expected ',' or '}'");
        }
        if (angles.empty()) {
            throw ParseError(set_start, "empty angle set");
        }
        return AngleSet(std::move(angles));
    }

    Angle parse_angle() {
        BigInt num = digits();
        BigInt den = 1;
        skip();
        if (peek() == '/') {
            ++pos_;
            skip();
            std::size_t den_pos = pos_;
            den = digits();
            if (den == 0) {
                throw ParseError(den_pos, "zero denominator");
            }
        }
        return Angle(std::move(num), std::move(den));
    }

    BigInt digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            throw ParseError(start, "expected a decimal integer");
        }
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    void expect(char c, const char* message) {
        if (peek() != c) {
            throw ParseError(pos_, message);
        }
        ++pos_;
    }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    bool at_end() const { return pos_ >= text_.size(); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

namespace {

// The text lists a collection of sets. When -d permutes that collection in
// one cycle, relabel it so that each set is followed by its image, keeping
// the first listed set first. Anything else is left as written so the
// validator can report it.
std::vector<AngleSet> orbit_order(std::vector<AngleSet> sets, int d) {
    std::vector<AngleSet> ordered{sets.front()};
    std::vector<bool> used(sets.size(), false);
    used[0] = true;
    while (true) {
        std::vector<Angle> image;
        for (const Angle& a : ordered.back()) {
            image.push_back(map_neg_d(a, d));
        }
        AngleSet next(std::move(image));
        if (next == sets.front()) {
            break;
        }
        auto it = std::find(sets.begin(), sets.end(), next);
        if (it == sets.end() || used[static_cast<std::size_t>(it - sets.begin())]) {
            return sets;
        }
        used[static_cast<std::size_t>(it - sets.begin())] = true;
        ordered.push_back(next);
    }
    return ordered.size() == sets.size() ? ordered : sets;
}

} // namespace

OrbitPortrait parse_portrait(std::string_view text, int degree) {
    checked_degree(degree);
    return OrbitPortrait(degree, orbit_order(PortraitParser(text).run(), degree));
}

std::string format_portrait(const OrbitPortrait& portrait) {
    std::string s;
    for (std::size_t j = 0; j < portrait.period(); ++j) {
        if (j != 0) {
            s += ';';
        }
        s += portrait.set(j).str();
    }
    return s;
}

OrbitPortrait canonical_form(const OrbitPortrait& portrait) {
    if (!portrait.is_trivial()) {
        try {
            return portrait.rotated(shortest_complementary_arc(portrait).owner);
        } catch (const Error&) {
            // Ties fall through to the lexicographic rule.
        }
    }
    OrbitPortrait best = portrait;
    for (std::size_t k = 1; k < portrait.period(); ++k) {
        OrbitPortrait candidate = portrait.rotated(k);
        if (candidate.sets() < best.sets()) {
            best = std::move(candidate);
        }
    }
    return best;
}

} // namespace portraits
