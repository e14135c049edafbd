#include "portraits/circle.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

#include "portraits/errors.hpp"

namespace portraits {

namespace mp = boost::multiprecision;

CircleArc::CircleArc(Angle start, Angle end) : start_(std::move(start)), end_(std::move(end)) {
    if (start_ == end_) {
        throw std::invalid_argument("arc endpoints must differ: " + start_.str());
    }
}

CircleArc CircleArc::parse(std::string_view text) {
    std::size_t open = text.find('(');
    std::size_t comma = text.find(',');
    std::size_t close = text.rfind(')');
    if (open == std::string_view::npos) {
        throw ParseError(0, "expected '('");
    }
    if (comma == std::string_view::npos || comma < open) {
        throw ParseError(open + 1, "expected ','");
    }
    if (close == std::string_view::npos || close < comma) {
        throw ParseError(text.size(), "expected ')'");
    }
    for (std::size_t i = 0; i < open; ++i) {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            throw ParseError(i, "unexpected character before '('");
        }
    }
    for (std::size_t i = close + 1; i < text.size(); ++i) {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            throw ParseError(i, "unexpected trailing characters");
        }
    }
    Angle a = Angle::parse(text.substr(open + 1, comma - open - 1));
    Angle b = Angle::parse(text.substr(comma + 1, close - comma - 1));
    if (a == b) {
        throw ParseError(comma, "arc endpoints coincide");
    }
    return CircleArc(std::move(a), std::move(b));
}

bool CircleArc::contains(const Angle& theta) const {
    if (theta == start_) {
        return false;
    }
    return ccw_distance(start_, theta) < length();
}

bool CircleArc::subset_of(const CircleArc& outer) const {
    // Offset of our start inside outer, measured from outer's start. Our start
    // may coincide with outer's start (offset 0) but must not sit outside.
    Rational offset = ccw_distance(outer.start(), start_);
    if (offset >= outer.length()) {
        return false;
    }
    return offset + length() <= outer.length();
}

std::string CircleArc::str() const {
    return "(" + start_.str() + "," + end_.str() + ")";
}

bool arc_contains(const CircleArc& arc, const Angle& theta) {
    return arc.contains(theta);
}

AngleSet::AngleSet(std::vector<Angle> angles) : angles_(std::move(angles)) {
    if (angles_.empty()) {
        throw std::invalid_argument("angle set must be nonempty");
    }
    std::sort(angles_.begin(), angles_.end());
    angles_.erase(std::unique(angles_.begin(), angles_.end()), angles_.end());
}

bool AngleSet::contains(const Angle& theta) const {
    return std::binary_search(angles_.begin(), angles_.end(), theta);
}

bool AngleSet::intersects(const AngleSet& other) const {
    auto a = angles_.begin();
    auto b = other.angles_.begin();
    while (a != angles_.end() && b != other.angles_.end()) {
        if (*a == *b) {
            return true;
        }
        if (*a < *b) {
            ++a;
        } else {
            ++b;
        }
    }
    return false;
}

std::vector<CircleArc> AngleSet::complementary_arcs() const {
    std::vector<CircleArc> arcs;
    if (angles_.size() < 2) {
        return arcs;
    }
    arcs.reserve(angles_.size());
    for (std::size_t i = 0; i < angles_.size(); ++i) {
        arcs.emplace_back(angles_[i], angles_[(i + 1) % angles_.size()]);
    }
    return arcs;
}

AngleSet AngleSet::rotated(const Angle& shift) const {
    std::vector<Angle> out;
    out.reserve(angles_.size());
    for (const Angle& a : angles_) {
        out.push_back(a + shift);
    }
    return AngleSet(std::move(out));
}

std::string AngleSet::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < angles_.size(); ++i) {
        if (i != 0) {
            s += ',';
        }
        s += angles_[i].str();
    }
    return s + "}";
}

bool unlinked(const AngleSet& s1, const AngleSet& s2) {
    if (s1.intersects(s2)) {
        throw SetsIntersect(s1.str() + " and " + s2.str() + " share an angle");
    }
    // Merge both sorted sets and count the circular runs of membership.
    std::vector<int> owner;
    owner.reserve(s1.size() + s2.size());
    auto a = s1.begin();
    auto b = s2.begin();
    while (a != s1.end() || b != s2.end()) {
        if (b == s2.end() || (a != s1.end() && *a < *b)) {
            owner.push_back(1);
            ++a;
        } else {
            owner.push_back(2);
            ++b;
        }
    }
    std::size_t changes = 0;
    for (std::size_t i = 0; i < owner.size(); ++i) {
        if (owner[i] != owner[(i + 1) % owner.size()]) {
            ++changes;
        }
    }
    return changes <= 2;
}

namespace {

BigInt floor_nonneg(const Rational& x) {
    return mp::numerator(x) / mp::denominator(x);
}

// Smallest-denominator rational in the open real interval (lo, hi), lo >= 0;
// an absent hi means +infinity. Continued-fraction descent.
Rational simplest_between(const Rational& lo, const std::optional<Rational>& hi) {
    BigInt k = floor_nonneg(lo);
    Rational next_int(k + 1);
    if (!hi || next_int < *hi) {
        return next_int;
    }
    Rational lo_frac = lo - Rational(k);
    Rational hi_frac = *hi - Rational(k);
    std::optional<Rational> upper;
    if (lo_frac != 0) {
        upper = Rational(1) / lo_frac;
    }
    return Rational(k) + Rational(1) / simplest_between(Rational(1) / hi_frac, upper);
}

} // namespace

Angle simplest_angle_in(const CircleArc& arc) {
    Rational lo = arc.start().value();
    return Angle(simplest_between(lo, lo + arc.length()));
}

Angle midpoint(const CircleArc& arc) {
    return Angle(arc.start().value() + arc.length() / 2);
}

} // namespace portraits
