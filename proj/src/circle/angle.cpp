#include "portraits/angle.hpp"

#include <cctype>
#include <stdexcept>

#include <boost/multiprecision/integer.hpp>

#include "portraits/errors.hpp"

namespace portraits {

namespace {

void normalise(BigInt& num, BigInt& den) {
    if (den == 0) {
        throw std::invalid_argument("angle denominator must be non-zero");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num %= den;
    if (num < 0) {
        num += den;
    }
    if (num == 0) {
        den = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num, den);
    if (g != 1) {
        num /= g;
        den /= g;
    }
}

std::size_t skip_space(std::string_view s, std::size_t i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
        ++i;
    }
    return i;
}

BigInt parse_digits(std::string_view s, std::size_t& i) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        ++i;
    }
    if (i == start) {
        throw ParseError(start, "expected a decimal integer");
    }
    return BigInt(std::string(s.substr(start, i - start)));
}

} // namespace

Angle::Angle(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    normalise(num_, den_);
}

Angle::Angle(const Rational& value)
    : Angle(boost::multiprecision::numerator(value), boost::multiprecision::denominator(value)) {}

Angle Angle::parse(std::string_view text) {
    std::size_t i = skip_space(text, 0);
    BigInt num = parse_digits(text, i);
    BigInt den = 1;
    i = skip_space(text, i);
    if (i < text.size() && text[i] == '/') {
        i = skip_space(text, i + 1);
        den = parse_digits(text, i);
        if (den == 0) {
            throw ParseError(i - 1, "zero denominator");
        }
        i = skip_space(text, i);
    }
    if (i != text.size()) {
        throw ParseError(i, "unexpected trailing characters");
    }
    return Angle(std::move(num), std::move(den));
}

double Angle::to_double() const {
    return static_cast<double>(value());
}

std::string Angle::str() const {
    if (num_ == 0) {
        return "0";
    }
    return num_.str() + "/" + den_.str();
}

std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
    if (a.den_ == b.den_) {
        int c = a.num_.compare(b.num_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    int c = lhs.compare(rhs);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Angle operator+(const Angle& a, const Angle& b) {
    return Angle(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

Angle operator-(const Angle& a, const Angle& b) {
    return Angle(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

Angle scale(const Angle& theta, const BigInt& k) {
    return Angle(theta.num() * k, theta.den());
}

Rational ccw_distance(const Angle& from, const Angle& to) {
    return (to - from).value();
}

int checked_degree(int d) {
    if (d < 2) {
        throw std::invalid_argument("degree must be at least 2, got " + std::to_string(d));
    }
    return d;
}

Angle map_neg_d(const Angle& theta, int d) {
    return Angle(theta.num() * -checked_degree(d), theta.den());
}

AngleClass angle_class(const Angle& theta, int d) {
    checked_degree(d);
    return boost::multiprecision::gcd(theta.den(), BigInt(d)) == 1 ? AngleClass::Periodic
                                                                  : AngleClass::Preperiodic;
}

bool is_periodic(const Angle& theta, int d) {
    return angle_class(theta, d) == AngleClass::Periodic;
}

std::size_t period(const Angle& theta, int d) {
    if (!is_periodic(theta, d)) {
        throw NotPeriodic(theta.str() + " is strictly preperiodic under multiplication by -" +
                          std::to_string(d));
    }
    std::size_t n = 1;
    for (Angle x = map_neg_d(theta, d); x != theta; x = map_neg_d(x, d)) {
        ++n;
    }
    return n;
}

std::vector<Angle> orbit(const Angle& theta, int d) {
    if (!is_periodic(theta, d)) {
        throw NotPeriodic(theta.str() + " is strictly preperiodic under multiplication by -" +
                          std::to_string(d));
    }
    std::vector<Angle> out{theta};
    for (Angle x = map_neg_d(theta, d); x != theta; x = map_neg_d(x, d)) {
        out.push_back(x);
    }
    return out;
}

Angle iterate_neg_d(Angle theta, int d, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        theta = map_neg_d(theta, d);
    }
    return theta;
}

std::string to_string(AngleClass c) {
    return c == AngleClass::Periodic ? "Periodic" : "Preperiodic";
}

} // namespace portraits
