#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace portraits {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point of R/Z stored as a reduced fraction num/den with 0 <= num < den.
///
/// Every constructor reduces its input modulo 1 and to lowest terms, so two
/// angles compare equal exactly when they denote the same point of the circle.
/// Ordering is by numeric value in [0,1), which is the counter-clockwise order
/// starting from angle 0.
class Angle {
public:
    Angle() = default;
    Angle(BigInt num, BigInt den);
    Angle(long long num, long long den) : Angle(BigInt(num), BigInt(den)) {}
    explicit Angle(const Rational& value);

    /// Accepts "num/den" or a bare integer ("0"); surrounding whitespace is ignored.
    static Angle parse(std::string_view text);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    Rational value() const { return Rational(num_, den_); }
    double to_double() const;
    bool is_zero() const { return num_ == 0; }

    /// "num/den", or "0" for the zero angle.
    std::string str() const;

    friend bool operator==(const Angle& a, const Angle& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Angle& a, const Angle& b);

private:
    BigInt num_{0};
    BigInt den_{1};
};

Angle operator+(const Angle& a, const Angle& b);
Angle operator-(const Angle& a, const Angle& b);

// k * theta mod 1; k may be negative.
Angle scale(const Angle& theta, const BigInt& k);

// Counter-clockwise distance from `from` to `to`, in [0,1).
Rational ccw_distance(const Angle& from, const Angle& to);

int checked_degree(int d);

enum class AngleClass { Periodic, Preperiodic };

/// theta -> -d*theta mod 1.
Angle map_neg_d(const Angle& theta, int d);

/// Periodic under multiplication by -d iff gcd(den, d) = 1.
AngleClass angle_class(const Angle& theta, int d);
bool is_periodic(const Angle& theta, int d);

/// Minimal n >= 1 with (-d)^n theta = theta. Throws NotPeriodic.
std::size_t period(const Angle& theta, int d);

/// [theta, -d theta, ...] up to the first repeat. Throws NotPeriodic.
std::vector<Angle> orbit(const Angle& theta, int d);

/// Iterate theta -> -d theta n times.
Angle iterate_neg_d(Angle theta, int d, std::size_t n);

std::string to_string(AngleClass c);

} // namespace portraits
