#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace portraits {

// Base of every domain failure raised by the library. Usage/argument
// problems use std::invalid_argument instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotPeriodic : public Error {
public:
    using Error::Error;
};

class SetsIntersect : public Error {
public:
    using Error::Error;
};

class NoSuchArc : public Error {
public:
    using Error::Error;
};

class NonUniqueMinimum : public Error {
public:
    using Error::Error;
};

class Unclassifiable : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class GeometryViolation : public Error {
public:
    GeometryViolation(std::string clause, const std::string& detail)
        : Error("mixed geometry clause " + clause + " violated: " + detail),
          clause_(std::move(clause)) {}

    const std::string& clause() const noexcept { return clause_; }

private:
    std::string clause_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class ZeroOnBoundary : public Error {
public:
    using Error::Error;
};

// The n-th forward iterate of an angle is one of the partition's boundary
// angles, so the itinerary is undefined from that symbol on.
class HitsBoundary : public Error {
public:
    explicit HitsBoundary(std::size_t iterate)
        : Error("iterate " + std::to_string(iterate) + " lies on a partition boundary angle"),
          iterate_(iterate) {}

    std::size_t iterate() const noexcept { return iterate_; }

private:
    std::size_t iterate_;
};

class ParameterAngleTooPeriodic : public Error {
public:
    using Error::Error;
};

class RealizationFailed : public Error {
public:
    using Error::Error;
};

class TraceFailed : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

} // namespace portraits
