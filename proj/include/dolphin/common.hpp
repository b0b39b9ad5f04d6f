#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace dolphin {

/// Input violated a documented precondition (bad file, bad parameter, bad geometry).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Structured input could not be parsed; the message names the line or JSON path.
class ParseError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Argument outside the domain where a quantity is defined.
class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A numerical procedure failed on valid input (no convergence, infeasible target).
class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

inline double norm(Point2 p) { return std::hypot(p.x, p.y); }

/// Counter-clockwise rotation by `angle` radians.
inline Point2 rotate(Point2 p, double angle)
{
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

/// Total length of the polyline through `points`.
inline double polyline_length(const std::vector<Point2>& points)
{
    double length = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        length += norm(points[i] - points[i - 1]);
    }
    return length;
}

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

} // namespace dolphin
