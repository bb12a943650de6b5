#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

namespace thue {

/// Raised for inputs on which a geometric quantity is undefined
/// (collinear circumcircle, coincident angle rays, too few vertices).
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
    friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double norm2(Point a) { return dot(a, a); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Lexicographic (x, then y) order.
inline bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Circle {
    Point center;
    double radius = 0.0;
};

struct Segment {
    Point a;
    Point b;

    bool degenerate() const { return a == b; }
    Point midpoint() const { return 0.5 * (a + b); }
    double length() const { return distance(a, b); }
};

struct Tolerances {
    double eps_eq = 1e-9;     // coordinate/length equality
    double eps_merge = 1e-7;  // circumcenter merging
    double eps_area = 1e-8;   // relative area agreement

    /// Throws std::invalid_argument unless all are positive and eps_eq < eps_merge.
    void validate() const;
};

// Exact predicates. Both use a floating-point filter and fall back to
// expansion arithmetic, so the returned sign is always the sign of the
// exact determinant of the binary64 inputs.

/// +1 if (a, b, c) turn counterclockwise, -1 clockwise, 0 collinear.
int orient2d(Point a, Point b, Point c);

/// +1 if d is strictly inside the circle through counterclockwise (a, b, c),
/// 0 if cocircular, -1 outside. The sign flips for clockwise (a, b, c).
/// Throws GeometryError if a, b, c are collinear.
int incircle(Point a, Point b, Point c, Point d);

/// incircle without the collinearity check, for callers that already know
/// the triangle is proper.
int incircle_unchecked(Point a, Point b, Point c, Point d);

/// Throws GeometryError for collinear input.
Circle circumcircle(Point a, Point b, Point c);

double dist_point_segment(Point p, const Segment& s);

/// Closed-segment intersection, decided with orient2d.
bool segments_intersect(const Segment& s1, const Segment& s2);

/// Shoelace area; positive for counterclockwise vertex order.
/// Throws GeometryError for fewer than three vertices.
double polygon_area(std::span<const Point> vertices);

/// Unsigned angle between rays vertex->p and vertex->q, in [0, pi].
double angle_at(Point vertex, Point p, Point q);

std::string to_string(Point p);

}  // namespace thue
