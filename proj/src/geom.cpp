#include "thue/geom.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <numbers>

#include "thue/expansion.hpp"

namespace thue {

namespace {

constexpr double kEpsilon = std::numeric_limits<double>::epsilon() / 2.0;  // 2^-53
constexpr double kCcwErrBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;
constexpr double kIccErrBound = (10.0 + 96.0 * kEpsilon) * kEpsilon;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

int orient2d_exact(Point a, Point b, Point c) {
    const Expansion abx = Expansion::difference(b.x, a.x);
    const Expansion aby = Expansion::difference(b.y, a.y);
    const Expansion acx = Expansion::difference(c.x, a.x);
    const Expansion acy = Expansion::difference(c.y, a.y);
    return (abx * acy - aby * acx).sign();
}

int incircle_exact(Point a, Point b, Point c, Point d) {
    const Expansion adx = Expansion::difference(a.x, d.x);
    const Expansion ady = Expansion::difference(a.y, d.y);
    const Expansion bdx = Expansion::difference(b.x, d.x);
    const Expansion bdy = Expansion::difference(b.y, d.y);
    const Expansion cdx = Expansion::difference(c.x, d.x);
    const Expansion cdy = Expansion::difference(c.y, d.y);

    const Expansion alift = adx * adx + ady * ady;
    const Expansion blift = bdx * bdx + bdy * bdy;
    const Expansion clift = cdx * cdx + cdy * cdy;

    const Expansion bc = bdx * cdy - cdx * bdy;
    const Expansion ca = cdx * ady - adx * cdy;
    const Expansion ab = adx * bdy - bdx * ady;

    return (alift * bc + blift * ca + clift * ab).sign();
}

}  // namespace

void Tolerances::validate() const {
    if (!(eps_eq > 0.0 && eps_merge > 0.0 && eps_area > 0.0)) {
        throw std::invalid_argument("tolerances must be strictly positive");
    }
    if (!(eps_eq < eps_merge)) {
        throw std::invalid_argument("eps_eq must be smaller than eps_merge");
    }
}

int orient2d(Point a, Point b, Point c) {
    const double detleft = (a.x - c.x) * (b.y - c.y);
    const double detright = (a.y - c.y) * (b.x - c.x);
    const double det = detleft - detright;
    const double detsum = std::fabs(detleft) + std::fabs(detright);
    if (std::fabs(det) > kCcwErrBound * detsum) return sign_of(det);
    return orient2d_exact(a, b, c);
}

int incircle_unchecked(Point a, Point b, Point c, Point d) {
    const double adx = a.x - d.x;
    const double bdx = b.x - d.x;
    const double cdx = c.x - d.x;
    const double ady = a.y - d.y;
    const double bdy = b.y - d.y;
    const double cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy;
    const double cdxbdy = cdx * bdy;
    const double alift = adx * adx + ady * ady;

    const double cdxady = cdx * ady;
    const double adxcdy = adx * cdy;
    const double blift = bdx * bdx + bdy * bdy;

    const double adxbdy = adx * bdy;
    const double bdxady = bdx * ady;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) + clift * (adxbdy - bdxady);
    const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                             (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                             (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
    if (std::fabs(det) > kIccErrBound * permanent) return sign_of(det);
    return incircle_exact(a, b, c, d);
}

int incircle(Point a, Point b, Point c, Point d) {
    if (orient2d(a, b, c) == 0) {
        throw GeometryError("incircle: collinear triangle " + to_string(a) + " " + to_string(b) + " " +
                            to_string(c) + " has no circumcircle");
    }
    return incircle_unchecked(a, b, c, d);
}

Circle circumcircle(Point a, Point b, Point c) {
    if (orient2d(a, b, c) == 0) {
        throw GeometryError("circumcircle: collinear points " + to_string(a) + " " + to_string(b) + " " +
                            to_string(c));
    }
    const Point ab = b - a;
    const Point ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    const double ab2 = norm2(ab);
    const double ac2 = norm2(ac);
    const Point offset{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
    const Point center = a + offset;
    // Report the largest of the three distances so every vertex is within
    // rounding of the returned circle.
    const double r = std::max({distance(center, a), distance(center, b), distance(center, c)});
    return {center, r};
}

double dist_point_segment(Point p, const Segment& s) {
    const Point d = s.b - s.a;
    const double len2 = norm2(d);
    if (len2 == 0.0) return distance(p, s.a);
    const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
    return distance(p, s.a + t * d);
}

namespace {

// Collinear case: q known to be on the line through p and r.
bool within_box(Point p, Point q, Point r) {
    return q.x >= std::min(p.x, r.x) && q.x <= std::max(p.x, r.x) && q.y >= std::min(p.y, r.y) &&
           q.y <= std::max(p.y, r.y);
}

}  // namespace

bool segments_intersect(const Segment& s1, const Segment& s2) {
    const int o1 = orient2d(s1.a, s1.b, s2.a);
    const int o2 = orient2d(s1.a, s1.b, s2.b);
    const int o3 = orient2d(s2.a, s2.b, s1.a);
    const int o4 = orient2d(s2.a, s2.b, s1.b);

    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && within_box(s1.a, s2.a, s1.b)) return true;
    if (o2 == 0 && within_box(s1.a, s2.b, s1.b)) return true;
    if (o3 == 0 && within_box(s2.a, s1.a, s2.b)) return true;
    if (o4 == 0 && within_box(s2.a, s1.b, s2.b)) return true;
    return false;
}

double polygon_area(std::span<const Point> vertices) {
    if (vertices.size() < 3) {
        throw GeometryError("polygon_area: need at least 3 vertices, got " + std::to_string(vertices.size()));
    }
    // Shoelace relative to the first vertex keeps cancellation small for
    // polygons far from the origin.
    const Point o = vertices[0];
    double twice = 0.0;
    for (std::size_t i = 1; i + 1 < vertices.size(); ++i) {
        twice += cross(vertices[i] - o, vertices[i + 1] - o);
    }
    return 0.5 * twice;
}

double angle_at(Point vertex, Point p, Point q) {
    const Point u = p - vertex;
    const Point v = q - vertex;
    if ((u.x == 0.0 && u.y == 0.0) || (v.x == 0.0 && v.y == 0.0)) {
        throw GeometryError("angle_at: ray endpoint coincides with vertex " + to_string(vertex));
    }
    return std::atan2(std::fabs(cross(u, v)), dot(u, v));
}

std::string to_string(Point p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%.10g, %.10g)", p.x, p.y);
    return buf;
}

}  // namespace thue
