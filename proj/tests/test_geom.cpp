#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "rational_oracle.hpp"
#include "thue/expansion.hpp"
#include "thue/geom.hpp"

using namespace thue;
using doctest::Approx;

namespace {

const double kSqrt3 = std::numbers::sqrt3;
const double kPi = std::numbers::pi;

Point random_point(std::mt19937_64& rng, double s = 10.0) {
    std::uniform_real_distribution<double> u(-s, s);
    return {u(rng), u(rng)};
}

}  // namespace

TEST_CASE("orient2d examples") {
    CHECK(orient2d({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orient2d({0, 0}, {1, 0}, {2, 0}) == 0);
    CHECK(orient2d({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("incircle examples") {
    CHECK(incircle({0, 0}, {2, 0}, {0, 2}, {1, 1}) == 1);
    CHECK(incircle({0, 0}, {2, 0}, {0, 2}, {2, 2}) == 0);
    CHECK(incircle({0, 0}, {2, 0}, {0, 2}, {5, 5}) == -1);
    CHECK_THROWS_AS(incircle({0, 0}, {1, 0}, {2, 0}, {5, 5}), GeometryError);
}

TEST_CASE("incircle flips for clockwise triangles") {
    CHECK(incircle({0, 0}, {0, 2}, {2, 0}, {1, 1}) == -1);
}

TEST_CASE("circumcircle examples") {
    const Circle hex = circumcircle({0, 0}, {2, 0}, {1, kSqrt3});
    CHECK(hex.center.x == Approx(1.0).epsilon(1e-12));
    CHECK(hex.center.y == Approx(0.5773502692).epsilon(1e-10));
    CHECK(hex.radius == Approx(1.1547005384).epsilon(1e-10));

    const Circle right = circumcircle({0, 0}, {2, 0}, {0, 2});
    CHECK(right.center.x == Approx(1.0));
    CHECK(right.center.y == Approx(1.0));
    CHECK(right.radius == Approx(std::sqrt(2.0)));

    CHECK_THROWS_AS(circumcircle({0, 0}, {1, 0}, {2, 0}), GeometryError);
}

TEST_CASE("dist_point_segment examples") {
    CHECK(dist_point_segment({0, 0}, {{2, 0}, {0, 2}}) == Approx(std::sqrt(2.0)));
    CHECK(dist_point_segment({0, 0}, {{1, 1}, {2, 1}}) == Approx(std::sqrt(2.0)));
    CHECK(dist_point_segment({1, 0}, {{0, 0}, {2, 0}}) == 0.0);
    CHECK(dist_point_segment({3, 4}, {{0, 0}, {0, 0}}) == Approx(5.0));
}

TEST_CASE("segments_intersect examples") {
    CHECK(segments_intersect({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}));
    CHECK_FALSE(segments_intersect({{0, 0}, {1, 0}}, {{2, 0}, {3, 0}}));
    CHECK(segments_intersect({{0, 0}, {1, 1}}, {{1, 1}, {2, 0}}));
    CHECK(segments_intersect({{0, 0}, {3, 0}}, {{1, 0}, {2, 0}}));
    CHECK_FALSE(segments_intersect({{0, 0}, {1, 1}}, {{0, 1}, {0.4, 0.6000000001}}));
}

TEST_CASE("polygon_area examples") {
    const std::vector<Point> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    CHECK(polygon_area(square) == Approx(1.0));

    std::vector<Point> hexagon;
    const double r = 2.0 / kSqrt3;
    for (int k = 0; k < 6; ++k) hexagon.push_back({r * std::cos(k * kPi / 3), r * std::sin(k * kPi / 3)});
    CHECK(polygon_area(hexagon) == Approx(2.0 * kSqrt3).epsilon(1e-12));

    const std::vector<Point> tri{{0, 0}, {2, 0}, {1, kSqrt3}};
    CHECK(polygon_area(tri) == Approx(kSqrt3).epsilon(1e-12));

    const std::vector<Point> two{{0, 0}, {1, 0}};
    CHECK_THROWS_AS(polygon_area(two), GeometryError);
}

TEST_CASE("angle_at examples") {
    CHECK(angle_at({0, 0}, {1, 0}, {0, 1}) == Approx(kPi / 2));
    CHECK(angle_at({0, 0}, {1, 0}, {1, std::tan(kPi / 3)}) == Approx(kPi / 3));
    CHECK(angle_at({0, 0}, {1, 0}, {-1, 0}) == Approx(kPi));
    CHECK_THROWS_AS(angle_at({0, 0}, {0, 0}, {1, 0}), GeometryError);
}

TEST_CASE("tolerances validate") {
    CHECK_NOTHROW(Tolerances{}.validate());
    CHECK_THROWS(Tolerances{0.0, 1e-7, 1e-8}.validate());
    CHECK_THROWS(Tolerances{1e-6, 1e-7, 1e-8}.validate());
}

TEST_CASE("expansion arithmetic is exact") {
    const Expansion big(0x1.0p60);
    const Expansion tiny(0x1.0p-60);
    const Expansion sum = big + tiny;
    CHECK(sum.size() == 2);
    CHECK((sum - big - tiny).sign() == 0);
    CHECK(Expansion::product(0x1.0000001p0, 0x1.0000001p0).size() == 2);
    CHECK((Expansion::difference(1.0, 0x1.0p-80) - Expansion(1.0)).sign() == -1);
    CHECK((-Expansion(3.0)).sign() == -1);
    CHECK(Expansion(3.0).scaled(-2.0).estimate() == -6.0);
}

TEST_CASE("orient2d is antisymmetric") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
        const int s = orient2d(a, b, c);
        CHECK(orient2d(b, a, c) == -s);
        CHECK(orient2d(a, c, b) == -s);
        CHECK(orient2d(c, b, a) == -s);
        CHECK(orient2d(b, c, a) == s);
    }
}

TEST_CASE("incircle symmetry under permutation") {
    std::mt19937_64 rng(12);
    int tested = 0;
    while (tested < 1000) {
        const Point a = random_point(rng), b = random_point(rng), c = random_point(rng), d = random_point(rng);
        if (orient2d(a, b, c) == 0 || incircle(a, b, c, d) == 0) continue;
        const int s = incircle(a, b, c, d);
        CHECK(incircle(b, c, a, d) == s);
        CHECK(incircle(c, a, b, d) == s);
        CHECK(incircle(b, a, c, d) == -s);
        CHECK(incircle(a, c, b, d) == -s);
        ++tested;
    }
}

TEST_CASE("circumcircle radius is equidistant") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
        if (orient2d(a, b, c) == 0) continue;
        const Circle k = circumcircle(a, b, c);
        if (k.radius > 1e4) continue;  // near-collinear: center is ill-conditioned
        const double eps = 1e-9 * std::max(1.0, k.radius);
        CHECK(std::fabs(distance(k.center, a) - k.radius) <= eps);
        CHECK(std::fabs(distance(k.center, b) - k.radius) <= eps);
        CHECK(std::fabs(distance(k.center, c) - k.radius) <= eps);
    }
}

TEST_CASE("triangle area equals half the determinant") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 1000; ++i) {
        const Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
        const double half_det = 0.5 * std::fabs(cross(b - a, c - a));
        const std::vector<Point> tri{a, b, c};
        CHECK(std::fabs(std::fabs(polygon_area(tri)) - half_det) <= 1e-12 * std::max(half_det, 1e-300));
    }
}

TEST_CASE("predicates agree with rational arithmetic on near-degenerate input") {
    const auto collinear = oracle::adversarial(10000, 21, false);
    int orient_mismatch = 0;
    int orient_zero = 0;
    for (const auto& q : collinear) {
        const int exact = oracle::orient2d(q.a, q.b, q.c);
        orient_mismatch += orient2d(q.a, q.b, q.c) != exact;
        orient_zero += exact == 0;
    }
    CHECK(orient_mismatch == 0);
    CHECK(orient_zero >= 1000);

    const auto cocircular = oracle::adversarial(10000, 22, true);
    int circle_mismatch = 0;
    for (const auto& q : cocircular) {
        if (oracle::orient2d(q.a, q.b, q.c) == 0) continue;
        circle_mismatch += incircle(q.a, q.b, q.c, q.d) != oracle::incircle(q.a, q.b, q.c, q.d);
    }
    CHECK(circle_mismatch == 0);
}
