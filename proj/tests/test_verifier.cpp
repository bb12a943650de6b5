#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "thue/verifier.hpp"

using namespace thue;
using doctest::Approx;

namespace {

const double kSqrt3 = std::numbers::sqrt3;
const double kPi = std::numbers::pi;
const double kThue = kPi / (2.0 * kSqrt3);

PackingConfiguration hex_torus() { return gen_hexagonal(Domain::torus(12.0, 6.0 * kSqrt3)); }
PackingConfiguration square_torus() { return gen_square(Domain::torus(12, 12)); }

PackingConfiguration hex_minus_one() {
    auto c = hex_torus();
    c.centers.erase(c.centers.begin() + 14);
    return c;
}

LTriangle make_lt(Point apex, Point b1, Point b2) {
    LTriangle lt;
    lt.apex_position = apex;
    lt.base_position = {b1, b2};
    const std::array<Point, 3> tri{apex, b1, b2};
    lt.area = polygon_area(tri);
    lt.basis = {b1 - apex, b2 - apex};
    lt.circumradius = circumcircle(apex, b1, b2).radius;
    return lt;
}

const PackingConfiguration& seed42() {
    static const PackingConfiguration c = greedy_saturate(gen_random(Domain::torus(40, 40), 42));
    return c;
}

}  // namespace

TEST_CASE("check_empty_circle examples") {
    const auto hex = check_empty_circle(build_diagram(hex_torus()));
    CHECK(hex.pass);
    CHECK(hex.extremal[0] == Approx(4.0 / kSqrt3).epsilon(1e-12));

    const auto sq = check_empty_circle(build_diagram(square_torus()));
    CHECK(sq.pass);
    CHECK(sq.extremal[0] == Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));

    const auto gap = check_empty_circle(build_diagram(hex_minus_one()));
    CHECK_FALSE(gap.pass);
    CHECK(gap.violations.size() == 1);
    CHECK(std::fabs(gap.extremal[0] - 4.0) <= 1e-9);
}

TEST_CASE("check_vertex_distance_angle examples") {
    const auto hex = check_vertex_distance_angle(build_diagram(hex_torus()));
    CHECK(hex.pass);
    CHECK(hex.extremal[0] == Approx(2.0 / kSqrt3).epsilon(1e-12));
    CHECK(hex.extremal[1] == Approx(2.0 * kPi / 3.0).epsilon(1e-12));

    const auto sq = check_vertex_distance_angle(build_diagram(square_torus()));
    CHECK(sq.pass);
    CHECK(sq.extremal[0] == Approx(std::sqrt(2.0)));
    CHECK(sq.extremal[1] == Approx(kPi / 2.0));

    const auto gap = check_vertex_distance_angle(build_diagram(hex_minus_one()));
    CHECK_FALSE(gap.pass);
    CHECK(std::fabs(gap.extremal[0] - 2.0) <= 1e-9);
}

TEST_CASE("check_nearest_edge examples") {
    CHECK(check_nearest_edge(build_diagram(hex_torus())).pass);
    CHECK(check_nearest_edge(build_diagram(square_torus())).pass);
    CHECK(check_nearest_edge(build_diagram(seed42())).pass);
}

TEST_CASE("report_pitteway examples") {
    const auto hex = report_pitteway(build_diagram(hex_torus()));
    CHECK(hex.pass);
    CHECK(hex.informational);
    CHECK(hex.extremal[0] == 0.0);
    CHECK(report_pitteway(build_diagram(square_torus())).extremal[0] == 0.0);

    const PackingConfiguration quad{Domain::box(10, 10, 0.5), {{3, 5}, {7, 5}, {5, 6.2}, {5, 1.5}}};
    const auto fig6 = report_pitteway(build_diagram(quad));
    CHECK(fig6.pass);
    CHECK(fig6.extremal[0] >= 1.0);
}

TEST_CASE("build_l_triangles examples") {
    const auto hex = build_l_triangles(build_diagram(hex_torus()));
    CHECK(hex.size() == 72);
    for (const auto& lt : hex) {
        CHECK(lt.area == Approx(kSqrt3).epsilon(1e-12));
        CHECK(norm(lt.basis.b1) == Approx(2.0));
        CHECK(norm(lt.basis.b2) == Approx(2.0));
        CHECK(distance(lt.base_position[0], lt.base_position[1]) == Approx(2.0));
    }

    const auto sq = build_l_triangles(build_diagram(square_torus()));
    CHECK(sq.size() == 72);
    for (const auto& lt : sq) CHECK(lt.area == Approx(2.0).epsilon(1e-12));

    PackingConfiguration five{Domain::box(20, 20, 1), {}};
    for (int k = 0; k < 5; ++k) {
        const double t = 2.0 * kPi * k / 5.0;
        five.centers.push_back({10 + 1.9 * std::cos(t), 10 + 1.9 * std::sin(t)});
    }
    const auto fan = build_l_triangles(build_diagram(five));
    REQUIRE(fan.size() == 3);
    double sum = 0.0;
    for (const auto& lt : fan) {
        sum += lt.area;
        CHECK(lt.apex.index == fan[0].apex.index);
    }
    std::vector<Point> ccw = five.centers;
    CHECK(sum == Approx(polygon_area(ccw)).epsilon(1e-12));
}

TEST_CASE("l_triangle generators lie on the vertex circle") {
    const auto dia = build_diagram(seed42());
    for (const auto& lt : build_l_triangles(dia)) {
        const Point y = dia.vertices[lt.vertex].position;
        const double r = dia.vertices[lt.vertex].circumradius;
        CHECK(std::fabs(distance(lt.apex_position, y) - r) <= 1e-7);
        CHECK(std::fabs(distance(lt.base_position[0], y) - r) <= 1e-7);
        CHECK(std::fabs(distance(lt.base_position[1], y) - r) <= 1e-7);
        CHECK(lt.area > 0.0);
        CHECK(std::fabs(lt.area - 0.5 * std::fabs(det(lt.basis))) <= 1e-12 * lt.area);
    }
}

TEST_CASE("check_sector examples") {
    const auto eq = check_sector({make_lt({0, 0}, {2, 0}, {1, kSqrt3})});
    CHECK(eq.pass);
    CHECK(eq.extremal[0] == Approx(kSqrt3));

    const auto sq = check_sector({make_lt({0, 0}, {2, 0}, {0, 2})});
    CHECK(sq.pass);
    CHECK(sq.extremal[0] == Approx(std::sqrt(2.0)));

    // Apex touching both base circles on a circle of radius R: the chord
    // sits at distance 2/R from the apex, tending to 1 as R -> 2.
    const double r = 2.0 - 0.01;
    const double phi = 2.0 * std::asin(1.0 / r);
    const auto on = [&](double t) { return Point{r * std::cos(t), r * std::sin(t)}; };
    const auto limit = check_sector({make_lt(on(0.0), on(phi), on(-phi))});
    CHECK(limit.pass);
    CHECK(limit.extremal[0] == Approx(2.0 / r).epsilon(1e-12));
    CHECK(limit.extremal[0] > 1.0);

    const auto cut = check_sector({make_lt({0, 0}, {2, 0.5}, {-2, 0.5})});
    CHECK_FALSE(cut.pass);
}

TEST_CASE("related_parallelogram examples") {
    const auto hex = related_parallelogram(make_lt({0, 0}, {2, 0}, {1, kSqrt3}));
    CHECK(hex.fourth_point.x == Approx(3.0));
    CHECK(hex.fourth_point.y == Approx(kSqrt3));
    CHECK(hex.admissible);
    CHECK(hex.det_abs == Approx(2 * kSqrt3));

    const auto sq = related_parallelogram(make_lt({0, 0}, {2, 0}, {0, 2}));
    CHECK(sq.fourth_point == Point{2, 2});
    CHECK(sq.admissible);
    CHECK(sq.det_abs == 4.0);

    // Base circles 1.5 apart: not a packing, so the fourth point is too close.
    const auto short_base = related_parallelogram(make_lt({0, -2.5}, {-0.75, 0}, {0.75, 0}));
    CHECK_FALSE(short_base.admissible);
    CHECK(short_base.shortest == Approx(1.5));
}

TEST_CASE("check_area_relation on many triangles") {
    const auto lts = build_l_triangles(build_diagram(greedy_saturate(gen_random(Domain::torus(56, 56), 42))));
    CHECK(lts.size() >= 1000);
    CHECK(check_area_relation(lts).pass);
    CHECK(check_area_relation({make_lt({0, 0}, {2, 0}, {1, kSqrt3})}).extremal[0] <= 1e-12);
}

TEST_CASE("local_density examples") {
    const auto hex = build_diagram(hex_torus());
    CHECK(local_density(hex.cells[0]) == Approx(kThue).epsilon(1e-12));
    const auto sq = build_diagram(square_torus());
    CHECK(local_density(sq.cells[0]) == Approx(kPi / 4).epsilon(1e-12));
    for (const auto& c : build_diagram(seed42()).cells) CHECK(local_density(c) <= 0.9068996821 + 1e-9);
    VoronoiCell empty;
    CHECK_THROWS_AS(local_density(empty), GeometryError);
}

TEST_CASE("check_thue examples") {
    const Report hex = check_thue(hex_torus());
    CHECK(hex.verdict);
    CHECK(hex.l_triangles.count == 72);
    CHECK(hex.l_triangles.min_area == Approx(kSqrt3).epsilon(1e-12));
    CHECK(hex.density == Approx(kThue).epsilon(1e-12));
    CHECK(hex.skipped.empty());
    CHECK(hex.checks.size() == check_ids().size());

    const Report sq = check_thue(square_torus());
    CHECK(sq.verdict);
    CHECK(sq.l_triangles.min_area == Approx(2.0));
    CHECK(sq.density == Approx(kPi / 4));

    const Report r = check_thue(seed42());
    CHECK(r.verdict);
    CHECK(r.l_triangles.min_area >= kSqrt3 - 1e-9);
    CHECK(r.density <= kThue + 1e-9);
}

TEST_CASE("unsaturated packings fail and skip dependent checks") {
    const Report r = check_thue(hex_minus_one());
    CHECK_FALSE(r.verdict);
    CHECK_FALSE(r.saturation.saturated);
    CHECK_FALSE(r.find("saturation")->pass);
    CHECK(r.find("sector") == nullptr);
    CHECK(std::find(r.skipped.begin(), r.skipped.end(), "density_bound") != r.skipped.end());

    // All three failures point at the removed site.
    const Point site = r.saturation.witness->center;
    for (const char* id : {"saturation", "empty_circle", "vertex_distance_angle"}) {
        const CheckResult* c = r.find(id);
        REQUIRE(c != nullptr);
        CHECK_FALSE(c->pass);
        for (const auto& v : c->violations) CHECK(distance(v.where, site) <= 1e-7);
    }
}

TEST_CASE("check selection and input errors") {
    VerifyOptions only;
    only.checks = {"empty_circle", "cell_tiling"};
    const Report r = check_thue(hex_torus(), only);
    CHECK(r.checks.size() == 3);
    CHECK(r.find("saturation") != nullptr);
    CHECK(r.find("sector") == nullptr);

    VerifyOptions bogus;
    bogus.checks = {"nope"};
    CHECK_THROWS_AS(check_thue(hex_torus(), bogus), PackingError);

    CHECK_THROWS_AS(check_thue({Domain::torus(10, 10), {{0, 0}, {1, 0}, {5, 5}}}), PackingError);
    CHECK_THROWS_AS(check_thue({Domain::torus(10, 10), {{0, 0}, {5, 5}}}), PackingError);
}

TEST_CASE("box reports exclude boundary cells") {
    const Report r = check_thue(greedy_saturate(gen_random(Domain::box(30, 30, 4), 3)));
    CHECK(r.verdict);
    CHECK(r.excluded_cells > 0);
    CHECK(r.analyzed_cells > 0);
}

TEST_CASE("apex choice does not change area or admissibility") {
    const auto dia = build_diagram(seed42());
    for (const auto& v : dia.vertices) {
        if (v.degree() != 3) continue;
        const Point p[3] = {dia.position(v.generators[0]), dia.position(v.generators[1]), dia.position(v.generators[2])};
        const auto a = make_lt(p[0], p[1], p[2]);
        const auto b = make_lt(p[1], p[2], p[0]);
        const auto c = make_lt(p[2], p[0], p[1]);
        CHECK(b.area == Approx(a.area).epsilon(1e-12));
        CHECK(c.area == Approx(a.area).epsilon(1e-12));
        CHECK(related_parallelogram(a).admissible);
        CHECK(related_parallelogram(b).admissible);
        CHECK(related_parallelogram(c).admissible);
        CHECK(std::fabs(det(b.basis)) == Approx(std::fabs(det(a.basis))).epsilon(1e-12));
    }
}

TEST_CASE("Thue chain on random saturated tori") {
    for (std::uint64_t seed = 100; seed < 150; ++seed) {
        CAPTURE(seed);
        const auto a = analyze(greedy_saturate(gen_random(Domain::torus(24, 24), seed)));
        CHECK(a.report.verdict);
        CHECK(a.report.l_triangles.min_area >= kSqrt3 - 1e-9);
        CHECK(a.report.density <= kThue + 1e-9);
        double sum = 0.0;
        for (const auto& lt : a.l_triangles) {
            sum += lt.area;
            if (std::fabs(lt.area - kSqrt3) <= 1e-6) {
                CHECK(hexagonal_shape(gauss_reduce(lt.basis).basis, 1e-4));
                CHECK(2 * lt.circumradius < 4 - 1e-3);
            }
        }
        CHECK(std::fabs(sum - 576.0) <= 1e-8 * 576.0);
        CHECK(a.l_triangles.size() == 2 * a.report.n);
    }
}
