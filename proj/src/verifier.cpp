#include "thue/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace thue {

namespace {

const double kSqrt3 = std::numbers::sqrt3;
const double kThueBound = std::numbers::pi / (2.0 * std::numbers::sqrt3);

// Near-equality analysis of the Lagrange bound.
constexpr double kEqualityWindow = 1e-6;
constexpr double kHexShapeTolerance = 1e-4;
constexpr double kEqualityDiameterGap = 1e-3;

constexpr double kAreaIdentityTolerance = 1e-12;

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[128];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

std::string vertex_label(int v) { return "vertex " + std::to_string(v); }

std::string cell_label(std::size_t i) { return "cell " + std::to_string(i); }

std::string lt_label(std::size_t k, const LTriangle& lt) {
    return "l_triangle " + std::to_string(k) + " (" + vertex_label(lt.vertex) + ")";
}

double nearest_center_distance(const PackingConfiguration& config, Point p) {
    double best = kInf;
    for (const Point& c : config.centers) best = std::min(best, config.domain.metric_distance(p, c));
    return best;
}

double relative_gap(double value, double target) {
    const double scale = std::max(std::fabs(target), std::numeric_limits<double>::min());
    return std::fabs(value - target) / scale;
}

double convex_hull_area(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return 0.0;
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (const Point& p : pts) {
        while (k >= 2 && orient2d(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && orient2d(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull.size() >= 3 ? polygon_area(hull) : 0.0;
}

}  // namespace

void CheckResult::fail(std::string location, Point where, double value) {
    pass = false;
    violations.push_back({std::move(location), where, value});
}

std::vector<LTriangle> build_l_triangles(const VoronoiDiagram& dia) {
    std::vector<LTriangle> out;
    for (std::size_t vi = 0; vi < dia.vertices.size(); ++vi) {
        const VoronoiVertex& v = dia.vertices[vi];
        if (!v.analyzed) continue;
        if (v.degree() < 3) {
            throw TessellationError("build_l_triangles: " + vertex_label(static_cast<int>(vi)) +
                                    " has fewer than 3 generators");
        }
        const auto& g = v.generators;
        for (std::size_t k = 1; k + 1 < g.size(); ++k) {
            LTriangle lt;
            lt.vertex = static_cast<int>(vi);
            lt.apex = g[0];
            lt.base = {g[k], g[k + 1]};
            lt.apex_position = dia.position(g[0]);
            lt.base_position = {dia.position(g[k]), dia.position(g[k + 1])};
            const std::array<Point, 3> tri{lt.apex_position, lt.base_position[0], lt.base_position[1]};
            lt.area = polygon_area(tri);
            lt.basis = {lt.base_position[0] - lt.apex_position, lt.base_position[1] - lt.apex_position};
            lt.circumradius = v.circumradius;
            out.push_back(lt);
        }
    }
    return out;
}

RelatedParallelogram related_parallelogram(const LTriangle& lt, const Tolerances& tol) {
    RelatedParallelogram rp;
    rp.basis = lt.basis;
    rp.fourth_point = lt.apex_position + lt.basis.b1 + lt.basis.b2;
    rp.det_abs = std::fabs(det(lt.basis));
    rp.shortest = norm(shortest_vector(lt.basis, tol));
    rp.admissible = rp.shortest >= 2.0 - tol.eps_eq;
    return rp;
}

double local_density(const VoronoiCell& cell) {
    if (!(cell.area > 0.0)) {
        throw GeometryError("local_density: " + cell_label(cell.center) + " has non-positive area");
    }
    return std::numbers::pi / cell.area;
}

CheckResult check_empty_circle(const VoronoiDiagram& dia) {
    const Tolerances& tol = dia.tol;
    CheckResult r{"empty_circle"};
    double max_diameter = 0.0;
    for (std::size_t vi = 0; vi < dia.vertices.size(); ++vi) {
        const VoronoiVertex& v = dia.vertices[vi];
        if (!v.analyzed) continue;
        const double diameter = 2.0 * v.circumradius;
        max_diameter = std::max(max_diameter, diameter);
        const double nearest = nearest_center_distance(dia.config(), v.position);
        if (nearest < v.circumradius - tol.eps_merge) {
            r.fail(vertex_label(static_cast<int>(vi)) + ": center inside circumcircle", v.position, nearest);
        }
        if (!(diameter < 4.0 - tol.eps_eq)) {
            r.fail(vertex_label(static_cast<int>(vi)) + ": circumdiameter not below 4", v.position, diameter);
        }
    }
    r.extremal = {max_diameter};
    return r;
}

CheckResult check_vertex_distance_angle(const VoronoiDiagram& dia) {
    const Tolerances& tol = dia.tol;
    CheckResult r{"vertex_distance_angle"};
    double max_distance = 0.0;
    double min_angle = kInf;
    for (const VoronoiCell& cell : dia.cells) {
        if (!cell.analyzed || cell.corners.empty()) continue;
        const Point center = dia.config().centers[cell.center];
        const std::size_t m = cell.polygon.size();
        for (std::size_t k = 0; k < m; ++k) {
            const Point p = cell.polygon[k];
            const double d = distance(p, center);
            const double angle = angle_at(p, cell.polygon[(k + m - 1) % m], cell.polygon[(k + 1) % m]);
            max_distance = std::max(max_distance, d);
            min_angle = std::min(min_angle, angle);
            const int v = cell.corners[k].vertex;
            const Point where = dia.vertices[v].position;
            const std::string loc = cell_label(cell.center) + " corner " + std::to_string(k) + " (" + vertex_label(v) + ")";
            if (!(d < 2.0 - tol.eps_eq)) r.fail(loc + ": distance not below 2", where, d);
            if (angle < std::numbers::pi / 3.0 - tol.eps_eq) r.fail(loc + ": angle below pi/3", where, angle);
        }
    }
    r.extremal = {max_distance, min_angle == kInf ? 0.0 : min_angle};
    return r;
}

CheckResult check_nearest_edge(const VoronoiDiagram& dia) {
    const Tolerances& tol = dia.tol;
    const PackingConfiguration& config = dia.config();
    const Domain& domain = config.domain;
    CheckResult r{"nearest_edge"};
    double min_length = kInf;
    for (const VoronoiCell& cell : dia.cells) {
        if (!cell.analyzed || cell.corners.empty()) continue;
        const std::size_t i = cell.center;
        const Point ci = config.centers[i];
        double dmin = kInf;
        for (std::size_t j = 0; j < config.centers.size(); ++j) {
            if (j != i) dmin = std::min(dmin, domain.metric_distance(ci, config.centers[j]));
        }
        for (std::size_t j = 0; j < config.centers.size(); ++j) {
            if (j == i) continue;
            const Point d = domain.min_image(config.centers[j] - ci);
            if (norm(d) > dmin + tol.eps_eq) continue;
            const Point cj = ci + d;
            LiftedIndex neighbor{static_cast<std::uint32_t>(j), 0, 0};
            if (domain.periodic()) {
                neighbor.sx = static_cast<int>(std::lround((cj.x - config.centers[j].x) / domain.width));
                neighbor.sy = static_cast<int>(std::lround((cj.y - config.centers[j].y) / domain.height));
            }
            const std::string loc = cell_label(i) + " nearest neighbor " + std::to_string(j);
            const auto side = std::find_if(cell.sides.begin(), cell.sides.end(),
                                           [&](const CellSide& s) { return s.neighbor == neighbor; });
            if (side == cell.sides.end()) {
                r.fail(loc + ": bisector carries no cell edge", 0.5 * (ci + cj), 0.0);
                continue;
            }
            const std::size_t k = static_cast<std::size_t>(side - cell.sides.begin());
            const Segment edge{cell.polygon[k], cell.polygon[(k + 1) % cell.polygon.size()]};
            const double length = edge.length();
            min_length = std::min(min_length, length);
            if (!(length > tol.eps_eq)) r.fail(loc + ": edge too short", edge.midpoint(), length);
            if (!segments_intersect({ci, cj}, edge)) {
                r.fail(loc + ": segment misses edge", 0.5 * (ci + cj), dist_point_segment(0.5 * (ci + cj), edge));
            }
        }
    }
    r.extremal = {min_length == kInf ? 0.0 : min_length};
    return r;
}

CheckResult report_pitteway(const VoronoiDiagram& dia) {
    CheckResult r{"pitteway"};
    r.informational = true;
    long pitteway = 0;
    long other = 0;
    for (const VoronoiEdge& e : dia.edges) {
        if (!dia.vertices[e.vertices[0].vertex].analyzed || !dia.vertices[e.vertices[1].vertex].analyzed) continue;
        (e.label == EdgeLabel::pitteway ? pitteway : other) += 1;
    }
    r.extremal = {static_cast<double>(other)};
    r.note = std::to_string(pitteway) + " pitteway, " + std::to_string(other) + " non-pitteway edges";
    return r;
}

CheckResult check_sector(const std::vector<LTriangle>& lts, const Tolerances& tol) {
    CheckResult r{"sector"};
    double min_distance = kInf;
    for (std::size_t k = 0; k < lts.size(); ++k) {
        const LTriangle& lt = lts[k];
        const double d = dist_point_segment(lt.apex_position, {lt.base_position[0], lt.base_position[1]});
        min_distance = std::min(min_distance, d);
        if (d < 1.0 - tol.eps_eq) r.fail(lt_label(k, lt) + ": base chord cuts the apex circle", lt.apex_position, d);
    }
    r.extremal = {min_distance == kInf ? 0.0 : min_distance};
    return r;
}

CheckResult check_related_parallelogram(const std::vector<LTriangle>& lts, const Tolerances& tol) {
    CheckResult r{"related_parallelogram"};
    double min_shortest = kInf;
    for (std::size_t k = 0; k < lts.size(); ++k) {
        const RelatedParallelogram rp = related_parallelogram(lts[k], tol);
        min_shortest = std::min(min_shortest, rp.shortest);
        if (!rp.admissible) r.fail(lt_label(k, lts[k]) + ": lattice not admissible", lts[k].apex_position, rp.shortest);
    }
    r.extremal = {min_shortest == kInf ? 0.0 : min_shortest};
    return r;
}

CheckResult check_area_relation(const std::vector<LTriangle>& lts) {
    CheckResult r{"area_relation"};
    double worst = 0.0;
    for (std::size_t k = 0; k < lts.size(); ++k) {
        const double half_det = 0.5 * std::fabs(det(lts[k].basis));
        const double gap = relative_gap(lts[k].area, half_det);
        worst = std::max(worst, gap);
        if (!(gap <= kAreaIdentityTolerance)) r.fail(lt_label(k, lts[k]), lts[k].apex_position, gap);
    }
    r.extremal = {worst};
    return r;
}

CheckResult check_lagrange_bound(const std::vector<LTriangle>& lts, const Tolerances& tol) {
    CheckResult r{"lagrange_bound"};
    double min_det = kInf;
    for (std::size_t k = 0; k < lts.size(); ++k) {
        const LTriangle& lt = lts[k];
        const LagrangeRecord rec = lagrange_bound_check(lt.basis, tol);
        min_det = std::min(min_det, rec.det_abs);
        const std::string loc = lt_label(k, lt);
        if (!rec.admissible) r.fail(loc + ": not admissible", lt.apex_position, rec.shortest);
        if (!rec.bound_ok) r.fail(loc + ": determinant below 2*sqrt(3)", lt.apex_position, rec.det_abs);
        if (std::fabs(rec.det_abs - 2.0 * kSqrt3) <= kEqualityWindow) {
            if (!hexagonal_shape(gauss_reduce(lt.basis, tol).basis, kHexShapeTolerance)) {
                r.fail(loc + ": near-equality without hexagonal shape", lt.apex_position, rec.det_abs);
            }
            if (!(2.0 * lt.circumradius < 4.0 - kEqualityDiameterGap)) {
                r.fail(loc + ": near-equality at circumdiameter ~4", lt.apex_position, 2.0 * lt.circumradius);
            }
        }
    }
    r.extremal = {min_det == kInf ? 0.0 : min_det};
    return r;
}

CheckResult check_l_triangle_tiling(const VoronoiDiagram& dia, const std::vector<LTriangle>& lts) {
    CheckResult r{"l_triangle_tiling"};
    double lt_sum = 0.0;
    for (const LTriangle& lt : lts) lt_sum += lt.area;
    double polygon_sum = 0.0;
    for (const VoronoiVertex& v : dia.vertices) {
        if (!v.analyzed) continue;
        std::vector<Point> poly;
        for (const LiftedIndex& g : v.generators) poly.push_back(dia.position(g));
        polygon_sum += polygon_area(poly);
    }
    const Domain& domain = dia.config().domain;
    const double target = domain.periodic() ? domain.area() : polygon_sum;
    const double gap = std::max(relative_gap(lt_sum, target), relative_gap(polygon_sum, target));
    if (!(gap <= dia.tol.eps_area)) r.fail("sum of l_triangle areas", {0.0, 0.0}, lt_sum);
    r.extremal = {gap};
    r.note = fmt("l_triangles %.17g, target %.17g", lt_sum, target);
    return r;
}

CheckResult check_cell_tiling(const VoronoiDiagram& dia) {
    CheckResult r{"cell_tiling"};
    double sum = 0.0;
    for (const VoronoiCell& c : dia.cells) sum += c.area;
    const double target = dia.config().domain.area();
    const double gap = relative_gap(sum, target);
    if (!(gap <= dia.tol.eps_area)) r.fail("sum of cell areas", {0.0, 0.0}, sum);
    r.extremal = {gap};
    r.note = fmt("cells %.17g, domain %.17g", sum, target);
    return r;
}

CheckResult check_delaunay_tiling(const VoronoiDiagram& dia) {
    CheckResult r{"delaunay_tiling"};
    const Triangulation& tri = dia.triangulation;
    double sum = 0.0;
    for (std::size_t t = 0; t < tri.triangles.size(); ++t) sum += tri.area(t);
    const Domain& domain = dia.config().domain;
    const double target = domain.periodic() ? domain.area() : convex_hull_area(dia.config().centers);
    const double gap = relative_gap(sum, target);
    if (!(gap <= dia.tol.eps_area)) r.fail("sum of triangle areas", {0.0, 0.0}, sum);
    r.extremal = {gap};
    r.note = fmt(domain.periodic() ? "triangles %.17g, domain %.17g" : "triangles %.17g, hull %.17g", sum, target);
    return r;
}

CheckResult check_local_density(const VoronoiDiagram& dia) {
    CheckResult r{"local_density"};
    double worst = 0.0;
    for (const VoronoiCell& c : dia.cells) {
        if (!c.analyzed) continue;
        const double delta = local_density(c);
        worst = std::max(worst, delta);
        if (delta > kThueBound + dia.tol.eps_eq) {
            r.fail(cell_label(c.center), dia.config().centers[c.center], delta);
        }
    }
    r.extremal = {worst};
    return r;
}

namespace {

double report_density(const VoronoiDiagram& dia) {
    const PackingConfiguration& config = dia.config();
    if (config.domain.periodic()) return config.density();
    double area = 0.0;
    std::size_t count = 0;
    for (const VoronoiCell& c : dia.cells) {
        if (!c.analyzed) continue;
        area += c.area;
        ++count;
    }
    return area > 0.0 ? static_cast<double>(count) * std::numbers::pi / area : 0.0;
}

}  // namespace

CheckResult check_density_bound(const VoronoiDiagram& dia, const std::vector<LTriangle>& lts) {
    const Tolerances& tol = dia.tol;
    const PackingConfiguration& config = dia.config();
    CheckResult r{"density_bound"};
    const double density = report_density(dia);
    r.extremal = {density};
    if (config.domain.periodic()) {
        // n centers, 2n L-triangles each of area >= sqrt(3): the torus area
        // is at least 2n*sqrt(3).
        if (lts.size() != 2 * config.size()) {
            r.fail("l_triangle count " + std::to_string(lts.size()) + " != 2n", {0.0, 0.0},
                   static_cast<double>(lts.size()));
        }
        for (std::size_t k = 0; k < lts.size(); ++k) {
            if (lts[k].area < kSqrt3 - tol.eps_eq) r.fail(lt_label(k, lts[k]) + ": area below sqrt(3)", lts[k].apex_position, lts[k].area);
        }
    } else {
        r.note = "box: density over analyzed cells only";
    }
    if (density > kThueBound + tol.eps_eq) r.fail("density above pi/(2*sqrt(3))", {0.0, 0.0}, density);
    return r;
}

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids{
        "saturation",    "empty_circle", "vertex_distance_angle", "nearest_edge",    "pitteway",
        "sector",        "related_parallelogram", "area_relation", "lagrange_bound", "l_triangle_tiling",
        "cell_tiling",   "delaunay_tiling", "local_density", "density_bound",
    };
    return ids;
}

bool needs_saturation(const std::string& id) {
    return id == "sector" || id == "related_parallelogram" || id == "lagrange_bound" || id == "local_density" ||
           id == "density_bound";
}

const CheckResult* Report::find(const std::string& id) const {
    for (const CheckResult& c : checks) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

Analysis analyze(const PackingConfiguration& config, const VerifyOptions& options) {
    const Tolerances& tol = options.tol;
    tol.validate();
    config.domain.validate();
    for (const std::string& id : options.checks) {
        if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end()) {
            throw PackingError("unknown check id '" + id + "'");
        }
    }
    const auto bad = validate(config, tol);
    if (!bad.empty()) {
        const Violation& v = bad.front();
        const char* what = v.kind == Violation::Kind::overlap         ? "overlap"
                           : v.kind == Violation::Kind::out_of_domain ? "center outside domain"
                                                                      : "non-finite center";
        throw PackingError("invalid packing: " + std::to_string(bad.size()) + " violation(s), first: " + what +
                           " at index " + std::to_string(v.i) +
                           (v.kind == Violation::Kind::overlap ? "/" + std::to_string(v.j) : std::string{}));
    }
    if (config.size() < 3) throw PackingError("verification needs at least 3 centers");

    Analysis a;
    a.diagram = build_diagram(config, tol);
    a.l_triangles = build_l_triangles(a.diagram);
    const VoronoiDiagram& dia = a.diagram;

    Report& rep = a.report;
    rep.n = config.size();
    rep.domain = config.domain;
    rep.tol = tol;
    rep.density = report_density(dia);
    for (const VoronoiCell& c : dia.cells) (c.analyzed ? rep.analyzed_cells : rep.excluded_cells) += 1;

    const Circle lec = largest_empty_circle(dia);
    rep.saturation = {lec.radius < 2.0 - tol.eps_eq, lec};
    CheckResult sat{"saturation"};
    sat.extremal = {lec.radius};
    if (!rep.saturation.saturated) sat.fail("largest empty circle", lec.center, lec.radius);
    rep.checks.push_back(sat);

    const auto& lts = a.l_triangles;
    for (const std::string& id : check_ids()) {
        if (id == "saturation") continue;
        if (!options.checks.empty() && !options.checks.contains(id)) continue;
        if (needs_saturation(id) && !rep.saturation.saturated) {
            rep.skipped.push_back(id);
            continue;
        }
        if (id == "empty_circle") rep.checks.push_back(check_empty_circle(dia));
        else if (id == "vertex_distance_angle") rep.checks.push_back(check_vertex_distance_angle(dia));
        else if (id == "nearest_edge") rep.checks.push_back(check_nearest_edge(dia));
        else if (id == "pitteway") rep.checks.push_back(report_pitteway(dia));
        else if (id == "sector") rep.checks.push_back(check_sector(lts, tol));
        else if (id == "related_parallelogram") rep.checks.push_back(check_related_parallelogram(lts, tol));
        else if (id == "area_relation") rep.checks.push_back(check_area_relation(lts));
        else if (id == "lagrange_bound") rep.checks.push_back(check_lagrange_bound(lts, tol));
        else if (id == "l_triangle_tiling") rep.checks.push_back(check_l_triangle_tiling(dia, lts));
        else if (id == "cell_tiling") rep.checks.push_back(check_cell_tiling(dia));
        else if (id == "delaunay_tiling") rep.checks.push_back(check_delaunay_tiling(dia));
        else if (id == "local_density") rep.checks.push_back(check_local_density(dia));
        else if (id == "density_bound") rep.checks.push_back(check_density_bound(dia, lts));
    }

    rep.l_triangles.count = lts.size();
    if (!lts.empty()) {
        rep.l_triangles.min_area = kInf;
        for (const LTriangle& lt : lts) {
            rep.l_triangles.min_area = std::min(rep.l_triangles.min_area, lt.area);
            rep.l_triangles.max_area = std::max(rep.l_triangles.max_area, lt.area);
        }
    }
    rep.verdict = std::all_of(rep.checks.begin(), rep.checks.end(), [](const CheckResult& c) { return c.pass; });
    return a;
}

Report check_thue(const PackingConfiguration& config, const VerifyOptions& options) {
    return analyze(config, options).report;
}

}  // namespace thue
