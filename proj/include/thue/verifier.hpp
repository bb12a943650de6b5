#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "thue/lattice.hpp"
#include "thue/packing.hpp"
#include "thue/tessellation.hpp"

namespace thue {

/// Triangle of three generators of one Voronoi vertex: apex x_i and base
/// x_i1, x_i2, counterclockwise. Positions are in the vertex's frame.
struct LTriangle {
    int vertex = -1;
    LiftedIndex apex;
    std::array<LiftedIndex, 2> base;
    Point apex_position;
    std::array<Point, 2> base_position;
    double area = 0.0;  // shoelace
    Basis2 basis;       // base - apex
    double circumradius = 0.0;
};

/// Fan (g0, gk, gk+1) over the counterclockwise generators of every
/// analyzed vertex, g0 being the lexicographically smallest.
std::vector<LTriangle> build_l_triangles(const VoronoiDiagram& diagram);

struct RelatedParallelogram {
    Basis2 basis;
    Point fourth_point;
    bool admissible = false;
    double det_abs = 0.0;
    double shortest = 0.0;
};

/// Completes the L-triangle to the parallelogram apex, apex+b1,
/// apex+b1+b2, apex+b2. Throws LatticeError for a degenerate basis.
RelatedParallelogram related_parallelogram(const LTriangle& lt, const Tolerances& tol = {});

/// pi / area. Throws GeometryError for a non-positive area.
double local_density(const VoronoiCell& cell);

struct CheckViolation {
    std::string location;
    Point where;
    double value = 0.0;
};

struct CheckResult {
    explicit CheckResult(std::string check_id = {}) : id(std::move(check_id)) {}

    std::string id;
    bool pass = true;
    /// One value, or two for checks bounding two quantities.
    std::vector<double> extremal;
    std::vector<CheckViolation> violations;
    bool informational = false;
    std::string note;

    void fail(std::string location, Point where, double value);
};

CheckResult check_empty_circle(const VoronoiDiagram& diagram);
CheckResult check_vertex_distance_angle(const VoronoiDiagram& diagram);
CheckResult check_nearest_edge(const VoronoiDiagram& diagram);
CheckResult report_pitteway(const VoronoiDiagram& diagram);
CheckResult check_sector(const std::vector<LTriangle>& lts, const Tolerances& tol = {});
CheckResult check_related_parallelogram(const std::vector<LTriangle>& lts, const Tolerances& tol = {});
CheckResult check_area_relation(const std::vector<LTriangle>& lts);
CheckResult check_lagrange_bound(const std::vector<LTriangle>& lts, const Tolerances& tol = {});
CheckResult check_l_triangle_tiling(const VoronoiDiagram& diagram, const std::vector<LTriangle>& lts);
CheckResult check_cell_tiling(const VoronoiDiagram& diagram);
CheckResult check_delaunay_tiling(const VoronoiDiagram& diagram);
CheckResult check_local_density(const VoronoiDiagram& diagram);
CheckResult check_density_bound(const VoronoiDiagram& diagram, const std::vector<LTriangle>& lts);

/// Check ids in pipeline order.
const std::vector<std::string>& check_ids();
/// Checks that need a saturated packing; skipped otherwise.
bool needs_saturation(const std::string& id);

struct LTriangleStats {
    std::size_t count = 0;
    double min_area = 0.0;
    double max_area = 0.0;
};

struct Report {
    std::size_t n = 0;
    Domain domain;
    double density = 0.0;
    Tolerances tol;
    SaturationCertificate saturation;
    std::vector<CheckResult> checks;
    std::vector<std::string> skipped;
    LTriangleStats l_triangles;
    std::size_t analyzed_cells = 0;
    std::size_t excluded_cells = 0;
    bool verdict = false;

    const CheckResult* find(const std::string& id) const;
};

struct VerifyOptions {
    Tolerances tol;
    /// Subset of check_ids(); empty runs all. Saturation always runs.
    std::set<std::string> checks;
};

struct Analysis {
    VoronoiDiagram diagram;
    std::vector<LTriangle> l_triangles;
    Report report;
};

/// Full pipeline on one packing. Throws PackingError for an invalid packing
/// or unknown check id; construction errors propagate.
Analysis analyze(const PackingConfiguration& config, const VerifyOptions& options = {});

Report check_thue(const PackingConfiguration& config, const VerifyOptions& options = {});

}  // namespace thue
