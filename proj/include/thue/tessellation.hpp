#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "thue/geom.hpp"
#include "thue/packing.hpp"

namespace thue {

class TessellationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A center translated by whole periods: centers[index] + (sx*w, sy*h).
/// Shifts are always zero for box domains.
struct LiftedIndex {
    std::uint32_t index = 0;
    int sx = 0;
    int sy = 0;

    LiftedIndex shifted(int dx, int dy) const { return {index, sx + dx, sy + dy}; }
    friend auto operator<=>(const LiftedIndex&, const LiftedIndex&) = default;
};

/// Exact lexicographic order of the lifted positions (x, then y).
bool lifted_lex_less(const PackingConfiguration& config, const LiftedIndex& a, const LiftedIndex& b);

Point lifted_position(const PackingConfiguration& config, const LiftedIndex& v);

struct DelaunayTriangle {
    std::array<LiftedIndex, 3> v;  // counterclockwise, v[0] lexicographically smallest of its polygon
};

/// Delaunay triangulation. On a torus it holds one representative per
/// periodic triangle; on a box it triangulates the convex hull.
///
/// Cocircular point sets are triangulated as a fan from their
/// lexicographically smallest point, so the result does not depend on the
/// insertion order and is translation-consistent on the torus.
struct Triangulation {
    PackingConfiguration config;
    std::vector<DelaunayTriangle> triangles;
    /// adjacency[t][k]: triangle across the edge opposite v[k], -1 on the hull.
    std::vector<std::array<int, 3>> adjacency;

    std::array<Point, 3> points(std::size_t t) const;
    double area(std::size_t t) const;
};

/// Throws TessellationError for all-collinear input, and on a torus whose
/// periods are too short for the replicated construction (a circumradius
/// reaching min(width, height) / 2).
Triangulation delaunay(const PackingConfiguration& config, const Tolerances& tol = {});

/// A Voronoi vertex translated by whole periods.
struct VertexRef {
    int vertex = -1;
    int sx = 0;
    int sy = 0;
    friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

struct VoronoiVertex {
    Point position;  // torus: in [0,w) x [0,h)
    /// Centers on the empty circle, in the frame of `position`,
    /// counterclockwise starting from the lexicographically smallest.
    std::vector<LiftedIndex> generators;
    double circumradius = 0.0;  // distance to the nearest generator
    double max_generator_distance = 0.0;
    bool analyzed = true;
    std::vector<int> triangles;

    std::size_t degree() const { return generators.size(); }
};

enum class EdgeLabel { pitteway, non_pitteway };
enum class VertexKind { regular, degenerate };

struct VoronoiEdge {
    /// generators[0] has zero shift; the segment lives in its frame.
    std::array<LiftedIndex, 2> generators;
    std::array<VertexRef, 2> vertices;
    Segment segment;
    EdgeLabel label = EdgeLabel::pitteway;
};

struct CellSide {
    LiftedIndex neighbor;  // in the frame of the cell center
    int edge = -1;
};

struct VoronoiCell {
    std::size_t center = 0;
    /// Counterclockwise corners; side k joins corners[k] and corners[k+1].
    /// Empty for unbounded (box hull) cells.
    std::vector<VertexRef> corners;
    std::vector<CellSide> sides;
    /// Counterclockwise polygon in the frame of the center, clipped to the
    /// box for box domains.
    std::vector<Point> polygon;
    double area = 0.0;
    bool bounded = true;
    bool clipped = false;
    bool analyzed = true;
};

struct VoronoiDiagram {
    Triangulation triangulation;
    Tolerances tol;
    std::vector<VoronoiVertex> vertices;  // sorted lexicographically by position
    std::vector<VoronoiEdge> edges;
    std::vector<VoronoiCell> cells;  // cells[i].center == i
    /// vertex_of_triangle[t]: merged vertex holding triangle t's circumcenter,
    /// with the shift that maps it into t's frame.
    std::vector<VertexRef> vertex_of_triangle;

    const PackingConfiguration& config() const { return triangulation.config; }
    Point position(const VertexRef& ref) const;
    Point position(const LiftedIndex& v) const { return lifted_position(config(), v); }
};

/// Dual of a triangulation. Circumcenters closer than eps_merge become one
/// vertex whose generator set is the union, which is how degenerate
/// vertices arise.
VoronoiDiagram voronoi_dual(const Triangulation& tri, const Tolerances& tol = {});

VoronoiDiagram build_diagram(const PackingConfiguration& config, const Tolerances& tol = {});

VertexKind classify_vertex(const VoronoiVertex& v);

/// Pitteway iff the closed segment between the two generators meets the
/// closed edge segment.
EdgeLabel classify_edge_pitteway(const VoronoiEdge& e, const PackingConfiguration& config);

/// Largest circle without centers in its interior whose center lies in the
/// analysis region: over all Voronoi vertices on a torus, over the box
/// shrunk by its margin otherwise. Ties go to the lexicographically
/// smallest center.
Circle largest_empty_circle(const VoronoiDiagram& diagram);
Circle largest_empty_circle(const PackingConfiguration& config, const Tolerances& tol = {});

struct Location {
    enum class Kind { interior, edge, vertex };
    Kind kind = Kind::interior;
    std::vector<std::size_t> nearest;  // sorted center indices at minimal distance
    double distance = 0.0;
};

/// Classifies y by the number of centers at minimal distance (within
/// eps_merge): one, two, or at least three.
Location locate_point(const PackingConfiguration& config, Point y, const Tolerances& tol = {});

struct EulerCounts {
    long vertices = 0;
    long edges = 0;
    long faces = 0;
    long characteristic() const { return vertices - edges + faces; }
};

EulerCounts euler_counts(const VoronoiDiagram& diagram);

/// V - E + F == 0. Only meaningful on a torus.
bool euler_check(const VoronoiDiagram& diagram);

/// Convex polygon clipped to the half-plane {p : dot(p, normal) <= offset}.
std::vector<Point> clip_halfplane(const std::vector<Point>& polygon, Point normal, double offset);

/// Convex polygon clipped to an axis-aligned rectangle.
std::vector<Point> clip_rect(const std::vector<Point>& polygon, Point lo, Point hi);

}  // namespace thue
