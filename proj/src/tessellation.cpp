#include "thue/tessellation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace thue {

namespace {

// Incremental Bowyer-Watson over a fixed point set, enclosed by a large
// super-triangle whose vertices are the last three points.
class BowyerWatson {
public:
    explicit BowyerWatson(std::vector<Point> points) : p_(std::move(points)), n_real_(static_cast<int>(p_.size())) {
        add_super_triangle();
        for (int id : insertion_order()) insert(id);
    }

    std::vector<std::array<int, 3>> real_triangles() const {
        std::vector<std::array<int, 3>> out;
        for (const Tri& t : t_) {
            if (t.alive && t.v[0] < n_real_ && t.v[1] < n_real_ && t.v[2] < n_real_) out.push_back(t.v);
        }
        return out;
    }

private:
    struct Tri {
        std::array<int, 3> v{};
        std::array<int, 3> n{-1, -1, -1};  // across the edge opposite v[k]
        bool alive = true;
    };

    struct BoundaryEdge {
        int a;
        int b;
        int outer;
    };

    void add_super_triangle() {
        double lo_x = p_[0].x;
        double hi_x = p_[0].x;
        double lo_y = p_[0].y;
        double hi_y = p_[0].y;
        for (const Point& q : p_) {
            lo_x = std::min(lo_x, q.x);
            hi_x = std::max(hi_x, q.x);
            lo_y = std::min(lo_y, q.y);
            hi_y = std::max(hi_y, q.y);
        }
        const double cx = 0.5 * (lo_x + hi_x);
        const double cy = 0.5 * (lo_y + hi_y);
        // Far enough that hull edges of the real points survive unless a
        // point sits within ~span^2 / R of a hull edge.
        const double r = 1e7 * (std::max(hi_x - lo_x, hi_y - lo_y) + 1.0);
        p_.push_back({cx - 2.0 * r, cy - r});
        p_.push_back({cx + 2.0 * r, cy - r});
        p_.push_back({cx, cy + 2.0 * r});
        t_.push_back({{n_real_, n_real_ + 1, n_real_ + 2}, {-1, -1, -1}, true});
        last_ = 0;
    }

    // Snake order over a coarse grid keeps consecutive points close, so the
    // visibility walk stays short.
    std::vector<int> insertion_order() const {
        double lo_x = p_[0].x;
        double lo_y = p_[0].y;
        for (int i = 0; i < n_real_; ++i) {
            lo_x = std::min(lo_x, p_[i].x);
            lo_y = std::min(lo_y, p_[i].y);
        }
        std::vector<std::tuple<long, long, int>> keyed;
        keyed.reserve(n_real_);
        for (int i = 0; i < n_real_; ++i) {
            const long row = static_cast<long>(std::floor((p_[i].y - lo_y) / 4.0));
            long col = static_cast<long>(std::floor((p_[i].x - lo_x) / 4.0));
            if (row % 2 != 0) col = -col;
            keyed.emplace_back(row, col, i);
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> order;
        order.reserve(keyed.size());
        for (const auto& k : keyed) order.push_back(std::get<2>(k));
        return order;
    }

    int locate(Point q) {
        int t = last_;
        unsigned rot = 0;
        const std::size_t guard = 4 * t_.size() + 64;
        for (std::size_t step = 0; step < guard; ++step) {
            const Tri& tri = t_[t];
            int next = -1;
            for (int m = 0; m < 3; ++m) {
                const int k = static_cast<int>((m + rot) % 3);
                if (orient2d(p_[tri.v[(k + 1) % 3]], p_[tri.v[(k + 2) % 3]], q) < 0) {
                    next = tri.n[k];
                    break;
                }
            }
            if (next < 0) return t;
            t = next;
            ++rot;
        }
        throw TessellationError("point location did not terminate");
    }

    int allocate() {
        if (!free_.empty()) {
            const int id = free_.back();
            free_.pop_back();
            return id;
        }
        t_.emplace_back();
        stamp_.push_back(0);
        return static_cast<int>(t_.size()) - 1;
    }

    void insert(int pi) {
        const Point q = p_[pi];
        const int start = locate(q);
        ++epoch_;
        stamp_.resize(t_.size(), 0);

        cavity_.clear();
        cavity_.push_back(start);
        stamp_[start] = epoch_;
        for (std::size_t head = 0; head < cavity_.size(); ++head) {
            const Tri& c = t_[cavity_[head]];
            for (int k = 0; k < 3; ++k) {
                const int nb = c.n[k];
                if (nb < 0 || stamp_[nb] == epoch_) continue;
                const Tri& o = t_[nb];
                if (incircle_unchecked(p_[o.v[0]], p_[o.v[1]], p_[o.v[2]], q) > 0) {
                    stamp_[nb] = epoch_;
                    cavity_.push_back(nb);
                }
            }
        }

        boundary_.clear();
        for (int c : cavity_) {
            const Tri& tri = t_[c];
            for (int k = 0; k < 3; ++k) {
                const int nb = tri.n[k];
                if (nb >= 0 && stamp_[nb] == epoch_) continue;
                boundary_.push_back({tri.v[(k + 1) % 3], tri.v[(k + 2) % 3], nb});
            }
        }
        for (int c : cavity_) {
            t_[c].alive = false;
            free_.push_back(c);
        }

        created_.clear();
        for (const BoundaryEdge& e : boundary_) {
            const int id = allocate();
            t_[id] = Tri{{e.a, e.b, pi}, {-1, -1, e.outer}, true};
            if (e.outer >= 0) {
                Tri& o = t_[e.outer];
                for (int j = 0; j < 3; ++j) {
                    if (o.v[(j + 1) % 3] == e.b && o.v[(j + 2) % 3] == e.a) o.n[j] = id;
                }
            }
            created_.push_back(id);
        }
        for (int id : created_) {
            Tri& tri = t_[id];
            for (int other : created_) {
                const Tri& o = t_[other];
                if (o.v[0] == tri.v[1]) tri.n[0] = other;
                if (o.v[1] == tri.v[0]) tri.n[1] = other;
            }
        }
        last_ = created_.front();
    }

    std::vector<Point> p_;
    int n_real_;
    std::vector<Tri> t_;
    std::vector<int> free_;
    std::vector<unsigned> stamp_{0};
    unsigned epoch_ = 0;
    int last_ = 0;
    std::vector<int> cavity_;
    std::vector<BoundaryEdge> boundary_;
    std::vector<int> created_;
};

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<std::size_t> parent_;
};

// Groups points closer than eps. `wrap_x`/`wrap_y` > 0 enable periodic
// neighbor lookup (positions must then lie in [0, wrap)).
std::vector<std::vector<std::size_t>> cluster(const std::vector<Point>& pts, double eps, const Domain* torus) {
    UnionFind uf(pts.size());
    const double cs = 1.0;
    int nx = 0;
    int ny = 0;
    if (torus) {
        nx = std::max(1, static_cast<int>(std::floor(torus->width / cs)));
        ny = std::max(1, static_cast<int>(std::floor(torus->height / cs)));
    }
    auto cell_of = [&](Point p) {
        long cx = static_cast<long>(std::floor(p.x / cs));
        long cy = static_cast<long>(std::floor(p.y / cs));
        if (torus) {
            cx = std::clamp(static_cast<long>(std::floor(p.x / torus->width * nx)), 0L, static_cast<long>(nx - 1));
            cy = std::clamp(static_cast<long>(std::floor(p.y / torus->height * ny)), 0L, static_cast<long>(ny - 1));
        }
        return std::pair<long, long>{cx, cy};
    };
    auto key = [](long cx, long cy) { return (cx << 32) ^ (cy & 0xffffffffL); };
    std::unordered_map<long, std::vector<std::size_t>> grid;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto [cx, cy] = cell_of(pts[i]);
        for (long dy = -1; dy <= 1; ++dy) {
            for (long dx = -1; dx <= 1; ++dx) {
                long gx = cx + dx;
                long gy = cy + dy;
                if (torus) {
                    gx = (gx % nx + nx) % nx;
                    gy = (gy % ny + ny) % ny;
                }
                const auto it = grid.find(key(gx, gy));
                if (it == grid.end()) continue;
                for (std::size_t j : it->second) {
                    const double d = torus ? torus->metric_distance(pts[i], pts[j]) : distance(pts[i], pts[j]);
                    if (d <= eps) uf.unite(i, j);
                }
            }
        }
        grid[key(cx, cy)].push_back(i);
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < pts.size(); ++i) groups[uf.find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    out.reserve(groups.size());
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

using EdgeKey = std::tuple<std::uint32_t, std::uint32_t, int, int>;

// Translation-invariant identity of the segment between two lifted centers.
EdgeKey edge_key(const LiftedIndex& p, const LiftedIndex& q) {
    const EdgeKey forward{p.index, q.index, q.sx - p.sx, q.sy - p.sy};
    const EdgeKey backward{q.index, p.index, p.sx - q.sx, p.sy - q.sy};
    return std::min(forward, backward);
}

// First endpoint of the normalized key (the one placed at zero shift).
const LiftedIndex& key_origin(const LiftedIndex& p, const LiftedIndex& q) {
    const EdgeKey forward{p.index, q.index, q.sx - p.sx, q.sy - p.sy};
    const EdgeKey backward{q.index, p.index, p.sx - q.sx, p.sy - q.sy};
    return forward <= backward ? p : q;
}

std::map<EdgeKey, std::vector<std::pair<int, int>>> edge_incidence(const std::vector<DelaunayTriangle>& tris) {
    std::map<EdgeKey, std::vector<std::pair<int, int>>> edges;
    for (std::size_t t = 0; t < tris.size(); ++t) {
        for (int k = 0; k < 3; ++k) {
            const auto& v = tris[t].v;
            edges[edge_key(v[(k + 1) % 3], v[(k + 2) % 3])].emplace_back(static_cast<int>(t), k);
        }
    }
    return edges;
}

// Sorts lifted points counterclockwise around `center`, starting from the
// lexicographically smallest.
void sort_ccw(std::vector<LiftedIndex>& pts, Point center, const PackingConfiguration& config) {
    std::sort(pts.begin(), pts.end(), [&](const LiftedIndex& a, const LiftedIndex& b) {
        const Point da = lifted_position(config, a) - center;
        const Point db = lifted_position(config, b) - center;
        return std::atan2(da.y, da.x) < std::atan2(db.y, db.x);
    });
    const auto first = std::min_element(pts.begin(), pts.end(), [&](const LiftedIndex& a, const LiftedIndex& b) {
        return lifted_lex_less(config, a, b);
    });
    std::rotate(pts.begin(), first, pts.end());
}

Point period_shift(const Domain& d, int sx, int sy) {
    return {static_cast<double>(sx) * d.width, static_cast<double>(sy) * d.height};
}

}  // namespace

bool lifted_lex_less(const PackingConfiguration& config, const LiftedIndex& a, const LiftedIndex& b) {
    // Centers lie in [0,w) x [0,h), so (shift, coordinate) orders the lifted
    // coordinate exactly without forming c + s*w.
    const Point pa = config.centers[a.index];
    const Point pb = config.centers[b.index];
    if (a.sx != b.sx) return a.sx < b.sx;
    if (pa.x != pb.x) return pa.x < pb.x;
    if (a.sy != b.sy) return a.sy < b.sy;
    return pa.y < pb.y;
}

Point lifted_position(const PackingConfiguration& config, const LiftedIndex& v) {
    return config.centers[v.index] + period_shift(config.domain, v.sx, v.sy);
}

std::array<Point, 3> Triangulation::points(std::size_t t) const {
    const auto& v = triangles[t].v;
    return {lifted_position(config, v[0]), lifted_position(config, v[1]), lifted_position(config, v[2])};
}

double Triangulation::area(std::size_t t) const {
    const auto p = points(t);
    return polygon_area(p);
}

Triangulation delaunay(const PackingConfiguration& config, const Tolerances& tol) {
    const Domain& domain = config.domain;
    const std::size_t n = config.centers.size();
    if (n == 0) throw TessellationError("delaunay: no centers");

    std::vector<Point> pts;
    std::vector<LiftedIndex> lift;
    if (domain.periodic()) {
        pts.reserve(9 * n);
        for (int sy = -1; sy <= 1; ++sy) {
            for (int sx = -1; sx <= 1; ++sx) {
                for (std::size_t i = 0; i < n; ++i) {
                    const LiftedIndex li{static_cast<std::uint32_t>(i), sx, sy};
                    lift.push_back(li);
                    pts.push_back(lifted_position(config, li));
                }
            }
        }
    } else {
        pts = config.centers;
        for (std::size_t i = 0; i < n; ++i) lift.push_back({static_cast<std::uint32_t>(i), 0, 0});
    }

    const auto raw = BowyerWatson(pts).real_triangles();
    if (raw.empty()) throw TessellationError("delaunay: all centers are collinear");

    // Group raw triangles sharing a circumcircle: the union of each group is
    // a convex cocircular polygon, independent of insertion order.
    std::vector<Point> centers;
    centers.reserve(raw.size());
    for (const auto& t : raw) centers.push_back(circumcircle(pts[t[0]], pts[t[1]], pts[t[2]]).center);
    const auto groups = cluster(centers, tol.eps_merge, nullptr);

    Triangulation out;
    out.config = config;
    const double half_period = 0.5 * std::min(domain.width, domain.height);
    for (const auto& members : groups) {
        std::vector<LiftedIndex> gens;
        Point mean{0.0, 0.0};
        for (std::size_t m : members) {
            mean = mean + centers[m];
            for (int id : raw[m]) gens.push_back(lift[id]);
        }
        mean = (1.0 / static_cast<double>(members.size())) * mean;
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

        const LiftedIndex smallest = *std::min_element(
            gens.begin(), gens.end(), [&](const auto& a, const auto& b) { return lifted_lex_less(config, a, b); });
        if (domain.periodic() && (smallest.sx != 0 || smallest.sy != 0)) continue;

        if (domain.periodic()) {
            for (const auto& g : gens) {
                if (distance(lifted_position(config, g), mean) >= half_period) {
                    throw TessellationError(
                        "delaunay: empty circle of radius >= half the torus period; domain too small for this packing");
                }
            }
        }
        sort_ccw(gens, mean, config);
        for (std::size_t k = 1; k + 1 < gens.size(); ++k) {
            out.triangles.push_back({{gens[0], gens[k], gens[k + 1]}});
        }
    }

    if (domain.periodic() && out.triangles.size() != 2 * n) {
        throw TessellationError("delaunay: periodic triangulation has " + std::to_string(out.triangles.size()) +
                                " triangles, expected " + std::to_string(2 * n));
    }

    out.adjacency.assign(out.triangles.size(), {-1, -1, -1});
    for (const auto& [key, inc] : edge_incidence(out.triangles)) {
        if (inc.size() > 2) throw TessellationError("delaunay: non-manifold edge");
        if (inc.size() == 2) {
            out.adjacency[inc[0].first][inc[0].second] = inc[1].first;
            out.adjacency[inc[1].first][inc[1].second] = inc[0].first;
        } else if (domain.periodic()) {
            throw TessellationError("delaunay: periodic triangulation has a boundary edge");
        }
    }
    return out;
}

Point VoronoiDiagram::position(const VertexRef& ref) const {
    return vertices[ref.vertex].position + period_shift(config().domain, ref.sx, ref.sy);
}

VoronoiDiagram voronoi_dual(const Triangulation& tri, const Tolerances& tol) {
    const PackingConfiguration& config = tri.config;
    const Domain& domain = config.domain;
    const std::size_t tcount = tri.triangles.size();

    VoronoiDiagram dia;
    dia.triangulation = tri;
    dia.tol = tol;

    std::vector<Point> cc(tcount);
    std::vector<Point> wrapped(tcount);
    for (std::size_t t = 0; t < tcount; ++t) {
        const auto p = tri.points(t);
        cc[t] = circumcircle(p[0], p[1], p[2]).center;
        wrapped[t] = domain.wrap(cc[t]);
    }
    const auto groups = cluster(wrapped, tol.eps_merge, domain.periodic() ? &domain : nullptr);

    // Merged vertices, then relabel in lexicographic position order.
    std::vector<VoronoiVertex> verts;
    std::vector<VertexRef> of_tri(tcount);
    for (const auto& members : groups) {
        const Point anchor = wrapped[members.front()];
        Point offset{0.0, 0.0};
        for (std::size_t m : members) offset = offset + domain.min_image(wrapped[m] - anchor);
        const Point pos = domain.wrap(anchor + (1.0 / static_cast<double>(members.size())) * offset);

        VoronoiVertex v;
        v.position = pos;
        for (std::size_t m : members) {
            const Point d = cc[m] - pos;
            const int sx = domain.periodic() ? static_cast<int>(std::lround(d.x / domain.width)) : 0;
            const int sy = domain.periodic() ? static_cast<int>(std::lround(d.y / domain.height)) : 0;
            of_tri[m] = {static_cast<int>(verts.size()), sx, sy};
            v.triangles.push_back(static_cast<int>(m));
            for (const auto& g : tri.triangles[m].v) v.generators.push_back(g.shifted(-sx, -sy));
        }
        std::sort(v.generators.begin(), v.generators.end());
        v.generators.erase(std::unique(v.generators.begin(), v.generators.end()), v.generators.end());
        sort_ccw(v.generators, pos, config);
        v.circumradius = std::numeric_limits<double>::infinity();
        for (const auto& g : v.generators) {
            const double d = distance(lifted_position(config, g), pos);
            v.circumradius = std::min(v.circumradius, d);
            v.max_generator_distance = std::max(v.max_generator_distance, d);
        }
        if (!domain.periodic()) {
            const double r = v.max_generator_distance;
            const double m = domain.margin;
            v.analyzed = pos.x - r >= m && pos.x + r <= domain.width - m && pos.y - r >= m &&
                         pos.y + r <= domain.height - m;
        }
        verts.push_back(std::move(v));
    }

    std::vector<int> order(verts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Point pa = verts[a].position;
        const Point pb = verts[b].position;
        if (pa.x != pb.x) return pa.x < pb.x;
        if (pa.y != pb.y) return pa.y < pb.y;
        return a < b;
    });
    std::vector<int> rank(verts.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        rank[order[r]] = static_cast<int>(r);
        dia.vertices.push_back(std::move(verts[order[r]]));
    }
    for (auto& ref : of_tri) ref.vertex = rank[ref.vertex];
    dia.vertex_of_triangle = of_tri;

    // Voronoi edges: Delaunay edges whose two triangles map to distinct
    // merged vertices.
    std::map<EdgeKey, int> edge_id;
    std::vector<char> on_hull(config.centers.size(), 0);
    for (const auto& [key, inc] : edge_incidence(tri.triangles)) {
        const auto [t, k] = inc[0];
        const auto& tv = tri.triangles[t].v;
        const LiftedIndex a = tv[(k + 1) % 3];
        const LiftedIndex b = tv[(k + 2) % 3];
        if (inc.size() == 1) {
            on_hull[a.index] = 1;
            on_hull[b.index] = 1;
            continue;
        }
        const auto [u, j] = inc[1];
        const LiftedIndex a_in_u = tri.triangles[u].v[(j + 2) % 3];
        const int dx = a.sx - a_in_u.sx;
        const int dy = a.sy - a_in_u.sy;
        VertexRef va = of_tri[t];
        VertexRef vb = of_tri[u];
        vb.sx += dx;
        vb.sy += dy;
        if (va == vb) continue;

        const LiftedIndex& origin = key_origin(a, b);
        const int fx = -origin.sx;
        const int fy = -origin.sy;
        VoronoiEdge e;
        e.generators = {origin.shifted(fx, fy), (&origin == &a ? b : a).shifted(fx, fy)};
        e.vertices = {VertexRef{va.vertex, va.sx + fx, va.sy + fy}, VertexRef{vb.vertex, vb.sx + fx, vb.sy + fy}};
        e.segment = {dia.position(e.vertices[0]), dia.position(e.vertices[1])};
        e.label = classify_edge_pitteway(e, config);
        edge_id[key] = static_cast<int>(dia.edges.size());
        dia.edges.push_back(e);
    }

    // Cells.
    std::vector<std::vector<VertexRef>> corners(config.centers.size());
    std::vector<std::vector<std::uint32_t>> neighbors(config.centers.size());
    for (std::size_t t = 0; t < tcount; ++t) {
        const auto& tv = tri.triangles[t].v;
        for (int k = 0; k < 3; ++k) {
            const VertexRef r = of_tri[t];
            corners[tv[k].index].push_back({r.vertex, r.sx - tv[k].sx, r.sy - tv[k].sy});
            neighbors[tv[k].index].push_back(tv[(k + 1) % 3].index);
            neighbors[tv[k].index].push_back(tv[(k + 2) % 3].index);
        }
    }

    const Point box_lo{0.0, 0.0};
    const Point box_hi{domain.width, domain.height};
    for (std::size_t i = 0; i < config.centers.size(); ++i) {
        VoronoiCell cell;
        cell.center = i;
        const Point ci = config.centers[i];
        const LiftedIndex self{static_cast<std::uint32_t>(i), 0, 0};

        if (!domain.periodic() && (on_hull[i] || corners[i].empty())) {
            cell.bounded = false;
            cell.analyzed = false;
            cell.clipped = true;
            std::vector<Point> poly{box_lo, {box_hi.x, box_lo.y}, box_hi, {box_lo.x, box_hi.y}};
            auto& nb = neighbors[i];
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
            for (std::uint32_t j : nb) {
                const Point cj = config.centers[j];
                const Point normal = cj - ci;
                poly = clip_halfplane(poly, normal, dot(0.5 * (ci + cj), normal));
            }
            cell.polygon = std::move(poly);
            cell.area = cell.polygon.size() >= 3 ? polygon_area(cell.polygon) : 0.0;
            dia.cells.push_back(std::move(cell));
            continue;
        }

        auto& cs = corners[i];
        std::sort(cs.begin(), cs.end());
        cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
        std::vector<std::pair<double, VertexRef>> by_angle;
        for (const auto& r : cs) {
            const Point d = dia.position(r) - ci;
            by_angle.emplace_back(std::atan2(d.y, d.x), r);
        }
        std::sort(by_angle.begin(), by_angle.end());
        for (const auto& [ang, r] : by_angle) {
            cell.corners.push_back(r);
            cell.polygon.push_back(dia.position(r));
        }

        const std::size_t m = cell.corners.size();
        for (std::size_t k = 0; k < m; ++k) {
            const VertexRef& ra = cell.corners[k];
            const VertexRef& rb = cell.corners[(k + 1) % m];
            std::vector<LiftedIndex> common;
            for (const auto& ga : dia.vertices[ra.vertex].generators) {
                const LiftedIndex la = ga.shifted(ra.sx, ra.sy);
                if (la == self) continue;
                for (const auto& gb : dia.vertices[rb.vertex].generators) {
                    if (gb.shifted(rb.sx, rb.sy) == la) common.push_back(la);
                }
            }
            if (common.size() != 1) {
                throw TessellationError("voronoi_dual: cell " + std::to_string(i) + " side " + std::to_string(k) +
                                        " has " + std::to_string(common.size()) + " shared generators");
            }
            const auto it = edge_id.find(edge_key(self, common[0]));
            if (it == edge_id.end()) throw TessellationError("voronoi_dual: cell side without a Voronoi edge");
            cell.sides.push_back({common[0], it->second});
        }

        if (!domain.periodic()) {
            const bool inside = std::all_of(cell.polygon.begin(), cell.polygon.end(), [&](Point p) {
                return p.x >= box_lo.x && p.x <= box_hi.x && p.y >= box_lo.y && p.y <= box_hi.y;
            });
            if (!inside) {
                cell.clipped = true;
                cell.polygon = clip_rect(cell.polygon, box_lo, box_hi);
            }
            cell.analyzed = !cell.clipped && std::all_of(cell.corners.begin(), cell.corners.end(), [&](const auto& r) {
                return dia.vertices[r.vertex].analyzed;
            });
        }
        cell.area = cell.polygon.size() >= 3 ? polygon_area(cell.polygon) : 0.0;
        dia.cells.push_back(std::move(cell));
    }
    return dia;
}

VoronoiDiagram build_diagram(const PackingConfiguration& config, const Tolerances& tol) {
    return voronoi_dual(delaunay(config, tol), tol);
}

VertexKind classify_vertex(const VoronoiVertex& v) {
    return v.degree() == 3 ? VertexKind::regular : VertexKind::degenerate;
}

EdgeLabel classify_edge_pitteway(const VoronoiEdge& e, const PackingConfiguration& config) {
    const Segment chord{lifted_position(config, e.generators[0]), lifted_position(config, e.generators[1])};
    return segments_intersect(chord, e.segment) ? EdgeLabel::pitteway : EdgeLabel::non_pitteway;
}

namespace {

void consider(Circle& best, bool& have, Point q, double r, double eps) {
    if (!have || r > best.radius + eps || (std::fabs(r - best.radius) <= eps && lex_less(q, best.center))) {
        best = {q, r};
        have = true;
    }
}

}  // namespace

Circle largest_empty_circle(const VoronoiDiagram& dia) {
    const Domain& domain = dia.config().domain;
    Circle best;
    bool have = false;
    const double eps = dia.tol.eps_eq;
    if (domain.periodic()) {
        for (const auto& v : dia.vertices) consider(best, have, v.position, v.circumradius, eps);
    } else {
        // Nearest-center distance is convex on each cell, so its maximum over
        // cell ∩ region sits at a vertex of that polygon.
        const Point lo{domain.margin, domain.margin};
        const Point hi{domain.width - domain.margin, domain.height - domain.margin};
        for (const auto& cell : dia.cells) {
            const Point ci = dia.config().centers[cell.center];
            for (const Point& q : clip_rect(cell.polygon, lo, hi)) consider(best, have, q, distance(q, ci), eps);
        }
    }
    if (!have) throw TessellationError("largest_empty_circle: empty analysis region");
    return best;
}

Circle largest_empty_circle(const PackingConfiguration& config, const Tolerances& tol) {
    return largest_empty_circle(build_diagram(config, tol));
}

Location locate_point(const PackingConfiguration& config, Point y, const Tolerances& tol) {
    Location loc;
    if (config.centers.empty()) throw TessellationError("locate_point: no centers");
    std::vector<double> d(config.centers.size());
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = config.domain.metric_distance(y, config.centers[i]);
        best = std::min(best, d[i]);
    }
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] <= best + tol.eps_merge) loc.nearest.push_back(i);
    }
    loc.distance = best;
    loc.kind = loc.nearest.size() == 1   ? Location::Kind::interior
               : loc.nearest.size() == 2 ? Location::Kind::edge
                                         : Location::Kind::vertex;
    return loc;
}

EulerCounts euler_counts(const VoronoiDiagram& dia) {
    return {static_cast<long>(dia.vertices.size()), static_cast<long>(dia.edges.size()),
            static_cast<long>(dia.cells.size())};
}

bool euler_check(const VoronoiDiagram& dia) { return euler_counts(dia).characteristic() == 0; }

std::vector<Point> clip_halfplane(const std::vector<Point>& polygon, Point normal, double offset) {
    std::vector<Point> out;
    const std::size_t m = polygon.size();
    if (m == 0) return out;
    out.reserve(m + 1);
    for (std::size_t k = 0; k < m; ++k) {
        const Point p = polygon[k];
        const Point q = polygon[(k + 1) % m];
        const double fp = dot(p, normal) - offset;
        const double fq = dot(q, normal) - offset;
        if (fp <= 0.0) out.push_back(p);
        if ((fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0)) {
            const double t = fp / (fp - fq);
            out.push_back(p + t * (q - p));
        }
    }
    return out;
}

std::vector<Point> clip_rect(const std::vector<Point>& polygon, Point lo, Point hi) {
    auto out = clip_halfplane(polygon, {-1.0, 0.0}, -lo.x);
    out = clip_halfplane(out, {1.0, 0.0}, hi.x);
    out = clip_halfplane(out, {0.0, -1.0}, -lo.y);
    return clip_halfplane(out, {0.0, 1.0}, hi.y);
}

}  // namespace thue
