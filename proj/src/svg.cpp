#include "thue/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace thue {

namespace {

constexpr Layer kAllLayers[] = {Layer::circles,    Layer::centers,       Layer::voronoi,   Layer::delaunay,
                                Layer::ltriangles, Layer::circumcircles, Layer::violations};

std::string n(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string points_attr(const std::vector<Point>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ' ';
        s += n(pts[i].x) + "," + n(pts[i].y);
    }
    return s;
}

struct Box {
    double lo_x, lo_y, hi_x, hi_y;
};

Box bounds(const std::vector<Point>& pts, double pad) {
    Box b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
    for (const Point& p : pts) {
        b.lo_x = std::min(b.lo_x, p.x);
        b.lo_y = std::min(b.lo_y, p.y);
        b.hi_x = std::max(b.hi_x, p.x);
        b.hi_y = std::max(b.hi_y, p.y);
    }
    return {b.lo_x - pad, b.lo_y - pad, b.hi_x + pad, b.hi_y + pad};
}

class Writer {
public:
    Writer(std::ostringstream& os, const Domain& domain) : os_(os), domain_(domain) {}

    // Element with an id, then <use> copies at each period shift whose
    // translate of `extent` meets the domain rectangle.
    void emit(const std::string& id, const std::string& element, const Box& extent) {
        os_ << "    " << element.substr(0, element.size() - 2) << " id=\"" << id << "\"/>\n";
        if (!domain_.periodic()) return;
        for (int sy = -1; sy <= 1; ++sy) {
            for (int sx = -1; sx <= 1; ++sx) {
                if (sx == 0 && sy == 0) continue;
                const double dx = sx * domain_.width;
                const double dy = sy * domain_.height;
                if (extent.hi_x + dx < 0.0 || extent.lo_x + dx > domain_.width) continue;
                if (extent.hi_y + dy < 0.0 || extent.lo_y + dy > domain_.height) continue;
                os_ << "    <use xlink:href=\"#" << id << "\" transform=\"translate(" << n(dx) << "," << n(dy)
                    << ")\"/>\n";
            }
        }
    }

    void circle(const std::string& id, Point c, double r, const std::string& attrs) {
        emit(id, "<circle cx=\"" + n(c.x) + "\" cy=\"" + n(c.y) + "\" r=\"" + n(r) + "\" " + attrs + "/>",
             {c.x - r, c.y - r, c.x + r, c.y + r});
    }

    void polygon(const std::string& id, const std::vector<Point>& pts, const std::string& attrs) {
        if (pts.size() < 2) return;
        emit(id, "<polygon points=\"" + points_attr(pts) + "\" " + attrs + "/>", bounds(pts, 0.0));
    }

private:
    std::ostringstream& os_;
    const Domain& domain_;
};

}  // namespace

Layer parse_layer(const std::string& name) {
    for (Layer l : kAllLayers) {
        if (name == layer_name(l)) return l;
    }
    throw std::invalid_argument("unknown layer '" + name + "'");
}

const char* layer_name(Layer layer) {
    switch (layer) {
        case Layer::circles: return "circles";
        case Layer::centers: return "centers";
        case Layer::voronoi: return "voronoi";
        case Layer::delaunay: return "delaunay";
        case Layer::ltriangles: return "ltriangles";
        case Layer::circumcircles: return "circumcircles";
        case Layer::violations: return "violations";
    }
    return "?";
}

void RenderSpec::validate() const {
    if (!(scale > 0.0)) throw std::invalid_argument("render scale must be positive");
    if (layers.empty()) throw std::invalid_argument("at least one layer is required");
}

std::string render_svg(const VoronoiDiagram& dia, const std::vector<LTriangle>& lts, const RenderSpec& spec,
                       const std::vector<Point>& violations) {
    spec.validate();
    const PackingConfiguration& config = dia.config();
    const Domain& domain = config.domain;
    const double w = domain.width;
    const double h = domain.height;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" xmlns:xlink=\"http://www.w3.org/1999/xlink\" version=\"1.1\" "
       << "width=\"" << n(w * spec.scale) << "\" height=\"" << n(h * spec.scale) << "\" viewBox=\"0 0 " << n(w) << " "
       << n(h) << "\">\n";
    os << "  <defs><clipPath id=\"domain\"><rect x=\"0\" y=\"0\" width=\"" << n(w) << "\" height=\"" << n(h)
       << "\"/></clipPath></defs>\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << n(w) << "\" height=\"" << n(h) << "\" fill=\"#ffffff\"/>\n";
    os << "  <g transform=\"matrix(1 0 0 -1 0 " << n(h) << ")\" clip-path=\"url(#domain)\">\n";

    Writer out(os, domain);
    for (Layer layer : kAllLayers) {
        if (std::find(spec.layers.begin(), spec.layers.end(), layer) == spec.layers.end()) continue;
        const std::string name = layer_name(layer);
        os << "   <g id=\"layer-" << name << "\">\n";
        switch (layer) {
            case Layer::circles: {
                const std::string attrs = "fill=\"none\" stroke=\"" + spec.circle_color + "\" stroke-width=\"" +
                                          n(spec.circle_stroke) + "\"";
                for (std::size_t i = 0; i < config.size(); ++i) {
                    out.circle("circle-" + std::to_string(i), config.centers[i], PackingConfiguration::radius, attrs);
                }
                break;
            }
            case Layer::centers: {
                const std::string attrs = "fill=\"" + spec.center_color + "\"";
                for (std::size_t i = 0; i < config.size(); ++i) {
                    out.circle("center-" + std::to_string(i), config.centers[i], spec.center_radius, attrs);
                }
                break;
            }
            case Layer::voronoi: {
                const std::string attrs = "fill=\"none\" stroke=\"" + spec.voronoi_color + "\" stroke-width=\"" +
                                          n(spec.edge_stroke) + "\" stroke-linejoin=\"round\"";
                for (const VoronoiCell& c : dia.cells) {
                    out.polygon("cell-" + std::to_string(c.center), c.polygon, attrs);
                }
                break;
            }
            case Layer::delaunay: {
                const std::string attrs = "fill=\"none\" stroke=\"" + spec.delaunay_color + "\" stroke-width=\"" +
                                          n(spec.triangle_stroke) + "\"";
                for (std::size_t t = 0; t < dia.triangulation.triangles.size(); ++t) {
                    const auto p = dia.triangulation.points(t);
                    out.polygon("dt-" + std::to_string(t), {p.begin(), p.end()}, attrs);
                }
                break;
            }
            case Layer::ltriangles: {
                const std::string attrs = "fill=\"" + spec.ltriangle_color + "\" fill-opacity=\"0.15\" stroke=\"" +
                                          spec.ltriangle_color + "\" stroke-width=\"" + n(spec.triangle_stroke) + "\"";
                for (std::size_t k = 0; k < lts.size(); ++k) {
                    const LTriangle& lt = lts[k];
                    out.polygon("lt-" + std::to_string(k), {lt.apex_position, lt.base_position[0], lt.base_position[1]},
                                attrs);
                }
                break;
            }
            case Layer::circumcircles: {
                const std::string attrs = "fill=\"none\" stroke=\"" + spec.circumcircle_color + "\" stroke-width=\"" +
                                          n(spec.circle_stroke) + "\" stroke-dasharray=\"0.15 0.1\"";
                for (std::size_t v = 0; v < dia.vertices.size(); ++v) {
                    if (!dia.vertices[v].analyzed) continue;
                    out.circle("cc-" + std::to_string(v), dia.vertices[v].position, dia.vertices[v].circumradius,
                               attrs);
                }
                break;
            }
            case Layer::violations: {
                const std::string attrs = "fill=\"" + spec.violation_color + "\" fill-opacity=\"0.6\"";
                for (std::size_t k = 0; k < violations.size(); ++k) {
                    out.circle("violation-" + std::to_string(k), violations[k], spec.marker_radius, attrs);
                }
                break;
            }
        }
        os << "   </g>\n";
    }
    os << "  </g>\n</svg>\n";
    return os.str();
}

}  // namespace thue
