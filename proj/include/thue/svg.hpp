#pragma once

#include <string>
#include <vector>

#include "thue/verifier.hpp"

namespace thue {

enum class Layer { circles, centers, voronoi, delaunay, ltriangles, circumcircles, violations };

/// Throws std::invalid_argument for an unknown name.
Layer parse_layer(const std::string& name);
const char* layer_name(Layer layer);

/// Stroke widths are in plane units; the packing's unit circles set the
/// scale of the picture.
struct RenderSpec {
    std::vector<Layer> layers{Layer::circles, Layer::voronoi};
    double scale = 40.0;  // pixels per plane unit

    double circle_stroke = 0.03;
    double edge_stroke = 0.04;
    double triangle_stroke = 0.025;
    double center_radius = 0.08;
    double marker_radius = 0.3;

    std::string circle_color = "#1f77b4";
    std::string center_color = "#000000";
    std::string voronoi_color = "#d62728";
    std::string delaunay_color = "#7f7f7f";
    std::string ltriangle_color = "#2ca02c";
    std::string circumcircle_color = "#9467bd";
    std::string violation_color = "#ff7f0e";

    /// Throws std::invalid_argument unless scale > 0 and a layer is set.
    void validate() const;
};

/// SVG 1.1 document, y axis pointing up. Each requested layer is a group
/// with id "layer-<name>", drawn in the canonical order of Layer. On a
/// torus, primitives crossing the rectangle's edge are repeated by <use>
/// at the neighboring periods and clipped to the rectangle.
std::string render_svg(const VoronoiDiagram& diagram, const std::vector<LTriangle>& lts, const RenderSpec& spec,
                       const std::vector<Point>& violations = {});

}  // namespace thue
