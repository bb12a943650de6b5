#include "thue/packing.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace thue {

namespace {

double uniform01(std::mt19937_64& engine) { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

// Returns k if length is within eps of k * period, otherwise nullopt.
std::optional<long> commensurate(double length, double period, double eps) {
    const double k = std::round(length / period);
    if (k < 1.0 || std::fabs(length - k * period) > eps) return std::nullopt;
    return static_cast<long>(k);
}

std::string nearest_valid(double length, double period) {
    std::ostringstream os;
    os.precision(17);
    if (const double k = std::round(length / period); k >= 1.0 && std::fabs(length - k * period) <= 1e-9 * period) {
        os << k * period;
        return os.str();
    }
    const double lo = std::max(1.0, std::floor(length / period)) * period;
    const double hi = std::max(1.0, std::ceil(length / period)) * period;
    os << lo;
    if (hi != lo) os << " or " << hi;
    return os.str();
}

// Bucket grid with cell size >= 2 for neighbor queries at distance < 2.
class NeighborGrid {
public:
    explicit NeighborGrid(const Domain& domain) : domain_(domain) {
        nx_ = std::max(1, static_cast<int>(std::floor(domain.width / 2.0)));
        ny_ = std::max(1, static_cast<int>(std::floor(domain.height / 2.0)));
        cells_.resize(static_cast<std::size_t>(nx_) * ny_);
    }

    void insert(std::size_t id, Point p) { cells_[cell_of(p)].push_back(id); }

    void erase(std::size_t id, Point p) {
        auto& c = cells_[cell_of(p)];
        std::erase(c, id);
    }

    /// True if some stored point other than `skip` is closer than 2 - slack.
    bool conflicts(Point p, const std::vector<Point>& points, double slack, std::size_t skip = SIZE_MAX) const {
        const auto [cx, cy] = coords(p);
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                int gx = cx + dx;
                int gy = cy + dy;
                if (domain_.periodic()) {
                    gx = (gx % nx_ + nx_) % nx_;
                    gy = (gy % ny_ + ny_) % ny_;
                } else if (gx < 0 || gy < 0 || gx >= nx_ || gy >= ny_) {
                    continue;
                }
                for (std::size_t id : cells_[static_cast<std::size_t>(gy) * nx_ + gx]) {
                    if (id == skip) continue;
                    if (domain_.metric_distance(p, points[id]) < 2.0 - slack) return true;
                }
            }
        }
        return false;
    }

private:
    std::pair<int, int> coords(Point p) const {
        int cx = static_cast<int>(std::floor(p.x / domain_.width * nx_));
        int cy = static_cast<int>(std::floor(p.y / domain_.height * ny_));
        cx = std::clamp(cx, 0, nx_ - 1);
        cy = std::clamp(cy, 0, ny_ - 1);
        return {cx, cy};
    }
    std::size_t cell_of(Point p) const {
        const auto [cx, cy] = coords(p);
        return static_cast<std::size_t>(cy) * nx_ + cx;
    }

    Domain domain_;
    int nx_ = 1;
    int ny_ = 1;
    std::vector<std::vector<std::size_t>> cells_;
};

}  // namespace

Domain Domain::torus(double width, double height) { return {DomainKind::torus, width, height, 0.0}; }

Domain Domain::box(double width, double height, double margin) { return {DomainKind::box, width, height, margin}; }

void Domain::validate() const {
    if (!(std::isfinite(width) && std::isfinite(height) && width > 4.0 && height > 4.0)) {
        throw PackingError("domain width and height must exceed 4");
    }
    if (!(std::isfinite(margin) && margin >= 0.0)) throw PackingError("domain margin must be nonnegative");
    if (!periodic() && (2.0 * margin >= width || 2.0 * margin >= height)) {
        throw PackingError("box margin leaves an empty analysis region");
    }
}

Point Domain::min_image(Point d) const {
    if (!periodic()) return d;
    return {d.x - width * std::round(d.x / width), d.y - height * std::round(d.y / height)};
}

double Domain::metric_distance(Point a, Point b) const { return norm(min_image(b - a)); }

Point Domain::wrap(Point p) const {
    if (!periodic()) return p;
    double x = p.x - width * std::floor(p.x / width);
    double y = p.y - height * std::floor(p.y / height);
    if (x >= width) x = 0.0;
    if (y >= height) y = 0.0;
    return {x, y};
}

bool Domain::contains(Point p) const {
    if (periodic()) return p.x >= 0.0 && p.x < width && p.y >= 0.0 && p.y < height;
    return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
}

const char* to_string(DomainKind kind) { return kind == DomainKind::torus ? "torus" : "box"; }

double PackingConfiguration::density() const {
    return static_cast<double>(centers.size()) * std::numbers::pi / domain.area();
}

std::vector<Violation> validate(const PackingConfiguration& config, const Tolerances& tol) {
    std::vector<Violation> out;
    const auto& c = config.centers;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!is_finite(c[i])) {
            out.push_back({Violation::Kind::non_finite, i, i, 0.0});
        } else if (!config.domain.contains(c[i])) {
            out.push_back({Violation::Kind::out_of_domain, i, i, 0.0});
        }
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            const double d = config.domain.metric_distance(c[i], c[j]);
            if (d < 2.0 - tol.eps_eq) out.push_back({Violation::Kind::overlap, i, j, d});
        }
    }
    return out;
}

PackingConfiguration gen_hexagonal(const Domain& domain, const Tolerances& tol) {
    domain.validate();
    const double s3 = std::numbers::sqrt3;
    PackingConfiguration config{domain, {}};
    if (domain.periodic()) {
        const auto cols = commensurate(domain.width, 2.0, tol.eps_eq);
        const auto pairs = commensurate(domain.height, 2.0 * s3, tol.eps_eq);
        if (!cols || !pairs) {
            throw PackingError("hexagonal torus needs width = 2k and height = 2*sqrt(3)*m; nearest valid: width " +
                               nearest_valid(domain.width, 2.0) + ", height " +
                               nearest_valid(domain.height, 2.0 * s3));
        }
        for (long j = 0; j < 2 * *pairs; ++j) {
            for (long i = 0; i < *cols; ++i) {
                config.centers.push_back({static_cast<double>(j % 2) + 2.0 * static_cast<double>(i),
                                          static_cast<double>(j) * s3});
            }
        }
        return config;
    }
    for (long j = 0; static_cast<double>(j) * s3 < domain.height; ++j) {
        for (long i = 0;; ++i) {
            const double x = static_cast<double>(j % 2) + 2.0 * static_cast<double>(i);
            if (x >= domain.width) break;
            config.centers.push_back({x, static_cast<double>(j) * s3});
        }
    }
    return config;
}

PackingConfiguration gen_square(const Domain& domain, const Tolerances& tol) {
    domain.validate();
    PackingConfiguration config{domain, {}};
    long cols = 0;
    long rows = 0;
    if (domain.periodic()) {
        const auto c = commensurate(domain.width, 2.0, tol.eps_eq);
        const auto r = commensurate(domain.height, 2.0, tol.eps_eq);
        if (!c || !r) {
            throw PackingError("square torus needs both sides multiples of 2; nearest valid: width " +
                               nearest_valid(domain.width, 2.0) + ", height " + nearest_valid(domain.height, 2.0));
        }
        cols = *c;
        rows = *r;
    } else {
        cols = static_cast<long>(std::ceil(domain.width / 2.0));
        rows = static_cast<long>(std::ceil(domain.height / 2.0));
    }
    for (long j = 0; j < rows; ++j) {
        for (long i = 0; i < cols; ++i) {
            config.centers.push_back({2.0 * static_cast<double>(i), 2.0 * static_cast<double>(j)});
        }
    }
    return config;
}

PackingConfiguration gen_random(const Domain& domain, std::uint64_t seed, int max_failures) {
    domain.validate();
    if (max_failures < 1) throw PackingError("max_failures must be positive");
    std::mt19937_64 engine(seed);
    PackingConfiguration config{domain, {}};
    NeighborGrid grid(domain);
    int failures = 0;
    while (failures < max_failures) {
        const double x = uniform01(engine) * domain.width;
        const double y = uniform01(engine) * domain.height;
        const Point p{x, y};
        if (grid.conflicts(p, config.centers, 0.0)) {
            ++failures;
            continue;
        }
        failures = 0;
        grid.insert(config.centers.size(), p);
        config.centers.push_back(p);
    }
    return config;
}

PackingConfiguration perturb(const PackingConfiguration& config, std::uint64_t seed, double magnitude) {
    if (!(magnitude >= 0.0)) throw PackingError("perturbation magnitude must be nonnegative");
    PackingConfiguration out = config;
    if (magnitude == 0.0) return out;
    std::mt19937_64 engine(seed);
    NeighborGrid grid(config.domain);
    for (std::size_t i = 0; i < out.centers.size(); ++i) grid.insert(i, out.centers[i]);

    for (std::size_t i = 0; i < out.centers.size(); ++i) {
        const double r = magnitude * std::sqrt(uniform01(engine));
        const double theta = 2.0 * std::numbers::pi * uniform01(engine);
        const Point old = out.centers[i];
        Point moved = old + Point{r * std::cos(theta), r * std::sin(theta)};
        if (config.domain.periodic()) {
            moved = config.domain.wrap(moved);
        } else if (!config.domain.contains(moved)) {
            continue;
        }
        if (grid.conflicts(moved, out.centers, 0.0, i)) continue;
        grid.erase(i, old);
        grid.insert(i, moved);
        out.centers[i] = moved;
    }
    return out;
}

}  // namespace thue
