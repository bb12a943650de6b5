#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thue/geom.hpp"

namespace thue {

/// Raised when a packing or domain is malformed for the requested operation.
class PackingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class DomainKind { torus, box };

/// Finite experiment domain. A torus is the rectangle [0,w) x [0,h) with
/// periodic identification; a box is the closed rectangle [0,w] x [0,h]
/// whose analysis region is shrunk by `margin` on every side. Lattice
/// generators fill boxes half-open, [0,w) x [0,h).
struct Domain {
    DomainKind kind = DomainKind::torus;
    double width = 0.0;
    double height = 0.0;
    double margin = 0.0;

    static Domain torus(double width, double height);
    static Domain box(double width, double height, double margin = 4.0);

    bool periodic() const { return kind == DomainKind::torus; }
    double area() const { return width * height; }

    /// Throws PackingError unless width, height > 4 and margin >= 0.
    void validate() const;

    /// Shortest representative of a displacement (identity for boxes).
    Point min_image(Point d) const;
    /// Distance under the domain metric.
    double metric_distance(Point a, Point b) const;
    /// Canonical representative in [0,w) x [0,h) (identity for boxes).
    Point wrap(Point p) const;
    bool contains(Point p) const;
};

const char* to_string(DomainKind kind);

/// Centers of unit circles. Radius is fixed at 1.
struct PackingConfiguration {
    Domain domain;
    std::vector<Point> centers;

    static constexpr double radius = 1.0;

    std::size_t size() const { return centers.size(); }
    /// n * pi / (width * height). Meaningful for tori.
    double density() const;
};

struct Violation {
    enum class Kind { overlap, out_of_domain, non_finite };
    Kind kind = Kind::overlap;
    std::size_t i = 0;
    std::size_t j = 0;
    double distance = 0.0;
};

/// Empty iff `config` is a valid packing: finite in-domain centers with
/// pairwise (domain-metric) distance >= 2 - eps_eq.
std::vector<Violation> validate(const PackingConfiguration& config, const Tolerances& tol = {});

/// Hexagonal lattice with nearest distance 2: rows at y = j*sqrt(3), odd
/// rows shifted by 1. Tori must have width a multiple of 2 and height a
/// multiple of 2*sqrt(3).
PackingConfiguration gen_hexagonal(const Domain& domain, const Tolerances& tol = {});

/// Square lattice with spacing 2; tori need both sides multiples of 2.
PackingConfiguration gen_square(const Domain& domain, const Tolerances& tol = {});

/// Random sequential adsorption. Candidates are drawn uniformly from the
/// domain with std::mt19937_64(seed), each coordinate as
/// (engine() >> 11) * 2^-53 scaled to the side length (x first, then y).
/// A candidate is kept if it is at distance >= 2 from every kept center;
/// generation stops after `max_failures` consecutive rejections.
PackingConfiguration gen_random(const Domain& domain, std::uint64_t seed, int max_failures = 1000);

/// Displaces each center, in index order, by a vector uniform in the disk
/// of radius `magnitude`; a move that would break the packing or leave the
/// box is dropped and the center stays put. Same engine as gen_random.
PackingConfiguration perturb(const PackingConfiguration& config, std::uint64_t seed, double magnitude);

struct SaturationCertificate {
    bool saturated = false;
    /// Largest empty circle; present whenever it was computed. When
    /// `saturated` is false its center is insertable.
    std::optional<Circle> witness;
};

/// Saturated iff the largest empty circle over the analysis region has
/// radius < 2 - eps_eq. Throws PackingError with fewer than 3 centers.
SaturationCertificate is_saturated(const PackingConfiguration& config, const Tolerances& tol = {});

/// Inserts a center at the largest empty circle while its radius is
/// >= 2 - eps_eq. Original centers keep their indices; inserted ones are
/// appended in insertion order.
PackingConfiguration greedy_saturate(const PackingConfiguration& config, const Tolerances& tol = {});

}  // namespace thue
