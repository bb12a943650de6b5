#include <cmath>
#include <numbers>

#include "thue/packing.hpp"
#include "thue/tessellation.hpp"

namespace thue {

SaturationCertificate is_saturated(const PackingConfiguration& config, const Tolerances& tol) {
    if (config.centers.size() < 3) {
        throw PackingError("saturation needs at least 3 centers, got " + std::to_string(config.centers.size()));
    }
    const Circle lec = largest_empty_circle(config, tol);
    return {lec.radius < 2.0 - tol.eps_eq, lec};
}

PackingConfiguration greedy_saturate(const PackingConfiguration& config, const Tolerances& tol) {
    PackingConfiguration out = config;
    // Inserted centers are pairwise ~2 apart, so their disks of radius 1 are
    // disjoint inside the domain.
    const auto limit = static_cast<long>(std::ceil(config.domain.area() / std::numbers::pi));
    for (long iteration = 0;; ++iteration) {
        const SaturationCertificate cert = is_saturated(out, tol);
        if (cert.saturated) return out;
        if (iteration >= limit) throw PackingError("greedy_saturate exceeded its insertion bound");
        out.centers.push_back(out.domain.wrap(cert.witness->center));
    }
}

}  // namespace thue
