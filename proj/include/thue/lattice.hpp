#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include "thue/geom.hpp"

namespace thue {

class LatticeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Basis of a rank-2 lattice {z1*b1 + z2*b2 : z in Z^2}.
struct Basis2 {
    Point b1;
    Point b2;
};

/// b1.x*b2.y - b1.y*b2.x.
double det(const Basis2& b);

/// Rows give each output vector as integer combination of the input:
/// out.bk = map[k][0]*in.b1 + map[k][1]*in.b2, with det(map) = +-1.
using UnimodularMap = std::array<std::array<std::int64_t, 2>, 2>;

struct ReducedBasis {
    /// |b1| <= |b2| <= min(|b2 + b1|, |b2 - b1|).
    Basis2 basis;
    UnimodularMap unimodular_map{{{1, 0}, {0, 1}}};
};

/// Lagrange-Gauss reduction. Every comparison between squared norms of
/// integer combinations is decided exactly, so near-hexagonal inputs that
/// sit on a tie still terminate deterministically: a step is taken only if
/// it strictly shortens the vector. Output coordinates are the correctly
/// summed combinations, rounded once.
///
/// Throws LatticeError if |det| <= eps_eq or an input is not finite.
ReducedBasis gauss_reduce(const Basis2& b, const Tolerances& tol = {});

/// First vector of the reduced basis.
Point shortest_vector(const Basis2& b, const Tolerances& tol = {});

/// Shortest nonzero vector has norm >= 2 - eps_eq, i.e. lattice + unit
/// disks is a packing.
bool is_admissible(const Basis2& b, const Tolerances& tol = {});

/// Reduced basis with both norms 2 and acute angle pi/3, each within eps.
bool hexagonal_shape(const Basis2& reduced, double eps);

struct LagrangeRecord {
    bool admissible = false;
    double det_abs = 0.0;
    double shortest = 0.0;
    /// Not admissible, or det_abs >= 2*sqrt(3) - eps_eq.
    bool bound_ok = false;
    bool hexagonal = false;
};

LagrangeRecord lagrange_bound_check(const Basis2& b, const Tolerances& tol = {});

}  // namespace thue
