#include "thue/lattice.hpp"

#include <cmath>
#include <initializer_list>
#include <numbers>
#include <utility>

#include "thue/expansion.hpp"

namespace thue {

namespace {

struct Combo {
    std::int64_t c1 = 0;
    std::int64_t c2 = 0;
};

class ExactBasis {
public:
    explicit ExactBasis(const Basis2& b) : b_(b) {}

    Expansion coord(const Combo& m, bool y) const {
        const double u = y ? b_.b1.y : b_.b1.x;
        const double v = y ? b_.b2.y : b_.b2.x;
        return Expansion::product(static_cast<double>(m.c1), u) + Expansion::product(static_cast<double>(m.c2), v);
    }

    Expansion norm2(const Combo& m) const {
        const Expansion x = coord(m, false);
        const Expansion y = coord(m, true);
        return x * x + y * y;
    }

    Point vector(const Combo& m) const { return {coord(m, false).estimate(), coord(m, true).estimate()}; }

private:
    Basis2 b_;
};

Combo minus(const Combo& v, std::int64_t q, const Combo& u) { return {v.c1 - q * u.c1, v.c2 - q * u.c2}; }

}  // namespace

double det(const Basis2& b) { return b.b1.x * b.b2.y - b.b1.y * b.b2.x; }

ReducedBasis gauss_reduce(const Basis2& b, const Tolerances& tol) {
    if (!is_finite(b.b1) || !is_finite(b.b2)) throw LatticeError("gauss_reduce: non-finite basis");
    if (!(std::fabs(det(b)) > tol.eps_eq)) {
        throw LatticeError("gauss_reduce: basis is linearly dependent (|det| <= eps_eq)");
    }
    const ExactBasis exact(b);
    Combo u{1, 0};
    Combo v{0, 1};
    Expansion nu = exact.norm2(u);
    Expansion nv = exact.norm2(v);
    if ((nv - nu).sign() < 0) {
        std::swap(u, v);
        std::swap(nu, nv);
    }

    constexpr int kMaxSteps = 10000;
    for (int step = 0;; ++step) {
        if (step > kMaxSteps) throw LatticeError("gauss_reduce: no convergence");
        const Point uf = exact.vector(u);
        const Point vf = exact.vector(v);
        const double ratio = dot(uf, vf) / norm2(uf);
        if (!std::isfinite(ratio) || std::fabs(ratio) > 0x1.0p52) throw LatticeError("gauss_reduce: coefficient overflow");
        const auto q0 = static_cast<std::int64_t>(std::llround(ratio));

        std::int64_t best = 0;
        Expansion best_norm = nv;
        for (std::int64_t q : {q0 - 1, q0, q0 + 1, std::int64_t{-1}, std::int64_t{1}}) {
            if (q == 0) continue;
            const Expansion n = exact.norm2(minus(v, q, u));
            if ((n - best_norm).sign() < 0) {
                best = q;
                best_norm = n;
            }
        }
        if (best != 0) {
            v = minus(v, best, u);
            nv = best_norm;
            continue;
        }
        if ((nv - nu).sign() < 0) {
            std::swap(u, v);
            std::swap(nu, nv);
            continue;
        }
        break;
    }

    ReducedBasis out;
    out.basis = {exact.vector(u), exact.vector(v)};
    out.unimodular_map = {{{u.c1, u.c2}, {v.c1, v.c2}}};
    return out;
}

Point shortest_vector(const Basis2& b, const Tolerances& tol) { return gauss_reduce(b, tol).basis.b1; }

bool is_admissible(const Basis2& b, const Tolerances& tol) { return norm(shortest_vector(b, tol)) >= 2.0 - tol.eps_eq; }

bool hexagonal_shape(const Basis2& reduced, double eps) {
    const double n1 = norm(reduced.b1);
    const double n2 = norm(reduced.b2);
    if (std::fabs(n1 - 2.0) > eps || std::fabs(n2 - 2.0) > eps) return false;
    const double theta = angle_at({0.0, 0.0}, reduced.b1, reduced.b2);
    const double acute = std::min(theta, std::numbers::pi - theta);
    return std::fabs(acute - std::numbers::pi / 3.0) <= eps;
}

LagrangeRecord lagrange_bound_check(const Basis2& b, const Tolerances& tol) {
    const ReducedBasis r = gauss_reduce(b, tol);
    LagrangeRecord rec;
    rec.shortest = norm(r.basis.b1);
    rec.admissible = rec.shortest >= 2.0 - tol.eps_eq;
    rec.det_abs = std::fabs(det(b));
    rec.bound_ok = !rec.admissible || rec.det_abs >= 2.0 * std::numbers::sqrt3 - tol.eps_eq;
    rec.hexagonal = rec.admissible && hexagonal_shape(r.basis, tol.eps_eq);
    return rec;
}

}  // namespace thue
