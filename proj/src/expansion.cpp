#include "thue/expansion.hpp"

#include <cmath>

namespace thue {

namespace {

inline void two_sum(double a, double b, double& x, double& y) {
    x = a + b;
    const double bv = x - a;
    const double av = x - bv;
    const double br = b - bv;
    const double ar = a - av;
    y = ar + br;
}

inline void two_diff(double a, double b, double& x, double& y) {
    x = a - b;
    const double bv = a - x;
    const double av = x + bv;
    const double br = bv - b;
    const double ar = a - av;
    y = ar + br;
}

inline void two_product(double a, double b, double& x, double& y) {
    x = a * b;
    y = std::fma(a, b, -x);
}

// Shewchuk's GROW-EXPANSION with zero elimination.
std::vector<double> grow(const std::vector<double>& e, double b) {
    std::vector<double> h;
    h.reserve(e.size() + 1);
    double q = b;
    for (double ei : e) {
        double sum = 0.0;
        double err = 0.0;
        two_sum(q, ei, sum, err);
        q = sum;
        if (err != 0.0) h.push_back(err);
    }
    if (q != 0.0 || h.empty()) h.push_back(q);
    if (h.size() == 1 && h[0] == 0.0) h.clear();
    return h;
}

}  // namespace

Expansion::Expansion(double value) {
    if (value != 0.0) components_.push_back(value);
}

Expansion Expansion::difference(double a, double b) {
    double x = 0.0;
    double y = 0.0;
    two_diff(a, b, x, y);
    Expansion r;
    if (y != 0.0) r.components_.push_back(y);
    if (x != 0.0) r.components_.push_back(x);
    return r;
}

Expansion Expansion::product(double a, double b) {
    double x = 0.0;
    double y = 0.0;
    two_product(a, b, x, y);
    Expansion r;
    if (y != 0.0) r.components_.push_back(y);
    if (x != 0.0) r.components_.push_back(x);
    return r;
}

Expansion operator+(const Expansion& e, const Expansion& f) {
    // EXPANSION-SUM: grow e by every component of f in increasing order.
    Expansion r = e;
    for (double fi : f.components_) r.components_ = grow(r.components_, fi);
    return r;
}

Expansion Expansion::operator-() const {
    Expansion r = *this;
    for (double& c : r.components_) c = -c;
    return r;
}

Expansion operator-(const Expansion& e, const Expansion& f) { return e + (-f); }

Expansion Expansion::scaled(double b) const {
    // SCALE-EXPANSION with zero elimination.
    Expansion r;
    if (components_.empty() || b == 0.0) return r;
    auto& h = r.components_;
    h.reserve(2 * components_.size());
    double q = 0.0;
    double hh = 0.0;
    two_product(components_[0], b, q, hh);
    if (hh != 0.0) h.push_back(hh);
    for (std::size_t i = 1; i < components_.size(); ++i) {
        double p1 = 0.0;
        double p0 = 0.0;
        two_product(components_[i], b, p1, p0);
        double sum = 0.0;
        two_sum(q, p0, sum, hh);
        if (hh != 0.0) h.push_back(hh);
        two_sum(p1, sum, q, hh);
        if (hh != 0.0) h.push_back(hh);
    }
    if (q != 0.0) h.push_back(q);
    return r;
}

Expansion operator*(const Expansion& e, const Expansion& f) {
    Expansion r;
    for (double fi : f.components_) r = r + e.scaled(fi);
    return r;
}

int Expansion::sign() const {
    if (components_.empty()) return 0;
    return components_.back() > 0.0 ? 1 : -1;
}

double Expansion::estimate() const {
    double s = 0.0;
    for (double c : components_) s += c;
    return s;
}

}  // namespace thue
