#pragma once

#include <cstdint>
#include <vector>

namespace thue {

/// Exact multi-component floating-point number: the value is the exact sum
/// of its components, which are nonoverlapping and stored in increasing
/// order of magnitude with zeros eliminated. Operations follow Shewchuk's
/// expansion algorithms (grow, sum, scale) and are exact as long as no
/// component overflows or underflows.
class Expansion {
public:
    Expansion() = default;
    explicit Expansion(double value);

    /// a - b, exactly.
    static Expansion difference(double a, double b);
    /// a * b, exactly.
    static Expansion product(double a, double b);

    friend Expansion operator+(const Expansion& e, const Expansion& f);
    friend Expansion operator-(const Expansion& e, const Expansion& f);
    friend Expansion operator*(const Expansion& e, const Expansion& f);
    Expansion operator-() const;
    Expansion scaled(double b) const;

    /// Sign of the exact value.
    int sign() const;
    /// Floating-point approximation (sum from least significant component).
    double estimate() const;
    std::size_t size() const { return components_.size(); }
    const std::vector<double>& components() const { return components_; }

private:
    std::vector<double> components_;
};

}  // namespace thue
