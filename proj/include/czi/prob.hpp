#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace czi {

// Binary entropy h_b(x) = -x log2(x) - (1-x) log2(1-x), in bits.
// Exact 0 at the endpoints. Arguments outside [0,1] by more than 1e-12
// are a domain error; within that tolerance they are clamped.
inline double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) {
        if (x < -1e-12 || x > 1.0 + 1e-12) {
            throw std::domain_error("binary_entropy: argument " + std::to_string(x) +
                                    " outside [0,1]");
        }
        x = x < 0.0 ? 0.0 : 1.0;
    }
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

namespace detail {

// binary entropy without the domain check, for hot loops that already
// guarantee x in [0,1]
inline double hb_unchecked(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

inline constexpr double kZeroMass = 1e-300; // events below this are skipped

} // namespace detail

// Finite probability mass function. Entries below -1e-15 are rejected,
// tiny negative roundoff is clamped to zero, and the total mass must be
// within 1e-12 of one.
class ProbVector {
public:
    explicit ProbVector(std::vector<double> p) : p_(std::move(p)) {
        double sum = 0.0;
        for (std::size_t i = 0; i < p_.size(); ++i) {
            if (!std::isfinite(p_[i])) {
                throw std::invalid_argument("ProbVector: entry " + std::to_string(i) +
                                            " is not finite");
            }
            if (p_[i] < 0.0) {
                if (p_[i] < -1e-15) {
                    throw std::invalid_argument("ProbVector: entry " + std::to_string(i) +
                                                " is negative: " + std::to_string(p_[i]));
                }
                p_[i] = 0.0;
            }
            sum += p_[i];
        }
        if (std::abs(sum - 1.0) > 1e-12) {
            throw std::invalid_argument("ProbVector: mass sums to " + std::to_string(sum) +
                                        ", expected 1");
        }
    }

    ProbVector(std::initializer_list<double> p) : ProbVector(std::vector<double>(p)) {}

    double operator[](std::size_t i) const { return p_[i]; }
    std::size_t size() const { return p_.size(); }
    const std::vector<double>& values() const { return p_; }

private:
    std::vector<double> p_;
};

// Shannon entropy in bits, with 0 log 0 = 0.
inline double entropy(const ProbVector& p) {
    double h = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] > detail::kZeroMass) h -= p[i] * std::log2(p[i]);
    }
    return h;
}

} // namespace czi
