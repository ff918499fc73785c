#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include <czi/channel.hpp>
#include <czi/prob.hpp>

namespace czi {

// The information quantities entering the weighted sum-rate objectives,
// all in bits, under independent inputs P(X1=0) = p, P(X2=0) = q.
struct RateTerms {
    double i_x1_y1;          // I(X1;Y1)
    double i_x2_y1_given_x1; // I(X2;Y1|X1)
    double i_joint;          // I(X1,X2;Y1)
    double h_x2;             // H(X2)
};

namespace detail {

// Per-channel constants reused across many (p,q) evaluations.
struct ChannelCache {
    double m00, m01, m10, m11;
    double hb00, hb01, hb10, hb11;

    explicit ChannelCache(const CziChannel& ch)
        : m00(ch.m[0][0]), m01(ch.m[0][1]), m10(ch.m[1][0]), m11(ch.m[1][1]),
          hb00(hb_unchecked(m00)), hb01(hb_unchecked(m01)),
          hb10(hb_unchecked(m10)), hb11(hb_unchecked(m11)) {}
};

inline RateTerms rate_terms_cached(const ChannelCache& c, double p, double q) {
    const double pb = 1.0 - p, qb = 1.0 - q;
    const double y0 = q * c.m00 + qb * c.m01; // P(Y1=0 | X1=0)
    const double y1 = q * c.m10 + qb * c.m11; // P(Y1=0 | X1=1)
    const double hy0 = hb_unchecked(y0);
    const double hy1 = hb_unchecked(y1);
    const double hmix = hb_unchecked(p * y0 + pb * y1);     // H(Y1)
    const double hc0 = q * c.hb00 + qb * c.hb01;            // H(Y1|X1=0,X2)
    const double hc1 = q * c.hb10 + qb * c.hb11;            // H(Y1|X1=1,X2)
    RateTerms t;
    t.i_x1_y1 = std::max(0.0, hmix - (p * hy0 + pb * hy1));
    t.i_x2_y1_given_x1 = std::max(0.0, p * (hy0 - hc0) + pb * (hy1 - hc1));
    t.i_joint = std::max(0.0, hmix - (p * hc0 + pb * hc1));
    t.h_x2 = hb_unchecked(q);
    return t;
}

// H(Y1) alone, needed for I(U2;Y1) in the auxiliary-variable rate pair
inline double output_entropy(const ChannelCache& c, double p, double q) {
    const double y0 = q * c.m00 + (1.0 - q) * c.m01;
    const double y1 = q * c.m10 + (1.0 - q) * c.m11;
    return hb_unchecked(p * y0 + (1.0 - p) * y1);
}

} // namespace detail

// Exact mutual informations for the single-letter channel under the product
// input law p1(x1) p2(x2) with p = P(X1=0), q = P(X2=0).
inline RateTerms rate_terms(const CziChannel& ch, double p, double q) {
    if (p < -1e-12 || p > 1.0 + 1e-12 || q < -1e-12 || q > 1.0 + 1e-12) {
        throw std::domain_error("rate_terms: p and q must be in [0,1]");
    }
    p = std::min(1.0, std::max(0.0, p));
    q = std::min(1.0, std::max(0.0, q));
    return detail::rate_terms_cached(detail::ChannelCache(ch), p, q);
}

struct TwoLetterRateTerms {
    double i_x1_y1; // I(X1-pair; Y1-pair), second sender treated as noise
    double h_x2;    // H(X2-pair)
};

// Information terms of the product channel for independent pair
// distributions pi1 (over X1-pairs) and pi2 (over X2-pairs). Un-normalized:
// callers divide by two when quoting per-use rates.
inline TwoLetterRateTerms two_letter_rate_terms(const TwoLetterChannel& ch2,
                                                const ProbVector& pi1,
                                                const ProbVector& pi2) {
    if (pi1.size() != 4 || pi2.size() != 4) {
        throw std::invalid_argument("two_letter_rate_terms: pair distributions must have length 4");
    }
    const auto& t = ch2.t();
    std::array<std::array<double, 4>, 4> w{}; // P(ypair | x1pair), X2 averaged out
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (pi2[j] <= 0.0) continue;
            for (int k = 0; k < 4; ++k) w[i][k] += pi2[j] * t[i][j][k];
        }
    std::array<double, 4> out{}; // output law
    for (int i = 0; i < 4; ++i) {
        if (pi1[i] <= 0.0) continue;
        for (int k = 0; k < 4; ++k) out[k] += pi1[i] * w[i][k];
    }
    double info = 0.0;
    for (int i = 0; i < 4; ++i) {
        if (pi1[i] <= detail::kZeroMass) continue;
        for (int k = 0; k < 4; ++k) {
            if (w[i][k] > detail::kZeroMass && out[k] > detail::kZeroMass) {
                info += pi1[i] * w[i][k] * std::log2(w[i][k] / out[k]);
            }
        }
    }
    return {std::max(0.0, info), entropy(pi2)};
}

} // namespace czi
