#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace czi {

// Binary interference channel with a clean second link: Y2 = X2 carries no
// stored data, and the interfered link is described by
// m[x1][x2] = P(Y1 = 0 | X1 = x1, X2 = x2). Only the Y1 = 0 probabilities
// are stored; the complements are derived.
struct CziChannel {
    std::array<std::array<double, 2>, 2> m;

    double p_y1_zero(int x1, int x2) const { return m[x1][x2]; }

    // P(Y1=0 | X1=x1) under P(X2=0) = q
    double y1_zero_given_x1(int x1, double q) const {
        return q * m[x1][0] + (1.0 - q) * m[x1][1];
    }

    bool operator==(const CziChannel& o) const { return m == o.m; }
};

// Checks all four row-major entries (m[0][0], m[0][1], m[1][0], m[1][1])
// and returns the channel. Out-of-range or non-finite entries raise
// std::invalid_argument naming the offending index.
inline CziChannel validate_channel(const std::array<double, 4>& entries) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (!std::isfinite(entries[i])) {
            throw std::invalid_argument("channel entry " + std::to_string(i) +
                                        " is not finite");
        }
        if (entries[i] < 0.0 || entries[i] > 1.0) {
            throw std::invalid_argument("channel entry " + std::to_string(i) + " is " +
                                        std::to_string(entries[i]) +
                                        ", must be in [0,1]");
        }
    }
    return CziChannel{{{{entries[0], entries[1]}, {entries[2], entries[3]}}}};
}

// Canonical serialization: {"q": [[a,b],[c,d]]}, row index = x1, column = x2.
inline nlohmann::json to_json(const CziChannel& ch) {
    return nlohmann::json{{"q", {{ch.m[0][0], ch.m[0][1]}, {ch.m[1][0], ch.m[1][1]}}}};
}

inline CziChannel channel_from_json(const nlohmann::json& j) {
    const auto& q = j.at("q");
    if (!q.is_array() || q.size() != 2 || q[0].size() != 2 || q[1].size() != 2) {
        throw std::invalid_argument("channel json: \"q\" must be a 2x2 array");
    }
    return validate_channel({q[0][0].get<double>(), q[0][1].get<double>(),
                             q[1][0].get<double>(), q[1][1].get<double>()});
}

// Two consecutive uses of the channel seen as one use of the product
// channel: inputs are the pairs (x11,x12) and (x21,x22), the output is the
// pair (y11,y12), and the law factors letter by letter.
class TwoLetterChannel {
public:
    // pair index convention: (0,0)->0, (0,1)->1, (1,0)->2, (1,1)->3
    static constexpr int pair_index(int first, int second) { return first * 2 + second; }

    // t[i1][i2][k] = P(ypair = k | x1pair = i1, x2pair = i2)
    const std::array<std::array<std::array<double, 4>, 4>, 4>& t() const { return t_; }

    double prob(int x11, int x12, int x21, int x22, int y11, int y12) const {
        return t_[pair_index(x11, x12)][pair_index(x21, x22)][pair_index(y11, y12)];
    }

    friend TwoLetterChannel product_channel(const CziChannel& ch);

private:
    std::array<std::array<std::array<double, 4>, 4>, 4> t_{};
};

inline TwoLetterChannel product_channel(const CziChannel& ch) {
    TwoLetterChannel out;
    for (int x11 = 0; x11 < 2; ++x11)
        for (int x12 = 0; x12 < 2; ++x12)
            for (int x21 = 0; x21 < 2; ++x21)
                for (int x22 = 0; x22 < 2; ++x22) {
                    const double a = ch.m[x11][x21]; // P(y11 = 0)
                    const double b = ch.m[x12][x22]; // P(y12 = 0)
                    auto& row = out.t_[TwoLetterChannel::pair_index(x11, x12)]
                                      [TwoLetterChannel::pair_index(x21, x22)];
                    row[0] = a * b;
                    row[1] = a * (1.0 - b);
                    row[2] = (1.0 - a) * b;
                    row[3] = (1.0 - a) * (1.0 - b);
                }
    return out;
}

} // namespace czi
