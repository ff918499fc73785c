#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace czi {

// Upper concave envelope of a function on [0,1], stored as its piecewise
// linear breakpoint representation. Breakpoints are the upper convex hull
// vertices of the sampled graph; between consecutive breakpoints the
// envelope is either the function itself (touching stretch, every sample is
// a vertex) or a bridging chord.
struct Envelope {
    std::vector<double> xs; // sorted, xs.front()==0, xs.back()==1
    std::vector<double> ys;
    double resolution = 0.0; // initial uniform grid step
    int refine_passes = 0;

    // piecewise-linear interpolation of the breakpoints
    double interp(double x) const {
        if (x <= xs.front()) return ys.front();
        if (x >= xs.back()) return ys.back();
        const auto it = std::upper_bound(xs.begin(), xs.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - xs.begin());
        const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
        return ys[i - 1] + t * (ys[i] - ys[i - 1]);
    }
};

// Two-point mixture over the abscissa that supports the envelope at a query
// point: w on x_lo, (1-w) on x_hi, with w*x_lo + (1-w)*x_hi equal to the
// query. Degenerate (x, x, 1) where the envelope touches the function.
struct MixtureSupport {
    double x_lo;
    double x_hi;
    double w;

    bool degenerate() const { return x_lo == x_hi; }
};

namespace detail {

// Upper convex hull (monotone chain) of points sorted by x. Collinear
// middle points are dropped, so every chord keeps only its two endpoints.
inline std::vector<std::size_t> upper_hull_indices(const std::vector<double>& xs,
                                                   const std::vector<double>& ys) {
    std::vector<std::size_t> hull;
    hull.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        while (hull.size() >= 2) {
            const std::size_t o = hull[hull.size() - 2];
            const std::size_t a = hull[hull.size() - 1];
            const double cross = (xs[a] - xs[o]) * (ys[i] - ys[o]) -
                                 (ys[a] - ys[o]) * (xs[i] - xs[o]);
            if (cross >= 0.0) hull.pop_back();
            else break;
        }
        hull.push_back(i);
    }
    return hull;
}

inline void check_finite(double x, double y) {
    if (!std::isfinite(y)) {
        throw std::domain_error("upper_concave_envelope: function value at x = " +
                                std::to_string(x) + " is not finite");
    }
}

} // namespace detail

// Builds the envelope by sampling f on a uniform n_grid-point grid
// (endpoints always included), taking the upper hull of the samples, then
// refining: each pass inserts samples at half the previous spacing just
// inside every hull edge that bridges a gap, so chord tangency points are
// located to within resolution / 2^refine_passes.
template <typename F>
Envelope upper_concave_envelope(F&& f, int n_grid = 16385, int refine_passes = 6) {
    if (n_grid < 3) throw std::invalid_argument("upper_concave_envelope: n_grid must be >= 3");
    if (refine_passes < 0) refine_passes = 0;

    const double h = 1.0 / static_cast<double>(n_grid - 1);
    std::vector<double> xs, ys;
    xs.reserve(static_cast<std::size_t>(n_grid) + 64);
    ys.reserve(static_cast<std::size_t>(n_grid) + 64);
    for (int i = 0; i < n_grid; ++i) {
        const double x = (i == n_grid - 1) ? 1.0 : i * h;
        const double y = f(x);
        detail::check_finite(x, y);
        xs.push_back(x);
        ys.push_back(y);
    }

    std::vector<std::size_t> hull = detail::upper_hull_indices(xs, ys);
    for (int pass = 1; pass <= refine_passes; ++pass) {
        const double step = h / static_cast<double>(1 << pass);
        std::vector<double> nx;
        for (std::size_t j = 0; j + 1 < hull.size(); ++j) {
            const double xa = xs[hull[j]];
            const double xb = xs[hull[j + 1]];
            if (xb - xa <= 1.5 * h) continue; // touching stretch, nothing to locate
            if (xa + step < xb) nx.push_back(xa + step);
            if (xb - step > xa) nx.push_back(xb - step);
        }
        if (nx.empty()) break;
        for (double x : nx) {
            const double y = f(x);
            detail::check_finite(x, y);
            xs.push_back(x);
            ys.push_back(y);
        }
        // merge-sort the fresh samples in
        std::vector<std::size_t> order(xs.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
        std::vector<double> sx(xs.size()), sy(ys.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            sx[i] = xs[order[i]];
            sy[i] = ys[order[i]];
        }
        xs.swap(sx);
        ys.swap(sy);
        hull = detail::upper_hull_indices(xs, ys);
    }

    Envelope env;
    env.xs.reserve(hull.size());
    env.ys.reserve(hull.size());
    for (std::size_t i : hull) {
        env.xs.push_back(xs[i]);
        env.ys.push_back(ys[i]);
    }
    env.resolution = h;
    env.refine_passes = refine_passes;
    return env;
}

// Envelope value at x. On touching stretches the breakpoint interpolation
// undershoots the function between samples, so the envelope as a function
// is the pointwise max of f and the hull interpolation; on chords the
// interpolation dominates f and is the envelope.
template <typename F>
double envelope_value(const Envelope& env, F&& f, double x) {
    return std::max(static_cast<double>(f(x)), env.interp(x));
}

// The (at most two-point) mixture achieving the envelope at x: degenerate
// where the envelope touches f, otherwise the endpoints of the bridging
// chord weighted to average to x.
template <typename F>
MixtureSupport envelope_support(const Envelope& env, F&& f, double x) {
    x = std::min(1.0, std::max(0.0, x));
    if (x <= env.xs.front()) return {env.xs.front(), env.xs.front(), 1.0};
    if (x >= env.xs.back()) return {env.xs.back(), env.xs.back(), 1.0};
    const auto it = std::upper_bound(env.xs.begin(), env.xs.end(), x);
    std::size_t i = static_cast<std::size_t>(it - env.xs.begin());
    const double xa = env.xs[i - 1], xb = env.xs[i];
    const double t = (x - xa) / (xb - xa);
    const double interp = env.ys[i - 1] + t * (env.ys[i] - env.ys[i - 1]);
    const double fx = f(x);
    const double scale = std::max({1.0, std::abs(interp), std::abs(fx)});
    if (fx >= interp - 1e-9 * scale) return {x, x, 1.0}; // envelope touches f here
    return {xa, xb, (xb - x) / (xb - xa)};
}

// Conservative bound on the envelope error from chord-tangency location.
// Interior chord endpoints are located to within delta = resolution/2^passes;
// the induced chord error is ~ |f''| delta^2 / 2 at each endpoint. Touching
// stretches are exact under envelope_value. Domain endpoints are exact.
template <typename F>
double envelope_error_bound(const Envelope& env, F&& f) {
    const double delta = env.resolution / static_cast<double>(1 << env.refine_passes);
    double worst = 0.0;
    for (std::size_t j = 0; j + 1 < env.xs.size(); ++j) {
        const double xa = env.xs[j], xb = env.xs[j + 1];
        if (xb - xa <= 1.5 * env.resolution) continue;
        for (double e : {xa, xb}) {
            if (e <= 0.0 || e >= 1.0) continue; // domain endpoint: exact vertex
            const double lo = std::max(0.0, e - delta), hi = std::min(1.0, e + delta);
            const double d2 = (f(hi) - 2.0 * f(e) + f(lo)) / (delta * delta);
            worst = std::max(worst, 0.5 * std::abs(d2) * delta * delta);
        }
    }
    return worst + 1e-14;
}

} // namespace czi
