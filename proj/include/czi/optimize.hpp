#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace czi {

// Worker count: explicit argument wins, then the CZI_THREADS environment
// variable, then hardware concurrency.
inline int resolve_threads(int requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CZI_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(i) for i in [0, n). Work is split into contiguous blocks; callers
// write results into per-index slots and reduce sequentially afterwards, so
// the outcome does not depend on the thread count.
template <typename Fn>
void parallel_for_index(std::size_t n, Fn&& fn, int threads = 0) {
    const int workers = std::min<std::size_t>(static_cast<std::size_t>(resolve_threads(threads)), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::size_t chunk = (n + static_cast<std::size_t>(workers) - 1) / static_cast<std::size_t>(workers);
    for (int w = 0; w < workers; ++w) {
        const std::size_t lo = static_cast<std::size_t>(w) * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

// Golden-section maximization on [a,b]; assumes the bracket contains a
// single local maximum. Returns (argmax, value).
template <typename F>
std::pair<double, double> golden_max(F&& f, double a, double b, double tol_x = 1e-11) {
    constexpr double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol_x) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

// Dense grid scan over [0,1] followed by golden refinement of the best
// bracket. Ties on the grid keep the smallest abscissa.
template <typename F>
std::pair<double, double> grid_golden_max(F&& f, int n_grid, double tol_x = 1e-11) {
    const double h = 1.0 / static_cast<double>(n_grid - 1);
    double best_x = 0.0, best_v = f(0.0);
    for (int i = 1; i < n_grid; ++i) {
        const double x = (i == n_grid - 1) ? 1.0 : i * h;
        const double v = f(x);
        if (v > best_v) {
            best_v = v;
            best_x = x;
        }
    }
    auto [x, v] = golden_max(f, std::max(0.0, best_x - h), std::min(1.0, best_x + h), tol_x);
    if (v >= best_v) return {x, v};
    return {best_x, best_v};
}

// Euclidean projection onto the probability simplex.
template <std::size_t N>
std::array<double, N> project_simplex(std::array<double, N> v) {
    std::array<double, N> u = v;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double css = 0.0, theta = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        css += u[i];
        const double cand = (1.0 - css) / static_cast<double>(i + 1);
        if (u[i] + cand > 0.0) theta = cand;
    }
    for (std::size_t i = 0; i < N; ++i) v[i] = std::max(0.0, v[i] + theta);
    double s = 0.0;
    for (double x : v) s += x;
    if (s > 0.0) {
        for (double& x : v) x /= s; // wash out rounding
    } else {
        v.fill(1.0 / static_cast<double>(N));
    }
    return v;
}

// Nelder-Mead maximization over the 4-point probability simplex, run in the
// three free coordinates with the remainder folded into the fourth and
// feasibility restored by projection. Deterministic given the start.
template <typename F>
std::pair<std::array<double, 4>, double> nelder_mead_simplex4(F&& f,
                                                              const std::array<double, 4>& start,
                                                              double scale,
                                                              int max_iter) {
    using V3 = std::array<double, 3>;
    auto full = [](const V3& x) {
        return project_simplex<4>({x[0], x[1], x[2], 1.0 - x[0] - x[1] - x[2]});
    };
    std::array<V3, 4> pts;
    std::array<double, 4> vals;
    pts[0] = {start[0], start[1], start[2]};
    vals[0] = f(full(pts[0]));
    for (int i = 0; i < 3; ++i) {
        V3 e = pts[0];
        e[static_cast<std::size_t>(i)] += scale;
        pts[static_cast<std::size_t>(i) + 1] = e;
        vals[static_cast<std::size_t>(i) + 1] = f(full(e));
    }
    auto order_desc = [&] {
        std::array<int, 4> idx{0, 1, 2, 3};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return vals[a] > vals[b]; });
        std::array<V3, 4> p2;
        std::array<double, 4> v2;
        for (int i = 0; i < 4; ++i) {
            p2[i] = pts[idx[i]];
            v2[i] = vals[idx[i]];
        }
        pts = p2;
        vals = v2;
    };
    for (int it = 0; it < max_iter; ++it) {
        order_desc();
        if (vals[0] - vals[3] < 1e-13) break;
        V3 centroid{};
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) centroid[k] += pts[i][k] / 3.0;
        auto blend = [&](double t) {
            V3 x;
            for (int k = 0; k < 3; ++k) x[k] = centroid[k] + t * (centroid[k] - pts[3][k]);
            return x;
        };
        const V3 xr = blend(1.0);
        const double fr = f(full(xr));
        if (fr > vals[0]) {
            const V3 xe = blend(2.0);
            const double fe = f(full(xe));
            if (fe > fr) {
                pts[3] = xe;
                vals[3] = fe;
            } else {
                pts[3] = xr;
                vals[3] = fr;
            }
        } else if (fr > vals[2]) {
            pts[3] = xr;
            vals[3] = fr;
        } else {
            const V3 xc = blend(-0.5);
            const double fc = f(full(xc));
            if (fc > vals[3]) {
                pts[3] = xc;
                vals[3] = fc;
            } else {
                for (int i = 1; i < 4; ++i) {
                    for (int k = 0; k < 3; ++k) pts[i][k] = pts[0][k] + 0.5 * (pts[i][k] - pts[0][k]);
                    vals[i] = f(full(pts[i]));
                }
            }
        }
    }
    order_desc();
    return {full(pts[0]), vals[0]};
}

} // namespace czi
