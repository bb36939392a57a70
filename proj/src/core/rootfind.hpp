#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace nullfront {

/**
 * Roots of f on [a, b]: uniform sign-change scan refined by bisection to
 * bracket width `width_tol`.  Tangential roots (no sign change) are caught
 * as grid-local minima of |f| below `value_tol` and refined by bisecting
 * f' around the minimum.
 */
inline std::vector<double> scan_roots(const std::function<double(double)>& f,
                                      const std::function<double(double)>& df, double a, double b,
                                      int grid, double value_tol, double width_tol = 1e-12) {
    std::vector<double> roots;
    const auto bisect = [&](const std::function<double(double)>& fn, double lo, double hi) {
        double flo = fn(lo);
        for (int it = 0; it < 200 && hi - lo > width_tol; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = fn(mid);
            if (flo * fm <= 0.0) {
                hi = mid;
            } else {
                lo = mid;
                flo = fm;
            }
        }
        return 0.5 * (lo + hi);
    };
    const auto push = [&](double r) {
        for (double got : roots)
            if (std::fabs(got - r) < std::max(1e-9, 10.0 * width_tol)) return;
        roots.push_back(r);
    };

    std::vector<double> xs(grid + 1), ys(grid + 1);
    for (int i = 0; i <= grid; ++i) {
        xs[i] = a + (b - a) * static_cast<double>(i) / grid;
        ys[i] = f(xs[i]);
    }
    for (int i = 0; i < grid; ++i) {
        if (ys[i] == 0.0) push(xs[i]);
        else if (ys[i] * ys[i + 1] < 0.0) push(bisect(f, xs[i], xs[i + 1]));
    }
    if (ys[grid] == 0.0) push(xs[grid]);

    // Tangential candidates: |f| dips below value_tol without crossing.
    for (int i = 1; i < grid; ++i) {
        if (std::fabs(ys[i]) >= value_tol) continue;
        if (std::fabs(ys[i]) > std::fabs(ys[i - 1]) || std::fabs(ys[i]) > std::fabs(ys[i + 1]))
            continue;
        const double dlo = df(xs[i - 1]), dhi = df(xs[i + 1]);
        double r = xs[i];
        if (dlo * dhi < 0.0) r = bisect(df, xs[i - 1], xs[i + 1]);
        if (std::fabs(f(r)) < value_tol) push(r);
    }
    // A root sitting on a range endpoint produces no crossing inside the
    // scan window; accept the endpoint when |f| is already below tolerance.
    if (std::fabs(ys[0]) < value_tol && std::fabs(ys[0]) <= std::fabs(ys[1])) push(xs[0]);
    if (std::fabs(ys[grid]) < value_tol && std::fabs(ys[grid]) <= std::fabs(ys[grid - 1]))
        push(xs[grid]);

    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace nullfront
