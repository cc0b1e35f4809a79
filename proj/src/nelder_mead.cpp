#include "markdiv/nelder_mead.hpp"

#include <algorithm>
#include <cmath>

namespace markdiv {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> verts;
    verts.reserve(n + 1);
    verts.push_back(x0);
    for (std::size_t i = 0; i < n; ++i) {
        auto v = x0;
        v[i] += opts.initial_step;
        verts.push_back(std::move(v));
    }
    std::vector<double> fv(n + 1);
    for (std::size_t i = 0; i <= n; ++i) fv[i] = f(verts[i]);

    std::vector<std::size_t> order(n + 1);
    auto sort_order = [&] {
        for (std::size_t i = 0; i <= n; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    };

    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    std::size_t iter = 0;
    for (; iter < opts.max_iters; ++iter) {
        sort_order();
        const std::size_t best = order[0], worst = order[n], second_worst = order[n - 1];
        if (std::abs(fv[worst] - fv[best]) <= opts.f_tol) break;

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t j = 0; j < n; ++j) centroid[j] += verts[i][j];
        }
        for (double& cj : centroid) cj /= static_cast<double>(n);

        for (std::size_t j = 0; j < n; ++j)
            xr[j] = centroid[j] + opts.alpha * (centroid[j] - verts[worst][j]);
        const double fr = f(xr);

        if (fr < fv[best]) {
            for (std::size_t j = 0; j < n; ++j)
                xe[j] = centroid[j] + opts.gamma * (xr[j] - centroid[j]);
            const double fe = f(xe);
            if (fe < fr) {
                verts[worst] = xe;
                fv[worst] = fe;
            } else {
                verts[worst] = xr;
                fv[worst] = fr;
            }
        } else if (fr < fv[second_worst]) {
            verts[worst] = xr;
            fv[worst] = fr;
        } else {
            const bool outside = fr < fv[worst];
            const auto& base = outside ? xr : verts[worst];
            for (std::size_t j = 0; j < n; ++j)
                xc[j] = centroid[j] + opts.rho * (base[j] - centroid[j]);
            const double fc = f(xc);
            if (fc < std::min(fr, fv[worst])) {
                verts[worst] = xc;
                fv[worst] = fc;
            } else {
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t j = 0; j < n; ++j)
                        verts[i][j] = verts[best][j] + opts.sigma * (verts[i][j] - verts[best][j]);
                    fv[i] = f(verts[i]);
                }
            }
        }
    }

    sort_order();
    return {verts[order[0]], fv[order[0]], iter};
}

} // namespace markdiv
