#pragma once

// Derivative-free maximization by the Nelder-Mead simplex method with
// standard coefficients (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2) and an explicit deterministic multi-start list.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace nscs {

struct OptimizerConfig {
    std::vector<std::vector<double>> starts; // points in R^d, d <= 8
    double simplex_scale = 0.3;              // initial simplex edge per axis
    double tolerance = 1e-10;                // simplex-diameter convergence criterion
    int max_iterations = 2000;
};

struct MaximizeResult {
    std::vector<double> point;
    double value = 0.0;
    bool converged = false;
};

namespace detail {

inline bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

template <typename F>
MaximizeResult nelder_mead_single(F&& objective, const std::vector<double>& start,
                                  double scale, double tolerance, int max_iterations) {
    const std::size_t d = start.size();
    std::vector<std::vector<double>> vertex(d + 1, start);
    for (std::size_t i = 0; i < d; ++i) vertex[i + 1][i] += scale;
    std::vector<double> value(d + 1);
    for (std::size_t i = 0; i <= d; ++i) value[i] = objective(vertex[i]);

    std::vector<std::size_t> order(d + 1);
    bool converged = false;
    for (int iter = 0; iter < max_iterations; ++iter) {
        for (std::size_t i = 0; i <= d; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return value[a] > value[b]; });
        {
            std::vector<std::vector<double>> v2(d + 1);
            std::vector<double> f2(d + 1);
            for (std::size_t i = 0; i <= d; ++i) {
                v2[i] = std::move(vertex[order[i]]);
                f2[i] = value[order[i]];
            }
            vertex = std::move(v2);
            value = std::move(f2);
        }

        double diameter = 0.0;
        for (std::size_t i = 1; i <= d; ++i) {
            for (std::size_t k = 0; k < d; ++k) {
                diameter = std::max(diameter, std::abs(vertex[i][k] - vertex[0][k]));
            }
        }
        if (diameter < tolerance) {
            converged = true;
            break;
        }

        std::vector<double> centroid(d, 0.0);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t k = 0; k < d; ++k) centroid[k] += vertex[i][k];
        }
        for (std::size_t k = 0; k < d; ++k) centroid[k] /= static_cast<double>(d);

        auto blend = [&](double t) {
            std::vector<double> p(d);
            for (std::size_t k = 0; k < d; ++k) p[k] = centroid[k] + t * (centroid[k] - vertex[d][k]);
            return p;
        };

        const std::vector<double> reflected = blend(1.0);
        const double f_reflected = objective(reflected);
        if (f_reflected > value[0]) {
            const std::vector<double> expanded = blend(2.0);
            const double f_expanded = objective(expanded);
            if (f_expanded > f_reflected) {
                vertex[d] = expanded;
                value[d] = f_expanded;
            } else {
                vertex[d] = reflected;
                value[d] = f_reflected;
            }
            continue;
        }
        if (f_reflected > value[d - 1]) {
            vertex[d] = reflected;
            value[d] = f_reflected;
            continue;
        }
        const bool outside = f_reflected > value[d];
        const std::vector<double> contracted = blend(outside ? 0.5 : -0.5);
        const double f_contracted = objective(contracted);
        if ((outside && f_contracted >= f_reflected) || (!outside && f_contracted > value[d])) {
            vertex[d] = contracted;
            value[d] = f_contracted;
            continue;
        }
        for (std::size_t i = 1; i <= d; ++i) { // shrink toward the best vertex
            for (std::size_t k = 0; k < d; ++k) {
                vertex[i][k] = vertex[0][k] + 0.5 * (vertex[i][k] - vertex[0][k]);
            }
            value[i] = objective(vertex[i]);
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= d; ++i) {
        if (value[i] > value[best]) best = i;
    }
    return {vertex[best], value[best], converged};
}

} // namespace detail

// Runs one Nelder-Mead descent per start and reduces deterministically:
// highest value wins, ties broken by the lexicographically smallest point.
template <typename F>
MaximizeResult maximize(F&& objective, const OptimizerConfig& cfg) {
    if (cfg.starts.empty()) throw std::invalid_argument("maximize: starts must be nonempty");
    const std::size_t d = cfg.starts.front().size();
    if (d < 1 || d > 8) throw std::invalid_argument("maximize: dimension must be in [1, 8]");
    for (const auto& s : cfg.starts) {
        if (s.size() != d) throw std::invalid_argument("maximize: starts must share one dimension");
    }
    if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("maximize: tolerance must be > 0");
    if (!(cfg.simplex_scale > 0.0)) throw std::invalid_argument("maximize: simplex_scale must be > 0");
    if (cfg.max_iterations < 1) throw std::invalid_argument("maximize: max_iterations must be >= 1");

    MaximizeResult best;
    bool first = true;
    for (const auto& start : cfg.starts) {
        MaximizeResult r = detail::nelder_mead_single(objective, start, cfg.simplex_scale,
                                                      cfg.tolerance, cfg.max_iterations);
        if (first || r.value > best.value
            || (r.value == best.value && detail::lex_less(r.point, best.point))) {
            best = std::move(r);
            first = false;
        }
    }
    return best;
}

} // namespace nscs
