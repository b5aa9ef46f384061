#pragma once

// Minimum-error discrimination of two pure coherent-state signals.
// The optimal success probability (Helstrom bound) for priors q0, q1 and
// state overlap s is (1 + sqrt(1 - 4 q0 q1 s^2)) / 2, and it is attained by
// a projective measurement built on the orthogonal cat states
// |C+-> = N+- (|psi0> +- |psi1>), N+- = 1/sqrt(2(1 +- s)).

#include "states.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace nscs {

struct BinaryEnsemble {
    FamilySpec family;
    double alpha0 = 0.0;
    double alpha1 = 0.0;
    double q0 = 0.5;
    double q1 = 0.5;
    FockVector state0;
    FockVector state1;
};

struct DegenerateEnsembleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BinaryEnsemble make_ensemble(const FamilySpec& family, double alpha0, double alpha1,
                                    double q0, TruncationPolicy policy = {}) {
    if (!(q0 >= 0.0 && q0 <= 1.0)) throw std::invalid_argument("make_ensemble: q0 must lie in [0, 1]");
    BinaryEnsemble e;
    e.family = family;
    e.alpha0 = alpha0;
    e.alpha1 = alpha1;
    e.q0 = q0;
    e.q1 = 1.0 - q0;
    e.state0 = fock_coefficients(family, alpha0, policy);
    e.state1 = fock_coefficients(family, alpha1, policy);
    return e;
}

// On-off keying: |alpha, h> vs the vacuum |0, h>.
inline BinaryEnsemble make_ook(const FamilySpec& family, double alpha, double q0,
                               TruncationPolicy policy = {}) {
    return make_ensemble(family, alpha, 0.0, q0, policy);
}

// Binary phase-shift keying: |alpha, h> vs |-alpha, h>.
inline BinaryEnsemble make_bpsk(const FamilySpec& family, double alpha, double q0,
                                TruncationPolicy policy = {}) {
    return make_ensemble(family, alpha, -alpha, q0, policy);
}

inline double state_overlap(const BinaryEnsemble& e) { return overlap(e.state0, e.state1); }

inline double helstrom_bound(const BinaryEnsemble& e) {
    const double s = state_overlap(e);
    const double disc = 1.0 - 4.0 * e.q0 * e.q1 * s * s;
    return 0.5 * (1.0 + std::sqrt(std::max(disc, 0.0)));
}

// Orthonormal cat pair spanning the signal plane.
struct CatBasis {
    std::vector<double> cat_plus;
    std::vector<double> cat_minus;
    double overlap_s = 0.0; // s = <psi0|psi1>
};

namespace detail {

inline double padded(const std::vector<double>& v, std::size_t i) {
    return i < v.size() ? v[i] : 0.0;
}

inline void check_nondegenerate(double s) {
    if (std::abs(s) >= 1.0 - 1e-9) {
        throw DegenerateEnsembleError("ensemble is degenerate: |<psi0|psi1>| >= 1 - 1e-9");
    }
}

} // namespace detail

inline CatBasis cat_basis(const BinaryEnsemble& e) {
    const double s = state_overlap(e);
    detail::check_nondegenerate(s);
    const std::size_t n = std::max(e.state0.amplitudes.size(), e.state1.amplitudes.size());
    const double np = 1.0 / std::sqrt(2.0 * (1.0 + s));
    const double nm = 1.0 / std::sqrt(2.0 * (1.0 - s));
    CatBasis basis;
    basis.overlap_s = s;
    basis.cat_plus.resize(n);
    basis.cat_minus.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = detail::padded(e.state0.amplitudes, i);
        const double b = detail::padded(e.state1.amplitudes, i);
        basis.cat_plus[i] = np * (a + b);
        basis.cat_minus[i] = nm * (a - b);
    }
    return basis;
}

struct ProjectiveAngles {
    double xi = 0.0;
    double zeta = 0.0;
};

// Success probability of the projective measurement
//   |pi0> = cos(xi)|C+> + e^{i zeta} sin(xi)|C->,
//   |pi1> = sin(xi)|C+> - e^{i zeta} cos(xi)|C->,
// evaluated directly from the amplitude lists.
inline double projective_success(const BinaryEnsemble& e, double xi, double zeta) {
    const CatBasis basis = cat_basis(e);
    auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
        const std::size_t n = std::min(a.size(), b.size());
        long double s = 0.0L;
        for (std::size_t i = 0; i < n; ++i) s += static_cast<long double>(a[i]) * b[i];
        return static_cast<double>(s);
    };
    const double cp0 = dot(basis.cat_plus, e.state0.amplitudes);
    const double cm0 = dot(basis.cat_minus, e.state0.amplitudes);
    const double cp1 = dot(basis.cat_plus, e.state1.amplitudes);
    const double cm1 = dot(basis.cat_minus, e.state1.amplitudes);
    const std::complex<double> conj_phase(std::cos(zeta), -std::sin(zeta)); // e^{-i zeta}
    const std::complex<double> amp0 = std::cos(xi) * cp0 + conj_phase * (std::sin(xi) * cm0);
    const std::complex<double> amp1 = std::sin(xi) * cp1 - conj_phase * (std::cos(xi) * cm1);
    return e.q0 * std::norm(amp0) + e.q1 * std::norm(amp1);
}

// Maximizing angles: 2 xi = atan2(sqrt(1-s^2), (q0-q1) s) picks the branch
// that maximizes the success probability for every sign of (q0-q1) s, with
// zeta = 0; the maximum then equals the Helstrom bound.
inline ProjectiveAngles optimal_projective_angles(const BinaryEnsemble& e) {
    const double s = state_overlap(e);
    detail::check_nondegenerate(s);
    const double xi = 0.5 * std::atan2(std::sqrt(std::max(0.0, 1.0 - s * s)), (e.q0 - e.q1) * s);
    return {xi, 0.0};
}

// Independent optimality oracle: scan xi over [0, pi) x zeta in {0, pi},
// then refine by ternary search. Any rank-1 projective measurement in the
// two-state span is covered by this parameterization.
inline double brute_force_optimum(const BinaryEnsemble& e, int grid) {
    if (grid < 100) throw std::invalid_argument("brute_force_optimum: grid must be >= 100");
    double best = 0.0, best_xi = 0.0, best_zeta = 0.0;
    for (double zeta : {0.0, specfun::kPi}) {
        for (int i = 0; i < grid; ++i) {
            const double xi = specfun::kPi * i / grid;
            const double p = projective_success(e, xi, zeta);
            if (p > best) {
                best = p;
                best_xi = xi;
                best_zeta = zeta;
            }
        }
    }
    double lo = best_xi - specfun::kPi / grid;
    double hi = best_xi + specfun::kPi / grid;
    for (int it = 0; it < 200; ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (projective_success(e, m1, best_zeta) < projective_success(e, m2, best_zeta)) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    return std::max(best, projective_success(e, 0.5 * (lo + hi), best_zeta));
}

// Homodyne-detection baseline for BPSK standard coherent states.
inline double shot_noise_limit(double alpha) {
    if (alpha < 0.0) throw std::domain_error("shot_noise_limit: requires alpha >= 0");
    return 1.0 - 0.5 * specfun::erfc(std::sqrt(2.0) * alpha);
}

} // namespace nscs
