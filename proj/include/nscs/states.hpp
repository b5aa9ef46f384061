#pragma once

// Generalized coherent states |alpha, h> = sum_n alpha^n h_n(alpha^2) |n>,
// for four families of coefficient tuples h_n:
//   SCS   - standard (Glauber-Sudarshan): h_n(u) = exp(-u/2) / sqrt(n!)
//   OSCS  - optical spin:                 h_n(u) = sqrt(C(n_j, n)) (1+u)^{-n_j/2}, zero for n > n_j
//   BGCS  - Barut-Girardello:             h_n(u) = sqrt(G(2chi) / (n! G(2chi+n))) / sqrt(N_BG(u))
//   MSGCS - modified Susskind-Glogower:   h_n(u) = sqrt((n+1)/N_mSG(u)) J_{n+1}(2 sqrt u) / u^{(n+1)/2}
// Amplitudes are real throughout (alpha is restricted to the real line).

#include "specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace nscs {

enum class FamilyKind { SCS, OSCS, BGCS, MSGCS };

struct FamilySpec {
    FamilyKind kind = FamilyKind::SCS;
    int n_j = 0;      // OSCS only: spin size, >= 1
    double chi = 0.0; // BGCS only: Bargmann index, >= 1/2

    static FamilySpec scs() { return {FamilyKind::SCS, 0, 0.0}; }
    static FamilySpec oscs(int n_j) {
        if (n_j < 1) throw std::invalid_argument("FamilySpec::oscs: n_j must be >= 1");
        return {FamilyKind::OSCS, n_j, 0.0};
    }
    static FamilySpec bgcs(double chi) {
        if (!(chi >= 0.5)) throw std::invalid_argument("FamilySpec::bgcs: chi must be >= 1/2");
        return {FamilyKind::BGCS, 0, chi};
    }
    static FamilySpec msgcs() { return {FamilyKind::MSGCS, 0, 0.0}; }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

struct TruncationPolicy {
    double tail_tolerance = 1e-14;
    int hard_cap = 256;
};

// Truncated Fock expansion of |alpha, h>. tail_bound is a certified upper
// bound on the discarded probability sum_{n > N} c_n^2.
struct FockVector {
    std::vector<double> amplitudes; // amplitudes[n] = alpha^n h_n(alpha^2)
    double alpha = 0.0;
    FamilySpec family;
    double tail_bound = 0.0;
};

struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnreachableTargetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Largest supported u = alpha^2; beyond this the power-series special
// functions no longer meet their accuracy contract.
inline constexpr double kMaxU = 36.0;

namespace detail {

using specfun::detail::log_gamma;

// J_{n+1}(2 sqrt u) / u^{(n+1)/2} = sum_k (-u)^k / (k! (n+1+k)!).
// Finite at u = 0 (value 1/(n+1)!), which the plain Bessel quotient is not.
inline double msg_bessel_ratio(int n, double u) {
    long double term = 1.0L;
    for (int i = 2; i <= n + 1; ++i) term /= i;
    long double sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= -static_cast<long double>(u) / (static_cast<long double>(k) * (n + 1.0L + k));
        sum += term;
        if (std::abs(static_cast<double>(term)) < 1e-17 * (1.0 + std::abs(static_cast<double>(sum)))) break;
    }
    return static_cast<double>(sum);
}

} // namespace detail

// N_BG(u) = Gamma(2chi) u^{1/2-chi} I_{2chi-1}(2 sqrt u), evaluated as the
// everywhere-positive series sum_k Gamma(2chi) u^k / (k! Gamma(2chi+k)),
// which is finite (= 1) at u = 0.
inline double normalization_bg(double u, double chi) {
    if (u < 0.0) throw std::domain_error("normalization_bg: requires u >= 0");
    if (!(chi >= 0.5)) throw std::invalid_argument("normalization_bg: chi must be >= 1/2");
    long double term = 1.0L;
    long double sum = term;
    for (int k = 1; k < 400; ++k) {
        term *= static_cast<long double>(u) / (static_cast<long double>(k) * (2.0L * chi - 1.0L + k));
        sum += term;
        if (static_cast<double>(term) < 1e-17 * (1.0 + static_cast<double>(sum))) break;
    }
    return static_cast<double>(sum);
}

// N_mSG(u) = 2 J_0^2 + 2 J_1^2 - J_0 J_1 / sqrt(u) at argument 2 sqrt(u),
// with J_1/sqrt(u) taken through its series limit so that N_mSG(0) = 1.
inline double normalization_msg(double u) {
    if (u < 0.0) throw std::domain_error("normalization_msg: requires u >= 0");
    const double x = 2.0 * std::sqrt(u);
    const double j0 = specfun::bessel_j(0, x);
    const double j1 = specfun::bessel_j(1, x);
    const double r0 = detail::msg_bessel_ratio(0, u); // J_1(2 sqrt u) / sqrt u
    return 2.0 * (j0 * j0 + j1 * j1) - j0 * r0;
}

inline double h_coefficient(const FamilySpec& family, int n, double u) {
    if (n < 0) throw std::domain_error("h_coefficient: requires n >= 0");
    if (u < 0.0) throw std::domain_error("h_coefficient: requires u >= 0");
    switch (family.kind) {
    case FamilyKind::SCS:
        return std::exp(-0.5 * u - 0.5 * detail::log_gamma(n + 1.0));
    case FamilyKind::OSCS: {
        if (n > family.n_j) return 0.0;
        const double log_binom = detail::log_gamma(family.n_j + 1.0)
            - detail::log_gamma(n + 1.0) - detail::log_gamma(family.n_j - n + 1.0);
        return std::exp(0.5 * log_binom - 0.5 * family.n_j * std::log1p(u));
    }
    case FamilyKind::BGCS: {
        const double two_chi = 2.0 * family.chi;
        const double log_lambda = 0.5 * (detail::log_gamma(two_chi)
            - detail::log_gamma(n + 1.0) - detail::log_gamma(two_chi + n));
        return std::exp(log_lambda) / std::sqrt(normalization_bg(u, family.chi));
    }
    case FamilyKind::MSGCS:
        return std::sqrt((n + 1.0) / normalization_msg(u)) * detail::msg_bessel_ratio(n, u);
    }
    throw std::logic_error("h_coefficient: unknown family kind");
}

namespace detail {

// Family normalization appearing inside h_n, precomputed once per vector.
inline double family_norm(const FamilySpec& family, double u) {
    switch (family.kind) {
    case FamilyKind::BGCS: return normalization_bg(u, family.chi);
    case FamilyKind::MSGCS: return normalization_msg(u);
    default: return 1.0;
    }
}

// Signed amplitude c_n = alpha^n h_n(u), computed in log space so that
// alpha^n never overflows before the factorial decay catches up.
inline double fock_amplitude(const FamilySpec& family, int n, double alpha, double u, double norm) {
    if (alpha == 0.0) return n == 0 ? 1.0 : 0.0; // h_0(0) = 1 in every family
    const double log_alpha_n = n * std::log(std::abs(alpha));
    const double sign = (alpha < 0.0 && n % 2 == 1) ? -1.0 : 1.0;
    switch (family.kind) {
    case FamilyKind::SCS:
        return sign * std::exp(log_alpha_n - 0.5 * u - 0.5 * log_gamma(n + 1.0));
    case FamilyKind::OSCS: {
        if (n > family.n_j) return 0.0;
        const double log_binom = log_gamma(family.n_j + 1.0)
            - log_gamma(n + 1.0) - log_gamma(family.n_j - n + 1.0);
        return sign * std::exp(log_alpha_n + 0.5 * log_binom - 0.5 * family.n_j * std::log1p(u));
    }
    case FamilyKind::BGCS: {
        const double two_chi = 2.0 * family.chi;
        const double log_lambda = 0.5 * (log_gamma(two_chi) - log_gamma(n + 1.0) - log_gamma(two_chi + n));
        return sign * std::exp(log_alpha_n + log_lambda) / std::sqrt(norm);
    }
    case FamilyKind::MSGCS: {
        const double r = msg_bessel_ratio(n, u);
        if (r == 0.0) return 0.0;
        const double mag = std::exp(log_alpha_n + std::log(std::abs(r))) * std::sqrt((n + 1.0) / norm);
        return (r < 0.0 ? -sign : sign) * mag;
    }
    }
    throw std::logic_error("fock_amplitude: unknown family kind");
}

// Certified upper bound on sum_{n > N} c_n^2, or -1 if no certificate is
// available yet at this N. Geometric-majorant bounds:
//   SCS:   c_{n+1}^2 / c_n^2 = u/(n+1)                 (exact ratio)
//   BGCS:  c_{n+1}^2 / c_n^2 = u/((n+1)(2chi+n))       (exact ratio)
//   MSGCS: c_n^2 <= u^n (n+1) / ((n+1)!)^2 / N_mSG(u)  (valid once n+2 > u)
inline double tail_bound_after(const FamilySpec& family, int n_last, double u, double norm) {
    const int m = n_last + 1; // first discarded index
    switch (family.kind) {
    case FamilyKind::OSCS:
        return n_last >= family.n_j ? 0.0 : -1.0;
    case FamilyKind::SCS: {
        const double ratio = u / (m + 1.0);
        if (ratio >= 1.0) return -1.0;
        const double c2 = std::exp(m * std::log(u) - u - log_gamma(m + 1.0)); // c_m^2
        return c2 / (1.0 - ratio);
    }
    case FamilyKind::BGCS: {
        const double two_chi = 2.0 * family.chi;
        const double ratio = u / ((m + 1.0) * (two_chi + m));
        if (ratio >= 1.0) return -1.0;
        const double c2 = std::exp(m * std::log(u) + log_gamma(two_chi)
            - log_gamma(m + 1.0) - log_gamma(two_chi + m)) / norm;
        return c2 / (1.0 - ratio);
    }
    case FamilyKind::MSGCS: {
        if (!(m + 1.0 > u)) return -1.0; // |J_{n+1}(2 sqrt u)/u^{(n+1)/2}| <= 1/(n+1)! needs n+2 > u
        const double ratio = u / ((m + 1.0) * (m + 2.0));
        if (ratio >= 1.0) return -1.0;
        const double t = std::exp(m * std::log(u) + std::log(m + 1.0) - 2.0 * log_gamma(m + 2.0)) / norm;
        return t / (1.0 - ratio);
    }
    }
    throw std::logic_error("tail_bound_after: unknown family kind");
}

} // namespace detail

inline FockVector fock_coefficients(const FamilySpec& family, double alpha, TruncationPolicy policy = {}) {
    if (!(policy.tail_tolerance > 0.0)) throw std::invalid_argument("TruncationPolicy: tail_tolerance must be > 0");
    if (policy.hard_cap < 8) throw std::invalid_argument("TruncationPolicy: hard_cap must be >= 8");
    const double u = alpha * alpha;
    if (u > kMaxU) throw std::domain_error("fock_coefficients: |alpha| > 6 is outside the supported range");

    FockVector v;
    v.alpha = alpha;
    v.family = family;
    const double norm = detail::family_norm(family, u);

    if (family.kind == FamilyKind::OSCS) {
        v.amplitudes.resize(family.n_j + 1);
        for (int n = 0; n <= family.n_j; ++n) v.amplitudes[n] = detail::fock_amplitude(family, n, alpha, u, norm);
        v.tail_bound = 0.0;
        return v;
    }

    if (alpha == 0.0) {
        v.amplitudes = {1.0};
        v.tail_bound = 0.0;
        return v;
    }

    v.amplitudes.reserve(32);
    for (int n = 0; n < policy.hard_cap; ++n) {
        v.amplitudes.push_back(detail::fock_amplitude(family, n, alpha, u, norm));
        const double bound = detail::tail_bound_after(family, n, u, norm);
        if (bound >= 0.0 && bound <= policy.tail_tolerance) {
            v.tail_bound = bound;
            return v;
        }
    }
    throw TruncationError("fock_coefficients: hard_cap reached before tail tolerance was met");
}

// <a|b> = sum_n a_n b_n over the common truncated range.
inline double overlap(const FockVector& a, const FockVector& b) {
    if (!(a.family == b.family)) throw std::invalid_argument("overlap: states belong to different families");
    const std::size_t n = std::min(a.amplitudes.size(), b.amplitudes.size());
    long double s = 0.0L;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<long double>(a.amplitudes[i]) * b.amplitudes[i];
    return static_cast<double>(s);
}

// <n> = sum_n n u^n h_n(u)^2 on the truncated range.
inline double mean_photon_number(const FamilySpec& family, double u) {
    if (u < 0.0) throw std::domain_error("mean_photon_number: requires u >= 0");
    const FockVector v = fock_coefficients(family, std::sqrt(u));
    long double m = 0.0L;
    for (std::size_t n = 0; n < v.amplitudes.size(); ++n) {
        m += static_cast<long double>(n) * v.amplitudes[n] * v.amplitudes[n];
    }
    return static_cast<double>(m);
}

// Mandel parameter Q = (<n^2> - <n>^2)/<n> - 1; Q < 0 is sub-Poissonian.
inline double mandel_q(const FamilySpec& family, double u) {
    if (!(u > 0.0)) throw std::domain_error("mandel_q: requires u > 0");
    const FockVector v = fock_coefficients(family, std::sqrt(u));
    long double m1 = 0.0L, m2 = 0.0L;
    for (std::size_t n = 0; n < v.amplitudes.size(); ++n) {
        const long double p = static_cast<long double>(v.amplitudes[n]) * v.amplitudes[n];
        m1 += static_cast<long double>(n) * p;
        m2 += static_cast<long double>(n) * n * p;
    }
    const double mean = static_cast<double>(m1);
    const double var = static_cast<double>(m2 - m1 * m1);
    return var / mean - 1.0;
}

// Inverts <n>(u) for u = alpha^2 by bisection on alpha in [0, 6]; valid
// because the mean photon number is strictly increasing in u.
inline double alpha_for_mean_n(const FamilySpec& family, double target) {
    if (target < 0.0) throw std::domain_error("alpha_for_mean_n: requires target >= 0");
    if (target == 0.0) return 0.0;
    if (family.kind == FamilyKind::OSCS && target >= family.n_j) {
        throw UnreachableTargetError("alpha_for_mean_n: target >= n_j is unreachable for OSCS");
    }
    double lo = 0.0, hi = std::sqrt(kMaxU);
    if (mean_photon_number(family, hi * hi) < target) {
        throw UnreachableTargetError("alpha_for_mean_n: target exceeds the mean photon number at alpha = 6");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = mean_photon_number(family, mid * mid) - target;
        if (std::abs(f) <= 0.5e-10) return mid;
        (f < 0.0 ? lo : hi) = mid;
        if (hi - lo < 1e-16) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace nscs
