#pragma once

// Self-contained special functions: Gamma, Bessel J_n (integer order),
// modified Bessel I_nu (real order), and the complementary error function.
// All of them are evaluated by ascending power series (plus a Lanczos
// approximation for Gamma), which is accurate in the small-argument range
// this library operates in (x <= ~12).

#include <cmath>
#include <stdexcept>

namespace nscs::specfun {

inline constexpr double kPi = 3.14159265358979323846;

// Termination rule for ascending power series: stop once the next term's
// magnitude falls below term_tolerance * (1 + |partial sum|), or after
// max_terms terms.
struct SeriesPolicy {
    int max_terms = 200;
    double term_tolerance = 1e-16;
};

namespace detail {

inline void check_series_policy(const SeriesPolicy& policy) {
    if (policy.max_terms < 1) throw std::invalid_argument("SeriesPolicy: max_terms must be >= 1");
    if (!(policy.term_tolerance > 0.0)) throw std::invalid_argument("SeriesPolicy: term_tolerance must be > 0");
}

// Lanczos coefficients, g = 7, 9 terms.
inline constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

inline double lanczos_sum(double z) {
    double s = kLanczos[0];
    for (int i = 1; i < 9; ++i) s += kLanczos[i] / (z + i);
    return s;
}

// log Gamma(x) for x >= 0.5 (the only range the library needs in log form).
inline double log_gamma(double x) {
    if (!(x >= 0.5)) throw std::domain_error("log_gamma: requires x >= 0.5");
    const double z = x - 1.0;
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(lanczos_sum(z));
}

} // namespace detail

// Gamma function for x > 0 (Lanczos approximation; reflection below 0.5).
inline double gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma: requires x > 0");
    if (x < 0.5) {
        // Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return kPi / (std::sin(kPi * x) * gamma(1.0 - x));
    }
    const double z = x - 1.0;
    const double t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * detail::lanczos_sum(z);
}

// Bessel function of the first kind, integer order n >= 0, x >= 0.
// Ascending series J_n(x) = sum_k (-1)^k (x/2)^{n+2k} / (k! (n+k)!).
inline double bessel_j(int n, double x, SeriesPolicy policy = {}) {
    detail::check_series_policy(policy);
    if (n < 0) throw std::domain_error("bessel_j: requires n >= 0");
    if (x < 0.0) throw std::domain_error("bessel_j: requires x >= 0");
    const long double h = 0.5L * x;
    long double term = 1.0L; // (x/2)^n / n!
    for (int i = 1; i <= n; ++i) term *= h / i;
    long double sum = term;
    const long double h2 = h * h;
    for (int k = 1; k < policy.max_terms; ++k) {
        term *= -h2 / (static_cast<long double>(k) * (n + k));
        sum += term;
        if (std::abs(static_cast<double>(term)) < policy.term_tolerance * (1.0 + std::abs(static_cast<double>(sum)))) break;
    }
    return static_cast<double>(sum);
}

// Modified Bessel function of the first kind, real order nu >= 0, x >= 0.
// Ascending series I_nu(x) = sum_k (x/2)^{nu+2k} / (k! Gamma(nu+k+1)).
inline double bessel_i(double nu, double x, SeriesPolicy policy = {}) {
    detail::check_series_policy(policy);
    if (!(nu >= 0.0)) throw std::domain_error("bessel_i: requires nu >= 0");
    if (x < 0.0) throw std::domain_error("bessel_i: requires x >= 0");
    const double h = 0.5 * x;
    if (h == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    long double term; // (x/2)^nu / Gamma(nu+1)
    if (nu == std::floor(nu) && nu < 1024.0) {
        term = 1.0L;
        for (int i = 1; i <= static_cast<int>(nu); ++i) term *= static_cast<long double>(h) / i;
    } else {
        term = std::exp(nu * std::log(h) - detail::log_gamma(nu + 1.0));
    }
    long double sum = term;
    const long double h2 = static_cast<long double>(h) * h;
    for (int k = 1; k < policy.max_terms; ++k) {
        term *= h2 / (static_cast<long double>(k) * (nu + k));
        sum += term; // all terms positive
        if (static_cast<double>(term) < policy.term_tolerance * (1.0 + static_cast<double>(sum))) break;
    }
    return static_cast<double>(sum);
}

namespace detail {

// Regularized lower incomplete gamma P(s, a) by series, for a < s + 1.
inline double gamma_p_series(double s, double a) {
    double term = 1.0 / s;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= a / (s + k);
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum * std::exp(-a + s * std::log(a) - log_gamma(s));
}

// Regularized upper incomplete gamma Q(s, a) by continued fraction
// (modified Lentz), for a >= s + 1.
inline double gamma_q_cf(double s, double a) {
    constexpr double kTiny = 1e-300;
    double b = a + 1.0 - s;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-a + s * std::log(a) - log_gamma(s)) * h;
}

} // namespace detail

// Complementary error function, erfc(x) = Q(1/2, x^2) for x >= 0.
inline double erfc(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) return 2.0 - erfc(-x);
    if (x == 0.0) return 1.0;
    const double a = x * x;
    if (a < 1.5) return 1.0 - detail::gamma_p_series(0.5, a);
    return detail::gamma_q_cf(0.5, a);
}

} // namespace nscs::specfun
