#pragma once

// Indirect measurement of a light mode through a resonant Jaynes-Cummings
// interaction with a two-level atom prepared in its ground state.  After an
// accumulated interaction Phi (the time integral of the coupling) the atom is
// read out in the basis
//   |pi0> = cos(theta)|g> + e^{i phi} sin(theta)|e>,
//   |pi1> = sin(theta)|g> - e^{i phi} cos(theta)|e>,
// which induces the signal-space Kraus operators
//   K0 = cos(theta) cos(Phi |a|) - i e^{-i phi} sin(theta) S,
//   K1 = sin(theta) cos(Phi |a|) + i e^{-i phi} cos(theta) S,
// where |a| = sqrt(a^dag a) and S|n> = sin(Phi sqrt n)|n-1> is the odd part
// of the interaction series sum_k (-1)^k Phi^{2k+1} a |a|^{2k} / (2k+1)!.

#include "discrimination.hpp"
#include "nelder_mead.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace nscs::jc {

struct MeasurementAngles {
    double theta = 0.0; // readout-basis mixing angle
    double phi = 0.0;   // readout-basis phase
    double Phi = 0.0;   // accumulated interaction, time integral of the coupling
};

namespace detail {

inline double cached_sqrt(std::size_t n) {
    static const auto table = [] {
        std::vector<double> t(257);
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = std::sqrt(static_cast<double>(i));
        return t;
    }();
    return n < table.size() ? table[n] : std::sqrt(static_cast<double>(n));
}

} // namespace detail

// Unnormalized amplitudes of K_y |psi> in the Fock basis.
inline std::vector<std::complex<double>> kraus_apply(int outcome, const FockVector& v,
                                                     const MeasurementAngles& a) {
    if (outcome != 0 && outcome != 1) throw std::invalid_argument("kraus_apply: outcome must be 0 or 1");
    const auto& c = v.amplitudes;
    const std::size_t n = c.size();
    const double ct = std::cos(a.theta), st = std::sin(a.theta);
    const std::complex<double> conj_phase(std::cos(a.phi), -std::sin(a.phi)); // e^{-i phi}
    const std::complex<double> i_unit(0.0, 1.0);
    const double keep = (outcome == 0) ? ct : st;
    const std::complex<double> lower = (outcome == 0) ? -i_unit * conj_phase * st
                                                      : i_unit * conj_phase * ct;
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double diag = c[k] * std::cos(a.Phi * detail::cached_sqrt(k));
        const double from_above = (k + 1 < n) ? c[k + 1] * std::sin(a.Phi * detail::cached_sqrt(k + 1)) : 0.0;
        out[k] = keep * diag + lower * from_above;
    }
    return out;
}

// <psi|K_y^dag K_y|psi>, evaluated without allocating; per-n terms are the
// squared moduli of the kraus_apply entries, expanded in real arithmetic.
inline double outcome_probability(int outcome, const FockVector& v, const MeasurementAngles& a) {
    if (outcome != 0 && outcome != 1) throw std::invalid_argument("outcome_probability: outcome must be 0 or 1");
    const auto& c = v.amplitudes;
    const std::size_t n = c.size();
    const double ct = std::cos(a.theta), st = std::sin(a.theta), sp = std::sin(a.phi);
    const double keep = (outcome == 0) ? ct : st;
    const double low = (outcome == 0) ? st : ct;
    const double cross = (outcome == 0) ? -2.0 * keep * low * sp : 2.0 * keep * low * sp;
    double p = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double diag = c[k] * std::cos(a.Phi * detail::cached_sqrt(k));
        const double from_above = (k + 1 < n) ? c[k + 1] * std::sin(a.Phi * detail::cached_sqrt(k + 1)) : 0.0;
        p += keep * keep * diag * diag + low * low * from_above * from_above + cross * diag * from_above;
    }
    return p;
}

inline double success_probability(const BinaryEnsemble& e, const MeasurementAngles& a) {
    return e.q0 * outcome_probability(0, e.state0, a) + e.q1 * outcome_probability(1, e.state1, a);
}

// Percentage shortfall relative to the Helstrom bound; numerical noise above
// the bound is clamped to zero.
inline double gap_percent(const BinaryEnsemble& e, double p_ind) {
    if (!(p_ind >= 0.0 && p_ind <= 1.0)) throw std::invalid_argument("gap_percent: p_ind must lie in [0, 1]");
    const double p_hel = helstrom_bound(e);
    const double gap = 100.0 * (p_hel - p_ind) / p_hel;
    return gap < 0.0 ? 0.0 : gap;
}

struct JCResult {
    double p_success = 0.0;
    MeasurementAngles angles;
    double delta_percent = 0.0;
    int starts_used = 0;
    bool converged = false;
};

// Objective invariances used for reporting: theta -> theta + pi, and the
// joint flip (phi -> phi + pi, Phi -> -Phi).  Phi itself is not periodic
// (its frequencies are sqrt(n)), so only its sign is normalized.
inline MeasurementAngles canonicalize(MeasurementAngles a) {
    if (a.Phi < 0.0) {
        a.Phi = -a.Phi;
        a.phi += specfun::kPi;
    }
    a.theta = std::fmod(a.theta, specfun::kPi);
    if (a.theta < 0.0) a.theta += specfun::kPi;
    a.phi = std::fmod(a.phi, 2.0 * specfun::kPi);
    if (a.phi <= -specfun::kPi) a.phi += 2.0 * specfun::kPi;
    if (a.phi > specfun::kPi) a.phi -= 2.0 * specfun::kPi;
    return a;
}

// Start grid covering one quasi-period of the objective:
// theta in {pi/8, 3pi/8, 5pi/8, 7pi/8}, phi in {pi/2, -pi/2},
// Phi in {0.25, 0.75, ..., 5.75}.
inline OptimizerConfig default_config() {
    OptimizerConfig cfg;
    cfg.simplex_scale = 0.3;
    cfg.tolerance = 1e-10;
    cfg.max_iterations = 2000;
    for (int t = 1; t <= 7; t += 2) {
        for (double phi : {0.5 * specfun::kPi, -0.5 * specfun::kPi}) {
            for (int k = 0; k < 12; ++k) {
                cfg.starts.push_back({t * specfun::kPi / 8.0, phi, 0.25 + 0.5 * k});
            }
        }
    }
    return cfg;
}

// Multi-start maximization of the success probability over (theta, phi, Phi).
// Deterministic: every start runs to convergence and the reduction prefers
// the higher value, then the lexicographically smaller canonical angles.
inline JCResult optimize(const BinaryEnsemble& e, const OptimizerConfig& cfg = default_config()) {
    auto objective = [&e](const std::vector<double>& x) {
        return success_probability(e, {x[0], x[1], x[2]});
    };
    JCResult result;
    result.starts_used = static_cast<int>(cfg.starts.size());
    bool first = true;
    for (const auto& start : cfg.starts) {
        OptimizerConfig single = cfg;
        single.starts = {start};
        const MaximizeResult r = maximize(objective, single);
        const MeasurementAngles canonical = canonicalize({r.point[0], r.point[1], r.point[2]});
        const std::vector<double> key{canonical.theta, canonical.phi, canonical.Phi};
        if (first || r.value > result.p_success
            || (r.value == result.p_success
                && nscs::detail::lex_less(key, {result.angles.theta, result.angles.phi, result.angles.Phi}))) {
            result.p_success = r.value;
            result.angles = canonical;
            result.converged = r.converged;
            first = false;
        }
    }
    result.delta_percent = gap_percent(e, result.p_success);
    return result;
}

} // namespace nscs::jc
