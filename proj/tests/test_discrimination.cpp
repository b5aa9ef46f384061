#include <catch2/catch_amalgamated.hpp>

#include <nscs/discrimination.hpp>

#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace nscs;
using Catch::Matchers::WithinAbs;

namespace {

const FamilySpec kAllFamilies[] = {
    FamilySpec::scs(), FamilySpec::oscs(3), FamilySpec::bgcs(0.5), FamilySpec::msgcs()};

// Closed-form success probability of the cat-basis projective measurement,
// used as a second route against the amplitude-list evaluation.
double projective_success_formula(double q0, double s, double xi, double zeta) {
    return 0.5 + 0.5 * (2.0 * q0 - 1.0) * s * std::cos(2.0 * xi)
        + 0.5 * std::sqrt(1.0 - s * s) * std::cos(zeta) * std::sin(2.0 * xi);
}

// Hand-built ensemble of two exactly orthogonal states |0> and |1>.
BinaryEnsemble orthogonal_ensemble(double q0) {
    BinaryEnsemble e;
    e.family = FamilySpec::scs();
    e.q0 = q0;
    e.q1 = 1.0 - q0;
    e.state0.amplitudes = {1.0, 0.0};
    e.state1.amplitudes = {0.0, 1.0};
    return e;
}

} // namespace

TEST_CASE("keying constructors and their overlaps") {
    CHECK_THAT(state_overlap(make_ook(FamilySpec::scs(), 0.0, 0.5)), WithinAbs(1.0, 1e-14));
    CHECK_THAT(state_overlap(make_ook(FamilySpec::scs(), 0.5, 0.5)), WithinAbs(std::exp(-0.125), 1e-12));
    CHECK_THAT(state_overlap(make_ook(FamilySpec::scs(), 0.5, 0.5)), WithinAbs(0.8824969, 1e-7));
    CHECK_THAT(state_overlap(make_ook(FamilySpec::oscs(3), 0.5, 0.5)), WithinAbs(std::pow(1.25, -1.5), 1e-12));
    CHECK_THAT(state_overlap(make_ook(FamilySpec::oscs(3), 0.5, 0.5)), WithinAbs(0.7155418, 1e-7));

    CHECK_THAT(state_overlap(make_bpsk(FamilySpec::scs(), 0.5, 0.5)), WithinAbs(std::exp(-0.5), 1e-12));
    CHECK_THAT(state_overlap(make_bpsk(FamilySpec::oscs(3), 0.5, 0.5)), WithinAbs(0.216, 1e-12));
    CHECK_THAT(state_overlap(make_bpsk(FamilySpec::msgcs(), 0.0, 0.3)), WithinAbs(1.0, 1e-14));

    CHECK(make_bpsk(FamilySpec::scs(), 0.5, 0.3).q1 == 0.7);
    CHECK_THROWS_AS(make_bpsk(FamilySpec::scs(), 0.5, 1.2), std::invalid_argument);
    CHECK_THROWS_AS(make_bpsk(FamilySpec::scs(), 0.5, -0.1), std::invalid_argument);
}

TEST_CASE("Helstrom bound") {
    CHECK(helstrom_bound(make_bpsk(FamilySpec::scs(), 0.5, 1.0)) == 1.0);
    CHECK(helstrom_bound(orthogonal_ensemble(0.5)) == 1.0);
    CHECK(helstrom_bound(orthogonal_ensemble(0.2)) == 1.0);
    const double expected = 0.5 * (1.0 + std::sqrt(1.0 - 0.84 * std::exp(-1.0)));
    CHECK_THAT(helstrom_bound(make_bpsk(FamilySpec::scs(), 0.5, 0.7)), WithinAbs(expected, 1e-12));
    CHECK_THAT(helstrom_bound(make_bpsk(FamilySpec::scs(), 0.5, 0.7)), WithinAbs(0.9156265, 1e-7));
}

TEST_CASE("Helstrom bound dominates prior guessing") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> alpha_dist(0.05, 1.2);
    std::uniform_real_distribution<double> q_dist(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const FamilySpec family = kAllFamilies[i % 4];
        const double q0 = q_dist(rng);
        const auto e = (i % 2 == 0) ? make_bpsk(family, alpha_dist(rng), q0)
                                    : make_ook(family, alpha_dist(rng), q0);
        CHECK(helstrom_bound(e) >= std::max(q0, 1.0 - q0) - 1e-12);
    }
}

TEST_CASE("cat basis construction") {
    const auto e = make_bpsk(FamilySpec::scs(), 0.5, 0.5);
    const CatBasis basis = cat_basis(e);

    double pp = 0.0, mm = 0.0, pm = 0.0;
    for (std::size_t i = 0; i < basis.cat_plus.size(); ++i) {
        pp += basis.cat_plus[i] * basis.cat_plus[i];
        mm += basis.cat_minus[i] * basis.cat_minus[i];
        pm += basis.cat_plus[i] * basis.cat_minus[i];
    }
    CHECK_THAT(pp, WithinAbs(1.0, 1e-10));
    CHECK_THAT(mm, WithinAbs(1.0, 1e-10));
    CHECK_THAT(pm, WithinAbs(0.0, 1e-12));

    SECTION("BPSK cats split into even and odd photon-number support") {
        for (const auto& family : kAllFamilies) {
            const CatBasis b = cat_basis(make_bpsk(family, 0.6, 0.5));
            for (std::size_t i = 0; i < b.cat_plus.size(); ++i) {
                if (i % 2 == 1) CHECK_THAT(b.cat_plus[i], WithinAbs(0.0, 1e-13));
                if (i % 2 == 0) CHECK_THAT(b.cat_minus[i], WithinAbs(0.0, 1e-13));
            }
        }
    }
    SECTION("normalization constants at s = 0.216") {
        const auto os = make_bpsk(FamilySpec::oscs(3), 0.5, 0.5);
        const CatBasis b = cat_basis(os);
        CHECK_THAT(b.overlap_s, WithinAbs(0.216, 1e-12));
        // N+- = 1/sqrt(2(1 +- s)); recover them from the leading amplitudes.
        const double np = b.cat_plus[0] / (os.state0.amplitudes[0] + os.state1.amplitudes[0]);
        const double nm = b.cat_minus[1] / (os.state0.amplitudes[1] - os.state1.amplitudes[1]);
        CHECK_THAT(np, WithinAbs(0.6412365, 1e-7));
        CHECK_THAT(nm, WithinAbs(0.7985957, 1e-7));
    }
    SECTION("degenerate ensembles are rejected") {
        CHECK_THROWS_AS(cat_basis(make_bpsk(FamilySpec::scs(), 0.0, 0.5)), DegenerateEnsembleError);
        CHECK_THROWS_AS(optimal_projective_angles(make_ook(FamilySpec::msgcs(), 0.0, 0.5)),
                        DegenerateEnsembleError);
    }
}

TEST_CASE("projective success probability") {
    const auto e = make_bpsk(FamilySpec::scs(), 0.5, 0.5);
    const double s = state_overlap(e);

    CHECK_THAT(projective_success(e, 0.0, 0.0), WithinAbs(0.5, 1e-12));
    CHECK_THAT(projective_success(e, specfun::kPi / 4.0, 0.0),
               WithinAbs(0.5 * (1.0 + std::sqrt(1.0 - s * s)), 1e-12));
    CHECK_THAT(projective_success(e, specfun::kPi / 4.0, 0.0), WithinAbs(helstrom_bound(e), 1e-12));

    SECTION("zeta = pi mirrors the sign of xi") {
        for (double xi = -1.5; xi <= 1.5; xi += 0.37) {
            CHECK_THAT(projective_success(e, xi, specfun::kPi),
                       WithinAbs(projective_success(e, -xi, 0.0), 1e-12));
        }
    }
    SECTION("matches the closed-form expression") {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> angle(-3.2, 3.2);
        for (const auto& family : kAllFamilies) {
            for (double q0 : {0.3, 0.5, 0.8}) {
                const auto ens = make_bpsk(family, 0.45, q0);
                const double sv = state_overlap(ens);
                for (int i = 0; i < 25; ++i) {
                    const double xi = angle(rng), zeta = angle(rng);
                    CHECK_THAT(projective_success(ens, xi, zeta),
                               WithinAbs(projective_success_formula(q0, sv, xi, zeta), 1e-12));
                }
            }
        }
    }
}

TEST_CASE("optimal projective angles") {
    SECTION("symmetric priors give xi = pi/4") {
        for (const auto& family : kAllFamilies) {
            const auto angles = optimal_projective_angles(make_bpsk(family, 0.5, 0.5));
            CHECK_THAT(angles.xi, WithinAbs(specfun::kPi / 4.0, 1e-12));
            CHECK(angles.zeta == 0.0);
        }
    }
    SECTION("vanishing overlap gives xi = pi/4 for any priors") {
        const auto angles = optimal_projective_angles(orthogonal_ensemble(0.8));
        CHECK_THAT(angles.xi, WithinAbs(specfun::kPi / 4.0, 1e-12));
    }
    SECTION("achieves the Helstrom bound (asymmetric priors)") {
        const auto e = make_bpsk(FamilySpec::scs(), 0.5, 0.7);
        const auto angles = optimal_projective_angles(e);
        CHECK_THAT(projective_success(e, angles.xi, angles.zeta), WithinAbs(helstrom_bound(e), 1e-10));
        CHECK_THAT(projective_success(e, angles.xi, angles.zeta), WithinAbs(0.9156265, 1e-7));
    }
}

TEST_CASE("Helstrom equality across families, amplitudes and priors") {
    for (const auto& family : kAllFamilies) {
        for (double alpha = 0.1; alpha <= 0.8 + 1e-12; alpha += 0.1) {
            for (double q0 = 0.1; q0 <= 0.9 + 1e-12; q0 += 0.1) {
                for (bool bpsk : {true, false}) {
                    const auto e = bpsk ? make_bpsk(family, alpha, q0) : make_ook(family, alpha, q0);
                    const auto angles = optimal_projective_angles(e);
                    CHECK_THAT(projective_success(e, angles.xi, angles.zeta),
                               WithinAbs(helstrom_bound(e), 1e-10));
                }
            }
        }
    }
}

TEST_CASE("derived angles dominate random projective measurements") {
    std::mt19937 rng(123456);
    std::uniform_real_distribution<double> xi_dist(0.0, specfun::kPi);
    std::uniform_real_distribution<double> zeta_dist(-specfun::kPi, specfun::kPi);
    for (const auto& family : {FamilySpec::scs(), FamilySpec::msgcs()}) {
        for (double q0 : {0.5, 0.35}) {
            const auto e = make_bpsk(family, 0.5, q0);
            const auto angles = optimal_projective_angles(e);
            const double best = projective_success(e, angles.xi, angles.zeta);
            for (int i = 0; i < 10000; ++i) {
                CHECK(projective_success(e, xi_dist(rng), zeta_dist(rng)) <= best + 1e-12);
            }
        }
    }
}

TEST_CASE("brute-force optimum reproduces the Helstrom bound") {
    const auto a = make_bpsk(FamilySpec::scs(), 0.5, 0.5);
    CHECK_THAT(brute_force_optimum(a, 400), WithinAbs(helstrom_bound(a), 1e-8));
    const auto b = make_bpsk(FamilySpec::oscs(3), 0.5, 0.3);
    CHECK_THAT(brute_force_optimum(b, 400), WithinAbs(helstrom_bound(b), 1e-8));
    const auto c = make_ook(FamilySpec::bgcs(0.5), 0.4, 0.6);
    CHECK_THAT(brute_force_optimum(c, 400), WithinAbs(helstrom_bound(c), 1e-8));
    CHECK_THAT(brute_force_optimum(make_bpsk(FamilySpec::scs(), 0.5, 1.0), 150), WithinAbs(1.0, 1e-9));
    CHECK_THROWS_AS(brute_force_optimum(a, 99), std::invalid_argument);
}

TEST_CASE("BPSK dominates OOK at equal mean photon number") {
    for (const auto& family : kAllFamilies) {
        for (double n = 0.05; n <= 0.6 + 1e-12; n += 0.05) {
            const double alpha = alpha_for_mean_n(family, n);
            const double bpsk = helstrom_bound(make_bpsk(family, alpha, 0.5));
            const double ook = helstrom_bound(make_ook(family, alpha, 0.5));
            CHECK(bpsk >= ook - 1e-12);
        }
    }
}

TEST_CASE("mSG BPSK overlap crosses zero and the bound reaches one") {
    auto overlap_at = [](double u) {
        return state_overlap(make_bpsk(FamilySpec::msgcs(), std::sqrt(u), 0.5));
    };
    double lo = 0.0, hi = 0.0;
    double prev_u = 0.05, prev_s = overlap_at(prev_u);
    for (double u = 0.1; u <= 4.0 + 1e-12; u += 0.05) {
        const double s = overlap_at(u);
        if (prev_s > 0.0 && s <= 0.0) {
            lo = prev_u;
            hi = u;
            break;
        }
        prev_u = u;
        prev_s = s;
    }
    REQUIRE(hi > 0.0); // a sign change exists in (0, 4]
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (overlap_at(mid) > 0.0 ? lo : hi) = mid;
    }
    const double u_root = 0.5 * (lo + hi);
    CHECK_THAT(overlap_at(u_root), WithinAbs(0.0, 1e-10));
    CHECK_THAT(helstrom_bound(make_bpsk(FamilySpec::msgcs(), std::sqrt(u_root), 0.5)),
               WithinAbs(1.0, 1e-9));
}

TEST_CASE("shot noise limit") {
    CHECK_THAT(shot_noise_limit(0.0), WithinAbs(0.5, 1e-14));
    CHECK_THAT(shot_noise_limit(0.5), WithinAbs(1.0 - 0.5 * oracles::erfc(std::sqrt(2.0) * 0.5), 1e-10));
    CHECK_THAT(shot_noise_limit(0.5), WithinAbs(0.8413447, 1e-7));
    double prev = shot_noise_limit(0.0);
    for (double alpha = 0.1; alpha <= 3.0 + 1e-12; alpha += 0.1) {
        const double cur = shot_noise_limit(alpha);
        CHECK(cur > prev);
        prev = cur;
    }
    CHECK_THROWS_AS(shot_noise_limit(-0.1), std::domain_error);
}
