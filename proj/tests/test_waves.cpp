// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "ensb/ensb.hpp"
#include "oracles/reference_values.hpp"
#include "support.hpp"

using namespace ensb;
using std::numbers::pi;

TEST(FieldStrength, EtaConversion)
{
    EXPECT_NEAR(field_strength_from_eta(0.1, 1.0), oracle::field_V_cm_eta01_1eV, 1e-6 * oracle::field_V_cm_eta01_1eV);
    EXPECT_NEAR(field_strength_from_eta(0.1, 1.0), 2.59e9, 0.01e9);
    EXPECT_NEAR(eta_from_field_strength(oracle::field_V_cm_eta01_1eV, 1.0), 0.1, 1e-12);
    EXPECT_LT(eta_from_field_strength(1e10, 1.0), 1.0);
    EXPECT_NEAR(eta_from_field_strength(2e9, 2.35), 2.0 * eta_from_field_strength(1e9, 2.35), 1e-15);
    EXPECT_THROW((void)eta_from_field_strength(-1.0, 1.0), DomainError);
}

TEST(Quasimono, Margin)
{
    EXPECT_NEAR(quasimono_margin(2.35, support::tau_ref), oracle::omega1_tau_ref, 1e-9);
    EXPECT_NEAR(quasimono_margin(1.0, support::tau_ref), oracle::omega2_tau_ref, 1e-9);
    EXPECT_NEAR(oracle::omega1_tau_ref, 357.0, 0.5);
    EXPECT_NEAR(oracle::omega2_tau_ref, 152.0, 0.5);
    EXPECT_GT(quasimono_margin(1.0, 1e30), 1e29);
}

TEST(LaserWave, Validation)
{
    LaserWave good{2.35, 0.1, 1, support::tau_ref};
    EXPECT_TRUE(good.validate().ok());
    EXPECT_TRUE(good.validate().warnings.empty());

    LaserWave strong{2.35, 0.5, 1, support::tau_ref};
    EXPECT_FALSE(strong.validate().ok());
    LaserWave moderate{2.35, 0.2, 1, support::tau_ref};
    EXPECT_TRUE(moderate.validate().ok());
    EXPECT_EQ(moderate.validate().warnings.size(), 1u);

    LaserWave short_pulse{2.35, 0.1, 1, 2.0 / 2.35};
    EXPECT_TRUE(short_pulse.validate().ok());
    EXPECT_FALSE(short_pulse.validate().warnings.empty());
    LaserWave too_short{2.35, 0.1, 1, 0.5 / 2.35};
    EXPECT_FALSE(too_short.validate().ok());

    LaserWave linear{2.35, 0.1, 0, support::tau_ref};
    EXPECT_FALSE(linear.validate().ok());
}

TEST(TwoWaveField, Invariants)
{
    auto const f = support::reference_field();
    EXPECT_TRUE(f.counter_rotating());
    EXPECT_EQ(f.tau(), support::tau_ref);
    EXPECT_THROW((TwoWaveField{{1.0, 0.1, 1, support::tau_ref}, {2.35, 0.1, -1, support::tau_ref}}), ConfigError);
    EXPECT_THROW((TwoWaveField{{2.35, 0.1, 1, support::tau_ref}, {1.0, 0.1, -1, 2.0 * support::tau_ref}}),
                 ConfigError);
    try
    {
        TwoWaveField{{1.0, 0.5, 1, support::tau_ref}, {2.35, 0.1, -1, support::tau_ref}};
        FAIL() << "expected ConfigError";
    }
    catch (ConfigError const& e)
    {
        EXPECT_EQ(e.violations().size(), 2u);
    }
    TwoWaveField const co{{2.35, 0.1, 1, support::tau_ref}, {1.0, 0.1, 1, support::tau_ref}};
    EXPECT_FALSE(co.counter_rotating());
}

TEST(TwoWaveField, PolarizationVectors)
{
    auto const f = support::reference_field(0.3);
    auto const e1 = f.epsilon(1, -1);
    // e1x - i e1y with e1x = +x
    EXPECT_EQ(e1.x, std::complex<double>(1.0, 0.0));
    EXPECT_EQ(e1.y, std::complex<double>(0.0, -1.0));
    // wave 2 has delta = -1 and a basis rotated by 0.3
    auto const e2 = f.epsilon(2, -1);
    EXPECT_NEAR(e2.x.real(), std::cos(0.3), 1e-15);
    EXPECT_NEAR(e2.x.imag(), -std::sin(0.3), 1e-15);
    auto const c = e1.conj().conj();
    EXPECT_EQ(c.x, e1.x);
    EXPECT_EQ(c.y, e1.y);
    // (eps eps*) = -2 for a unit circular vector in the (+,-,-,-) metric
    EXPECT_NEAR(minkowski_dot(e1, e1.conj()).real(), -2.0, 1e-15);
}

TEST(Envelope, Gaussian)
{
    EXPECT_EQ(envelope_gaussian(0.0), 1.0);
    EXPECT_DOUBLE_EQ(envelope_gaussian(1.0), std::exp(-1.0));
    for (double x : {0.1, 0.7, 2.0, 30.0})
    {
        EXPECT_EQ(envelope_gaussian(-x), envelope_gaussian(x));
        EXPECT_GE(envelope_gaussian(x), 0.0);
        EXPECT_LE(envelope_gaussian(x), 1.0);
    }
    EXPECT_GT(envelope_gaussian(5.0), 0.0);
}

TEST(CombinationFrequencies, Values)
{
    auto const [wp, wm] = combination_frequencies(support::reference_field());
    EXPECT_DOUBLE_EQ(wp, 3.35);
    EXPECT_DOUBLE_EQ(wm, 1.35);
    TwoWaveField const f{{2.35, 0.1, 1, support::tau_ref}, {2.3, 0.1, -1, support::tau_ref}};
    auto const [p2, m2] = combination_frequencies(f);
    EXPECT_NEAR(p2, 4.65, 1e-14);
    EXPECT_NEAR(m2, 0.05, 1e-14);
    EXPECT_GT(p2, m2);
}

TEST(Multiphoton, GammaGeneral)
{
    auto const p = support::peak_electron().four_momentum();
    EXPECT_EQ(gamma0_general(0.1, 2.35, p, p), 0.0);

    auto const pp = ElectronState::from_velocity(0.3, 1.0, 2.0).four_momentum();
    double const g = gamma0_general(0.1, 2.35, p, pp);
    EXPECT_DOUBLE_EQ(g, gamma0_general(0.1, 2.35, pp, p));
    // order eta m / omega ~ 1e4
    EXPECT_GT(g, 1e3);
    EXPECT_LT(g, 1e6);
}

TEST(Multiphoton, GammaVanishesInInterferenceRegion)
{
    auto const e = support::peak_electron();
    auto const field = support::reference_field();
    auto const dir = interference_photon_angle(e);
    double const w = 2.35;
    double const wres = resonant_frequency(e.four_momentum(), dir.null(), w);
    auto const q = e.four_momentum() - wres * dir.null() + field.wave1().k();
    double const g = gamma0_general(0.1, 2.35, q, e.four_momentum());
    EXPECT_LT(g, 1e-10);

    // a_f = a_i on the final side as well
    for (double ef : {e.energy(), 0.9e6})
    {
        auto const sol = interference_final_polar(e, ef);
        for (double th : sol.theta_f)
        {
            auto const f = ElectronState::from_energy(ef, th).four_momentum();
            EXPECT_LT(gamma0_general(0.1, 2.35, f, e.four_momentum()), 1e-10 * 0.1 * electron_mass / 2.35);
        }
    }
}

TEST(Multiphoton, ChiPhases)
{
    FourVector const base{1e6, {0.0, 0.0, 0.0}};
    FourVector const along_x{1e6, {1e3, 0.0, 0.0}};
    auto const cx = chi_phases(base, along_x, 0.0);
    ASSERT_TRUE(cx.defined);
    EXPECT_NEAR(std::abs(cx.chi1), pi, 1e-12);  // Q = p/(np) - p'/(np') points along -x here
    auto const cx2 = chi_phases(along_x, base, 0.0);
    EXPECT_NEAR(cx2.chi1, 0.0, 1e-12);
    EXPECT_EQ(cx2.chi1, cx2.chi2);
    FourVector const along_y{1e6, {0.0, 1e3, 0.0}};
    auto const cy = chi_phases(along_y, base, 0.4);
    EXPECT_NEAR(cy.chi1, pi / 2.0, 1e-12);
    EXPECT_NEAR(cy.chi2, pi / 2.0 - 0.4, 1e-12);
    EXPECT_FALSE(chi_phases(base, base, 0.0).defined);
}

TEST(Multiphoton, AlphaGeneral)
{
    auto const f = support::reference_field();
    auto const p = support::peak_electron().four_momentum();
    EXPECT_EQ(alpha0_general(f, +1, p, p), 0.0);
    auto const pp = ElectronState::from_velocity(0.1, 0.5).four_momentum();
    EXPECT_DOUBLE_EQ(alpha0_general(f, +1, p, pp), -alpha0_general(f, +1, pp, p));
    EXPECT_NEAR(alpha0_general(f, -1, p, pp) / alpha0_general(f, +1, p, pp), 3.35 / 1.35, 1e-12);

    // nonrelativistic scattering vertex: |alpha| ~ eta1 eta2 m / omega_+ ~ 1e3
    auto const slow_i = ElectronState::from_velocity(0.1, support::theta_i_ref).four_momentum();
    auto const slow_f = ElectronState::from_velocity(0.1, 10.0 * units::degree).four_momentum();
    double const a = std::abs(alpha0_general(f, +1, slow_f, slow_i));
    double const scale = 0.01 * electron_mass / 3.35;
    EXPECT_GT(a, 0.01 * scale);
    EXPECT_LT(a, 10.0 * scale);
    EXPECT_GT(a, 100.0);
}

TEST(Multiphoton, EmissionVertex)
{
    auto const f = support::reference_field();
    auto const inter = emission_vertex_params(2.35, 1e-5, 1e-5, f);
    EXPECT_EQ(inter.gamma01, 0.0);
    EXPECT_EQ(inter.gamma02, 0.0);
    EXPECT_NEAR(inter.alpha0_plus, 2.0 * 0.01 * 2.35 / 3.35, 1e-15);
    auto const zero = emission_vertex_params(2.35, 1e-5, 0.0, f);
    EXPECT_EQ(zero.gamma01, 0.0);
    EXPECT_EQ(zero.alpha0_plus, 0.0);
    auto const mid = emission_vertex_params(2.35, 1e-5, 0.5e-5, f);
    EXPECT_LE(mid.gamma01, 0.1);
    EXPECT_LT(mid.alpha0_plus, 0.1 * 0.1);
    EXPECT_THROW((void)emission_vertex_params(2.35, 0.0, 0.0, f), DomainError);
    EXPECT_THROW((void)emission_vertex_params(2.35, 1.0, 2.0, f), DomainError);
}

TEST(Multiphoton, EmissionVertexMatchesGeneralAtResonance)
{
    auto const f = support::reference_field();
    auto const e = support::peak_electron();
    auto const p = e.four_momentum();
    for (auto [s1, s2] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}})
        for (PhotonDirection dir : {PhotonDirection{2.0, 0.5}, PhotonDirection{2.9, -1.0}, PhotonDirection{1.0, 0.0}})
        {
            double const w = combined_energy(s1, s2, 2.35, 1.0).omega;
            double const wres = resonant_frequency(p, dir.null(), w);
            FourVector const kp = wres * dir.null();
            auto const q = intermediate_momentum(p, kp, s1, s2, f.wave1().k(), f.wave2().k());
            auto const [u, up] = u_invariants(w, p, kp, q);
            auto const ev = emission_vertex_params(w, u, up, f);
            auto const gv = vertex_params_general(f, q, p);
            EXPECT_LT(support::rel_diff(ev.gamma01, gv.gamma01), 1e-8);
            EXPECT_LT(support::rel_diff(ev.gamma02, gv.gamma02), 1e-8);
            EXPECT_LT(support::rel_diff(ev.alpha0_plus, gv.alpha0_plus), 1e-8);
            EXPECT_LT(support::rel_diff(ev.alpha0_minus, gv.alpha0_minus), 1e-8);
        }
}

TEST(Multiphoton, ScatteringVertexGamma)
{
    auto const f = support::reference_field();
    auto const [g1, g2] = scattering_vertex_gamma(f, 0.3, 0.3, 0.0);
    EXPECT_EQ(g1, 0.0);
    EXPECT_EQ(g2, 0.0);
    auto const [h1, h2] = scattering_vertex_gamma(f, 0.3, 0.0, 1.0);
    EXPECT_NEAR(h1, 0.1 * electron_mass / 2.35 * 0.3, 1e-9);
    EXPECT_NEAR(h2, 0.1 * electron_mass / 1.0 * 0.3, 1e-9);
    for (double dphi : {0.3, 1.5, pi})
    {
        auto const [k1, k2] = scattering_vertex_gamma(f, 0.3, 0.2, dphi);
        EXPECT_LE(k1, 0.1 * electron_mass / 2.35 * 0.5 * (1 + 1e-15));
        EXPECT_GE(k2, 0.0);
    }
    EXPECT_THROW((void)scattering_vertex_gamma(f, -0.1, 0.2, 0.0), DomainError);
}
