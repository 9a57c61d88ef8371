// SPDX-License-Identifier: Apache-2.0
//
// Resonance peak of the (1,0) channel for the reference field and a 1.02 MeV electron at 163 degrees:
// centre, transit width and the profile on a few detunings.
#include <cstdio>

#include "ensb/ensb.hpp"

int main()
{
    using namespace ensb;

    double const tau = 0.1 * units::ps;
    TwoWaveField const field({2.35, 0.1, +1, tau}, {1.0, 0.1, -1, tau});
    auto const electron = ElectronState::from_energy(1.02 * units::MeV, 163.0 * units::degree);
    auto const setup = interference_setup(electron, 10.0 * units::degree, 0.0, field);

    auto const r = channel_resonance(setup, channel_10);
    std::printf("theta'      = %.6f deg\n", units::to_degrees(setup.photon.theta));
    std::printf("omega'_res  = %.9g eV\n", r.omega_res);
    std::printf("Gamma       = %.6g eV\n", r.transit_width);
    std::printf("dW'(1,0)    = %.6g 1/(eV sr)\n", r.emission.value);

    std::printf("\n%8s %14s %14s %14s\n", "beta", "P_res(1,0)", "P_res(1,1)", "exp(-2b^2)");
    for (double beta : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0})
        std::printf("%8.2f %14.10f %14.10f %14.10f\n", beta, profile_res({beta, 5.0, 1, 0}),
                    profile_res({beta, 5.0, 1, 1}), profile_gaussian(beta));

    auto const integrated = resonant_integrated_xsec(setup);
    std::printf("\nintegrated cross section = %.6g eV^-2 sr^-2\n", integrated.value);
    return 0;
}
