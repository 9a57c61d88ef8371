// SPDX-License-Identifier: Apache-2.0
//
// Umbrella header for the library (the cli/ headers are separate).
#pragma once

#include "ensb/constants.hpp"
#include "ensb/errors.hpp"
#include "ensb/four_vector.hpp"
#include "ensb/kinematics.hpp"
#include "ensb/waves.hpp"
#include "ensb/bessel.hpp"
#include "ensb/complex_erf.hpp"
#include "ensb/generalized_bessel.hpp"
#include "ensb/quadrature.hpp"
#include "ensb/profile.hpp"
#include "ensb/emission.hpp"
#include "ensb/baseline.hpp"
#include "ensb/resonant.hpp"
#include "ensb/version.hpp"
