// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace ensb {

inline constexpr char const* version_string = "1.0.0";

}  // namespace ensb
