#pragma once

namespace sagnac {

// CODATA 2018 exact/defined values.
inline constexpr double k_hbar = 1.054571817e-34;  // reduced Planck constant, J s
inline constexpr double k_planck = 6.62607015e-34;  // Planck constant, J s
inline constexpr double k_c = 299792458.0;          // speed of light, m/s
inline constexpr double k_pi = 3.14159265358979323846;

}  // namespace sagnac
