#pragma once

#include <numbers>

namespace gravbench::phys {

// CODATA values, hard-coded for reproducibility across builds.
inline constexpr double G = 6.67430e-11;         // m^3 kg^-1 s^-2
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double k_B = 1.380649e-23;      // J/K
inline constexpr double c_light = 2.99792458e8;  // m/s

inline constexpr double pi = std::numbers::pi;

// m_P / l_P = sqrt(hbar c / G) / sqrt(hbar G / c^3) = c^2 / G
inline constexpr double planck_mass_over_length = c_light * c_light / G;

}  // namespace gravbench::phys
