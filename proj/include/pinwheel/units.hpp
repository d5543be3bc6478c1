#pragma once

#include <cmath>

namespace pinwheel {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.1415926535897932384626433832795;

// Vacuum speed of light, m/s. Used by the scenario predicates only.
inline constexpr double kSpeedOfLight = 2.99792458e8;

inline constexpr double kMetersPerAngstrom = 1e-10;

// Reduces x into [0, m). Result is well defined for any finite x and m > 0.
inline double reduce_mod(double x, double m)
{
    double r = std::fmod(x, m);
    return r < 0 ? r + m : r;
}

// Reduces an angle into [0, 2*pi).
inline double reduce_angle(double x)
{
    return reduce_mod(x, kTwoPi);
}

}  // namespace pinwheel
