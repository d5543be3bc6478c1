#pragma once

#include <string>
#include <vector>

#include "pinwheel/periodic_interval_set.hpp"

namespace pinwheel {

/// Full geometric and temporal description of one run of the apparatus:
/// source, pinhole wall, the two co-axial shutter wheels and the screen.
///
/// Conventions (fixed so that every derived quantity is deterministic):
///  - all angles in radians, angular speeds in rad/s, lengths in meters;
///  - azimuth phi around the wheel axis increases in the rotation
///    direction, so a retarded boundary displaces features by +delta;
///  - the period starts (t = 0) when the leading edge of the front wheel
///    reaches pinhole A, i.e. A is covered on [0, alpha/omega) of each
///    period;
///  - the leading edge of the rear wheel sits at azimuth theta at t = 0.
struct ApparatusConfig {
    double a1 = 0.0;     // source to pinhole A, m
    double a2 = 0.0;     // pinhole A to screen, m (retardation baseline)
    double b1 = 0.0;     // source to pinhole wall, m
    double b2 = 0.0;     // pinhole wall to screen, m
    double v0 = 0.0;     // particle speed, m/s
    double v_response = 0.0;  // boundary response speed under test, m/s; +inf = instantaneous
    double R = 0.0;      // radius of both wheels, m
    double alpha = 0.0;  // front wheel sector angle, rad
    double beta = 0.0;   // rear wheel sector angle, rad
    double theta = 0.0;  // offset between the wheels' leading edges, rad
    double omega = 0.0;  // rotation speed, rad/s
    double wheel_axis_offset = 0.0;  // axis-to-pattern-center distance on the screen, m

    bool response_is_instant() const;
    double period() const;       // 2*pi/omega; requires omega > 0
    double gamma() const { return beta - alpha; }
    double retardation() const;  // a2/v_response; 0 when instantaneous
};

/// Checks hard invariants (throws ConfigError) and returns soft warnings
/// (currently only v_response < v0, which the reference protocol permits
/// but the physical argument does not expect).
std::vector<std::string> validate(const ApparatusConfig& cfg);

/// A point on the screen in wheel-axis polar coordinates.
struct ScreenPoint {
    double phi = 0.0;  // azimuth, rad
    double r = 0.0;    // radius from the wheel axis, m; must be >= 0
};

/// Signed fringe coordinate of a screen point: distance from the pattern
/// center along the fringe-normal axis, which is the phi = 0 ray through
/// the wheel axis.
double fringe_coordinate(const ApparatusConfig& cfg, const ScreenPoint& p);

/// Tip of the rear wheel's leading edge at t = 0 (azimuth theta, radius R).
ScreenPoint leading_tip(const ApparatusConfig& cfg);
/// Tip of the trailing edge at the moment pinhole A reopens (azimuth theta - gamma).
ScreenPoint trailing_tip(const ApparatusConfig& cfg);

/// Per-period times during which pinhole A is open. The closed window is
/// [0, alpha/omega). Requires omega > 0 (static wheels have no period).
PeriodicIntervalSet a_open_windows(const ApparatusConfig& cfg);

/// Instantaneous status of pinhole A.
bool a_open(const ApparatusConfig& cfg, double t);

/// Status of pinhole A as seen by the screen: the instantaneous status
/// retarded by a2/v_response. Identical to a_open when the response is
/// instantaneous.
bool a_eff(const ApparatusConfig& cfg, double t);

/// True iff the rear wheel covers point p at time t.
bool screen_occluded(const ApparatusConfig& cfg, const ScreenPoint& p, double t);

/// Per-period times during which a screen point at azimuth phi (inside the
/// wheel radius) is NOT covered by the rear wheel. Measure is always
/// (2*pi - beta)/omega.
PeriodicIntervalSet exposure_windows(const ApparatusConfig& cfg, double phi);

/// Split of one period's exposure time at azimuth phi by the retarded
/// status of pinhole A. open_time + closed_time = (2*pi - beta)/omega.
struct ExposureOverlap {
    double open_time = 0.0;    // exposed while the screen sees A open
    double closed_time = 0.0;  // exposed while the screen sees A closed
};
ExposureOverlap exposure_overlap(const ApparatusConfig& cfg, double phi);

/// Azimuth range in which only the two-pinhole pattern ever accumulates.
/// Width is gamma = beta - alpha; a finite response speed displaces the
/// range by +delta in the rotation direction. phi_end = phi_start + width
/// may exceed 2*pi, meaning the sector wraps.
struct PureSector {
    double phi_start = 0.0;
    double phi_end = 0.0;
    bool empty = false;  // flagged (not thrown) for degenerate gamma <= 0
    double width() const { return phi_end - phi_start; }
};
PureSector pure_sector(const ApparatusConfig& cfg);

/// Azimuth of the rear wheel's leading-edge line at the moment pinhole A
/// starts to close; the static reference line for the dividing boundary.
double geometric_boundary_azimuth(const ApparatusConfig& cfg);

/// Half-width of the pure-to-mixed transition ramp in the ideal
/// time-averaged pattern: min(alpha, 2*pi - beta)/2. The midpoint of the
/// transition sits this far past the displaced sector edge.
double transition_half_width(const ApparatusConfig& cfg);

/// Boundary displacement delta = omega*a2/v_response (0 when instantaneous).
double predict_delta(const ApparatusConfig& cfg);

/// Boundary shift on the screen between two runs that differ only in
/// omega: x = R*(omega_fast - omega_slow)*a2/v_response.
double predict_shift_x(const ApparatusConfig& slow, const ApparatusConfig& fast);

/// Copy with a different rotation speed.
ApparatusConfig with_omega(const ApparatusConfig& cfg, double omega);

/// True iff every field except omega matches exactly.
bool same_geometry(const ApparatusConfig& a, const ApparatusConfig& b);

}  // namespace pinwheel
