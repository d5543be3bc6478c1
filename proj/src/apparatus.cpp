#include "pinwheel/apparatus.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "pinwheel/errors.hpp"
#include "pinwheel/units.hpp"

namespace pinwheel {

bool ApparatusConfig::response_is_instant() const
{
    return std::isinf(v_response);
}

double ApparatusConfig::period() const
{
    if (!(omega > 0.0))
        throw ConfigError("apparatus: period undefined for omega = 0 (static configuration)");
    return kTwoPi / omega;
}

double ApparatusConfig::retardation() const
{
    if (response_is_instant())
        return 0.0;
    return a2 / v_response;
}

std::vector<std::string> validate(const ApparatusConfig& cfg)
{
    auto fail = [](const std::string& msg) { throw ConfigError("apparatus: " + msg); };

    if (!(cfg.a1 > 0.0)) fail("a1 must be > 0");
    if (!(cfg.a2 > 0.0)) fail("a2 must be > 0");
    if (!(cfg.b1 > 0.0)) fail("b1 must be > 0");
    if (!(cfg.b2 > 0.0)) fail("b2 must be > 0");
    if (!(cfg.R > 0.0)) fail("R must be > 0");
    if (!(cfg.v0 > 0.0)) fail("v0 must be > 0");
    if (!(cfg.v_response > 0.0)) fail("v_response must be > 0 (or infinite)");
    if (!(cfg.alpha > 0.0)) fail("alpha must be > 0");
    if (!(cfg.beta > cfg.alpha)) fail("beta must exceed alpha (gamma = beta - alpha > 0)");
    if (!(cfg.beta < kTwoPi)) fail("beta must be < 2*pi");
    if (!(cfg.theta >= 0.0 && cfg.theta < kTwoPi)) fail("theta must lie in [0, 2*pi)");
    if (!(cfg.omega >= 0.0)) fail("omega must be >= 0");
    if (!std::isfinite(cfg.omega)) fail("omega must be finite");
    if (!(cfg.wheel_axis_offset >= 0.0)) fail("wheel_axis_offset must be >= 0");

    std::vector<std::string> warnings;
    if (!cfg.response_is_instant() && cfg.v_response < cfg.v0) {
        std::ostringstream os;
        os << "v_response (" << cfg.v_response << " m/s) is below the particle speed v0 ("
           << cfg.v0 << " m/s); outside the expected v0 <= v <= c range";
        warnings.push_back(os.str());
    }
    return warnings;
}

double fringe_coordinate(const ApparatusConfig& cfg, const ScreenPoint& p)
{
    return p.r * std::cos(p.phi) - cfg.wheel_axis_offset;
}

ScreenPoint leading_tip(const ApparatusConfig& cfg)
{
    return {cfg.theta, cfg.R};
}

ScreenPoint trailing_tip(const ApparatusConfig& cfg)
{
    return {reduce_angle(cfg.theta - cfg.gamma()), cfg.R};
}

PeriodicIntervalSet a_open_windows(const ApparatusConfig& cfg)
{
    double period = cfg.period();  // throws for omega = 0
    double closed = cfg.alpha / cfg.omega;
    if (closed >= period)
        return PeriodicIntervalSet::empty(period);
    return PeriodicIntervalSet::wrapped(period, closed, period - closed);
}

bool a_open(const ApparatusConfig& cfg, double t)
{
    double phase = reduce_mod(cfg.omega * t, kTwoPi);
    return phase >= cfg.alpha;
}

bool a_eff(const ApparatusConfig& cfg, double t)
{
    return a_open(cfg, t - cfg.retardation());
}

bool screen_occluded(const ApparatusConfig& cfg, const ScreenPoint& p, double t)
{
    if (p.r > cfg.R)
        return false;
    // Sector spans [L - beta, L) with the leading edge at L(t) = theta + omega*t.
    double lead = reduce_mod(cfg.theta + cfg.omega * t - p.phi, kTwoPi);
    return lead < cfg.beta;
}

PeriodicIntervalSet exposure_windows(const ApparatusConfig& cfg, double phi)
{
    double period = cfg.period();
    // Coverage starts when the leading edge reaches phi and lasts beta/omega.
    double cover_start = reduce_mod(phi - cfg.theta, kTwoPi) / cfg.omega;
    double exposed = (kTwoPi - cfg.beta) / cfg.omega;
    return PeriodicIntervalSet::wrapped(period, cover_start + cfg.beta / cfg.omega, exposed);
}

ExposureOverlap exposure_overlap(const ApparatusConfig& cfg, double phi)
{
    PeriodicIntervalSet exposure = exposure_windows(cfg, phi);
    double period = cfg.period();
    PeriodicIntervalSet closed_eff =
        PeriodicIntervalSet::wrapped(period, cfg.retardation(), cfg.alpha / cfg.omega);
    ExposureOverlap out;
    out.closed_time = exposure.intersection_measure(closed_eff);
    out.open_time = exposure.measure() - out.closed_time;
    return out;
}

PureSector pure_sector(const ApparatusConfig& cfg)
{
    if (!(cfg.omega > 0.0))
        throw ConfigError("pure_sector: omega must be > 0 (static configuration)");
    PureSector sector;
    double g = cfg.gamma();
    if (!(g > 0.0)) {
        sector.empty = true;
        return sector;
    }
    double delta = predict_delta(cfg);
    sector.phi_start = reduce_angle(cfg.theta + delta - g);
    sector.phi_end = sector.phi_start + g;
    return sector;
}

double geometric_boundary_azimuth(const ApparatusConfig& cfg)
{
    return cfg.theta;
}

double transition_half_width(const ApparatusConfig& cfg)
{
    return 0.5 * std::min(cfg.alpha, kTwoPi - cfg.beta);
}

double predict_delta(const ApparatusConfig& cfg)
{
    if (cfg.response_is_instant())
        return 0.0;
    if (!(cfg.v_response > 0.0))
        throw ConfigError("predict_delta: v_response must be positive");
    return cfg.omega * cfg.a2 / cfg.v_response;
}

double predict_shift_x(const ApparatusConfig& slow, const ApparatusConfig& fast)
{
    if (!same_geometry(slow, fast))
        throw ConfigError("predict_shift_x: configurations must differ only in omega");
    if (slow.response_is_instant())
        return 0.0;
    return slow.R * (fast.omega - slow.omega) * slow.a2 / slow.v_response;
}

ApparatusConfig with_omega(const ApparatusConfig& cfg, double omega)
{
    ApparatusConfig out = cfg;
    out.omega = omega;
    return out;
}

bool same_geometry(const ApparatusConfig& a, const ApparatusConfig& b)
{
    return a.a1 == b.a1 && a.a2 == b.a2 && a.b1 == b.b1 && a.b2 == b.b2 && a.v0 == b.v0 &&
           a.v_response == b.v_response && a.R == b.R && a.alpha == b.alpha &&
           a.beta == b.beta && a.theta == b.theta &&
           a.wheel_axis_offset == b.wheel_axis_offset;
}

}  // namespace pinwheel
