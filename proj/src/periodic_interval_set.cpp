#include "pinwheel/periodic_interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pinwheel/units.hpp"

namespace pinwheel {

PeriodicIntervalSet::PeriodicIntervalSet(double period) : period_(period)
{
    if (!(period > 0.0) || !std::isfinite(period))
        throw std::invalid_argument("PeriodicIntervalSet: period must be positive and finite");
}

PeriodicIntervalSet PeriodicIntervalSet::empty(double period)
{
    return PeriodicIntervalSet(period);
}

PeriodicIntervalSet PeriodicIntervalSet::full(double period)
{
    PeriodicIntervalSet s(period);
    s.parts_.push_back({0.0, period});
    return s;
}

PeriodicIntervalSet PeriodicIntervalSet::wrapped(double period, double start, double length)
{
    PeriodicIntervalSet s(period);
    if (!(length > 0.0))
        return s;
    if (length >= period)
        return full(period);
    double s0 = reduce_mod(start, period);
    double e0 = s0 + length;
    if (e0 <= period) {
        s.parts_.push_back({s0, e0});
    } else {
        s.parts_.push_back({0.0, e0 - period});
        s.parts_.push_back({s0, period});
    }
    s.normalize();
    return s;
}

PeriodicIntervalSet PeriodicIntervalSet::from_intervals(double period, std::vector<Interval> parts)
{
    PeriodicIntervalSet s(period);
    for (const Interval& iv : parts) {
        if (!(iv.start >= 0.0) || !(iv.end <= period) || !(iv.start < iv.end))
            throw std::invalid_argument("PeriodicIntervalSet: interval must satisfy 0 <= start < end <= period");
    }
    s.parts_ = std::move(parts);
    s.normalize();
    return s;
}

void PeriodicIntervalSet::normalize()
{
    if (parts_.empty())
        return;
    std::sort(parts_.begin(), parts_.end(),
              [](const Interval& a, const Interval& b) { return a.start < b.start; });
    std::vector<Interval> merged;
    merged.reserve(parts_.size());
    merged.push_back(parts_.front());
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        Interval& back = merged.back();
        // Coalesce overlapping and exactly adjacent pieces.
        if (parts_[i].start <= back.end)
            back.end = std::max(back.end, parts_[i].end);
        else
            merged.push_back(parts_[i]);
    }
    parts_ = std::move(merged);
}

void PeriodicIntervalSet::require_same_period(const PeriodicIntervalSet& other) const
{
    if (period_ != other.period_)
        throw std::invalid_argument("PeriodicIntervalSet: mismatched periods");
}

double PeriodicIntervalSet::measure() const
{
    double m = 0.0;
    for (const Interval& iv : parts_)
        m += iv.end - iv.start;
    return m;
}

bool PeriodicIntervalSet::contains(double t) const
{
    double r = reduce_mod(t, period_);
    auto it = std::upper_bound(parts_.begin(), parts_.end(), r,
                               [](double v, const Interval& iv) { return v < iv.start; });
    if (it == parts_.begin())
        return false;
    --it;
    return r < it->end;
}

PeriodicIntervalSet PeriodicIntervalSet::unite(const PeriodicIntervalSet& other) const
{
    require_same_period(other);
    PeriodicIntervalSet out(period_);
    out.parts_ = parts_;
    out.parts_.insert(out.parts_.end(), other.parts_.begin(), other.parts_.end());
    out.normalize();
    return out;
}

PeriodicIntervalSet PeriodicIntervalSet::intersect(const PeriodicIntervalSet& other) const
{
    require_same_period(other);
    PeriodicIntervalSet out(period_);
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < parts_.size() && j < other.parts_.size()) {
        const Interval& a = parts_[i];
        const Interval& b = other.parts_[j];
        double lo = std::max(a.start, b.start);
        double hi = std::min(a.end, b.end);
        if (lo < hi)
            out.parts_.push_back({lo, hi});
        if (a.end < b.end)
            ++i;
        else
            ++j;
    }
    return out;
}

PeriodicIntervalSet PeriodicIntervalSet::complement() const
{
    PeriodicIntervalSet out(period_);
    double cursor = 0.0;
    for (const Interval& iv : parts_) {
        if (cursor < iv.start)
            out.parts_.push_back({cursor, iv.start});
        cursor = iv.end;
    }
    if (cursor < period_)
        out.parts_.push_back({cursor, period_});
    return out;
}

PeriodicIntervalSet PeriodicIntervalSet::shifted(double dt) const
{
    PeriodicIntervalSet out(period_);
    double d = reduce_mod(dt, period_);
    for (const Interval& iv : parts_) {
        double s = iv.start + d;
        double e = iv.end + d;
        if (s >= period_) {
            out.parts_.push_back({s - period_, e - period_});
        } else if (e > period_) {
            out.parts_.push_back({s, period_});
            out.parts_.push_back({0.0, e - period_});
        } else {
            out.parts_.push_back({s, e});
        }
    }
    out.normalize();
    return out;
}

double PeriodicIntervalSet::intersection_measure(const PeriodicIntervalSet& other) const
{
    return intersect(other).measure();
}

bool PeriodicIntervalSet::almost_equal(const PeriodicIntervalSet& other, double tol) const
{
    if (period_ != other.period_ || parts_.size() != other.parts_.size())
        return false;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (std::fabs(parts_[i].start - other.parts_[i].start) > tol)
            return false;
        if (std::fabs(parts_[i].end - other.parts_[i].end) > tol)
            return false;
    }
    return true;
}

}  // namespace pinwheel
