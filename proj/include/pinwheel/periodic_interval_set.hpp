#pragma once

#include <cstddef>
#include <vector>

namespace pinwheel {

/// Union of half-open intervals [start, end) on the circle [0, period).
///
/// Intervals are kept sorted by start, pairwise disjoint and non-adjacent,
/// so two sets covering the same point set compare equal element-wise.
/// The algebra (union, intersection, complement, shift) is closed within
/// one fixed period; mixing sets of different periods is a usage error.
class PeriodicIntervalSet {
public:
    struct Interval {
        double start;
        double end;
    };

    explicit PeriodicIntervalSet(double period);

    static PeriodicIntervalSet empty(double period);
    static PeriodicIntervalSet full(double period);

    /// Single interval of the given length whose start may be any real
    /// number; the start is reduced mod period and the interval is split
    /// in two when it crosses the period boundary. length >= period
    /// yields the full circle, length <= 0 the empty set.
    static PeriodicIntervalSet wrapped(double period, double start, double length);

    /// Builds from explicit pieces (each must satisfy 0 <= start < end <= period);
    /// overlapping or adjacent pieces are coalesced.
    static PeriodicIntervalSet from_intervals(double period, std::vector<Interval> parts);

    double period() const { return period_; }
    const std::vector<Interval>& intervals() const { return parts_; }
    bool is_empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    double measure() const;

    /// Membership of t (reduced mod period) under half-open semantics.
    bool contains(double t) const;

    PeriodicIntervalSet unite(const PeriodicIntervalSet& other) const;
    PeriodicIntervalSet intersect(const PeriodicIntervalSet& other) const;
    PeriodicIntervalSet complement() const;

    /// Rotates the whole set by dt (mod period).
    PeriodicIntervalSet shifted(double dt) const;

    double intersection_measure(const PeriodicIntervalSet& other) const;

    bool almost_equal(const PeriodicIntervalSet& other, double tol) const;

private:
    double period_ = 0.0;
    std::vector<Interval> parts_;

    void normalize();
    void require_same_period(const PeriodicIntervalSet& other) const;
};

}  // namespace pinwheel
