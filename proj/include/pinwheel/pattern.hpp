#pragma once

#include <vector>

namespace pinwheel {

/// The two landing-position distributions the detector can accumulate:
/// the two-pinhole interference pattern and the fringeless single-pinhole
/// pattern. Every observed mix is a time-weighted blend of these two.
enum class PatternKind {
    BothOpen,  // cosine fringes under a Gaussian envelope
    BOnly,     // bare envelope
};

struct FringePattern {
    double lambda_fringe = 0.0;   // fringe spacing, m
    double visibility = 1.0;      // fringe contrast in [0, 1]
    double envelope_sigma = 0.0;  // Gaussian envelope scale, m
    double u_center = 0.0;        // pattern center in fringe coordinate, m
};

void validate(const FringePattern& pat);

/// Gaussian envelope, normalized to 1 at the pattern center.
double envelope(const FringePattern& pat, double u);

/// Unnormalized intensity at fringe coordinate u. Nonnegative everywhere.
double intensity(const FringePattern& pat, PatternKind kind, double u);

/// Probability density of one landing, normalized over the truncated
/// support [u_center - 6 sigma, u_center + 6 sigma].
class PatternPdf {
public:
    PatternPdf(const FringePattern& pat, PatternKind kind);

    double operator()(double u) const;  // 0 outside the truncated support
    double normalization() const { return norm_; }
    double support_lo() const { return lo_; }
    double support_hi() const { return hi_; }

private:
    FringePattern pat_;
    PatternKind kind_;
    double lo_, hi_, norm_;
};

/// Convenience wrapper; constructs a PatternPdf per call.
double pdf(const FringePattern& pat, PatternKind kind, double u);

/// Maps a uniform variate in [0,1) to a landing coordinate through a
/// tabulated inverse CDF with piecewise-linear (monotone) interpolation.
/// Deterministic given the variate stream.
class PatternSampler {
public:
    PatternSampler(const FringePattern& pat, PatternKind kind, int n_nodes = 4096);

    double operator()(double unit) const;

    int nodes() const { return static_cast<int>(table_.size()); }

private:
    std::vector<double> table_;  // u at the quantiles i/(n-1)
};

}  // namespace pinwheel
