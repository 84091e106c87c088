#pragma once

#include "toral/types.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace toral {

struct invalid_lift_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Lift of a circle map: g on [0,1], extended by g(t+1) = g(t) + d.
struct CircleLift {
    std::function<double(double)> g;
    long sample_count = 4096;
};

/// Degree d = g(1) - g(0); throws invalid_lift_error when the endpoint
/// difference is not within 1e-9 of an integer.
long degree(const CircleLift& lift);

struct ConjugacyResult {
    std::vector<double> h_samples;  // h on the uniform grid, h(1) = h(0) + 1
    double residual = 0.0;          // sup distance of h(g(t)) - d h(t) to Z
    long iterations = 0;
    std::vector<double> step_sizes;  // sup change per iteration
};

/// Conjugacy h of the lift to the power map t -> d t, found as the fixed
/// point of h <- d^{-1} h o g starting from the identity (contraction with
/// factor <= 1/|d|).  Requires |d| >= 2 and monotone samples.
ConjugacyResult conjugacy_to_power_map(const CircleLift& lift, double tol,
                                       long max_iter);

struct GridCoverResult {
    bool covered = false;
    long steps = 0;  // first step with full cover, or the step budget
};

/// Simulates T(x) = A x + alpha on an N-cell grid of the n-torus (n <= 2):
/// marks the cells fully contained in some forward image T^i(box) of the seed
/// box and reports whether the marks cover the grid within max_steps.  Marking
/// is containment-based (never over-marks), so "covered" is trustworthy
/// evidence and "not covered" is one-sided.  Test instrument only.
GridCoverResult grid_transitivity_oracle(const IntMatrix& A,
                                         const std::vector<double>& alpha,
                                         const std::vector<double>& box_center,
                                         double box_radius, long resolution,
                                         long max_steps);

}  // namespace toral
