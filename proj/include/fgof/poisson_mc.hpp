#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "fgof/rng.hpp"

namespace fgof {

struct PlanarPoint {
    double x;
    double y;  // <= 0
};

// Finite point set on a strip [x_lo, x_hi] x [-depth, 0], sorted by x.
struct PlanarPointSet {
    std::vector<PlanarPoint> points;
    double x_lo = 0, x_hi = 0;
    double depth = 0;
};

// One replicate of the limiting processes: five independent homogeneous
// Poisson processes on [0,1] x [-depth, 0] and one master process on
// [-1, 6] x [-depth, 0], all with the given intensity. The five overlapping
// window views of the master realize the dependence that the calibration
// constant is a covariance over.
struct ProcessDraw {
    std::array<PlanarPointSet, 5> odd;
    PlanarPointSet even_master;
};

ProcessDraw sample_processes(double gamma, double depth, Rng& rng);

// View k in 1..5 of the master: points with x in (k-2, k+1], shifted to
// [-1, 2].
PlanarPointSet window_even(const PlanarPointSet& master, int k);

// Half the integrated squared boundary fit of phi_e at bandwidth 1 over [0,1]
// (composite Simpson on grid_n+1 nodes, grid_n even) plus 2/gamma times the
// sum of phi_o responses at or above the fitted boundary. A draw that leaves
// the fit one-sided somewhere is reported as DegenerateDraw.
double g_functional(const PlanarPointSet& phi_o, const PlanarPointSet& phi_e, double gamma,
                    int grid_n);

// Variance of the empirical covariance of two paired samples, with all moments
// plugged in from the same sample.
double cov_variance(std::span<const double> xs, std::span<const double> ys);

struct A1Estimate {
    double value;
    double std_error;
    std::size_t reps;
    double gamma;
    double depth;
    std::uint64_t seed;
    std::size_t redraws;
};

struct A1Options {
    std::size_t reps = 0;
    double gamma = 1.0;
    double depth = 0.0;  // 0 picks the default 20 / gamma
    int grid_n = 2048;
    std::uint64_t seed = 0;
    unsigned workers = 0;  // 0 = hardware concurrency
};

// Empirical covariance of the window-3 functional against the sum over all
// five windows, one pair per replicate. The processes are drawn at intensity
// gamma/2 (the limiting density of the estimation half of a tail-scale-gamma
// boundary sample) and the functional is weighted by gamma. At gamma == 1
// this estimates the calibration constant itself; in general it scales with
// gamma^-4.
A1Estimate estimate_a1(const A1Options& opt);

}  // namespace fgof
