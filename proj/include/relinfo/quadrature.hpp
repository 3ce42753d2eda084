#pragma once

#include <functional>
#include <span>

/// Adaptive Gauss-Kronrod integration for radial (0, inf) and polar
/// [0, pi] integrals.
namespace relinfo::quadrature {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 2000;
    /// integrand ~ r^p as r -> 0; p <= -1 is divergent
    double origin_exponent = 0.0;
    /// integrand tail ~ r^tail_power e^{-decay_rate r}
    double decay_rate = 1.0;
    double tail_power = 0.0;
};

struct Estimate {
    double value = 0.0;
    double error = 0.0;
    int subdivisions = 0;
};

using Integrand = std::function<double(double)>;

/// Integral of f over (0, inf). The origin panel [0, r0] is mapped with
/// r = r0 t^{1/(1+p)} when p < 0, the tail is cut where the envelope drops
/// below 1e-18 of its peak and checked against a doubled cutoff.
/// `breakpoints` (e.g. nodes) seed the initial panel edges.
/// Throws DivergentIntegral for p <= -1, ToleranceNotMet when subdivisions
/// run out.
Estimate integrate_radial(const Integrand& f, const QuadratureConfig& cfg, std::span<const double> breakpoints = {});

/// Integral of f over [0, pi]; the 2 pi azimuthal factor is the caller's.
Estimate integrate_polar(const Integrand& f, const QuadratureConfig& cfg);

/// Integral of f over [a, b] by globally adaptive GK21 with the given
/// initial partition points inside (a, b).
Estimate integrate_interval(const Integrand& f, double a, double b, const QuadratureConfig& cfg,
                            std::span<const double> breakpoints = {});

/// Cutoff radius for the tail envelope r^m e^{-beta r} (relative 1e-18).
double tail_cutoff(double tail_power, double decay_rate);

} // namespace relinfo::quadrature
