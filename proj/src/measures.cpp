#include "relinfo/measures.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "relinfo/errors.hpp"

namespace relinfo::measures {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

quadrature::QuadratureConfig config(const Tolerances& tol, double origin_exponent, double decay_rate,
                                    double tail_power) {
    quadrature::QuadratureConfig cfg;
    cfg.rel_tol = tol.rel_tol;
    cfg.abs_tol = tol.abs_tol;
    cfg.max_subdivisions = tol.max_subdivisions;
    cfg.origin_exponent = origin_exponent;
    cfg.decay_rate = decay_rate;
    cfg.tail_power = tail_power;
    return cfg;
}

quadrature::QuadratureConfig polar_config(const Tolerances& tol) { return config(tol, 0.0, 1.0, 0.0); }

Estimate scaled(Estimate e, double s) {
    e.value *= s;
    e.error *= std::abs(s);
    return e;
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

} // namespace

Estimate radial_norm(const RadialDensity& rad, const Tolerances& tol) {
    const double a = rad.power();
    const auto cfg = config(tol, 2.0 * a + 2.0, rad.decay_rate(), 2.0 * a + 2.0 + rad.polynomial_degree());
    const auto breaks = rad.stationary_points();
    return quadrature::integrate_radial([&](double r) { return rad.weighted(r, 2.0); }, cfg, breaks);
}

Estimate angular_norm(const AngularDensity& ang, const Tolerances& tol) {
    return scaled(quadrature::integrate_polar([&](double t) { return ang(t) * std::sin(t); }, polar_config(tol)),
                  kTwoPi);
}

Split shannon_entropy(const RadialDensity& rad, const AngularDensity& ang, const Tolerances& tol) {
    const double a = rad.power();
    const auto cfg = config(tol, 2.0 * a + 2.0, rad.decay_rate(), 2.0 * a + 3.0 + rad.polynomial_degree());
    const auto breaks = rad.stationary_points();
    Split out;
    out.radial = quadrature::integrate_radial(
        [&](double r) {
            const double w = rad.weighted(r, 2.0);
            if (w == 0.0) return 0.0;
            return -w * rad.log_density(r);
        },
        cfg, breaks);
    out.angular = scaled(
        quadrature::integrate_polar([&](double t) { return -xlogx(ang(t)) * std::sin(t); }, polar_config(tol)),
        kTwoPi);
    out.total = out.radial.value + out.angular.value;
    out.error = out.radial.error + out.angular.error;
    return out;
}

Split disequilibrium(const RadialDensity& rad, const AngularDensity& ang, const Tolerances& tol) {
    const double a = rad.power();
    const auto cfg =
        config(tol, 4.0 * a + 2.0, 2.0 * rad.decay_rate(), 4.0 * a + 2.0 + 2.0 * rad.polynomial_degree());
    const auto breaks = rad.stationary_points();
    Split out;
    out.radial = quadrature::integrate_radial(
        [&](double r) { return rad.weighted(r, 2.0, 2); },
        cfg, breaks);
    out.angular = scaled(quadrature::integrate_polar(
                             [&](double t) {
                                 const double rho = ang(t);
                                 return rho * rho * std::sin(t);
                             },
                             polar_config(tol)),
                         kTwoPi);
    out.total = out.radial.value * out.angular.value;
    out.error = std::abs(out.angular.value) * out.radial.error + std::abs(out.radial.value) * out.angular.error;
    return out;
}

Estimate expectation_r_minus2(const RadialDensity& rad, const Tolerances& tol) {
    const double a = rad.power();
    const auto cfg = config(tol, 2.0 * a, rad.decay_rate(), 2.0 * a + rad.polynomial_degree());
    const auto breaks = rad.stationary_points();
    return quadrature::integrate_radial([&](double r) { return rad.weighted(r, 0.0); }, cfg, breaks);
}

FisherParts fisher_information(const RadialDensity& rad, const AngularDensity& ang, const Estimate& r_minus2,
                               const Tolerances& tol) {
    const double a = rad.power();
    // (rho')^2/rho r^2 ~ r^{2a} at the origin: same threshold as <r^-2>
    const auto cfg = config(tol, 2.0 * a, rad.decay_rate(), 2.0 * a + 2.0 + rad.polynomial_degree());
    const auto breaks = rad.stationary_points();
    FisherParts out;
    out.radial =
        quadrature::integrate_radial([&](double r) { return rad.fisher_kernel(r); }, cfg, breaks);
    out.angular = scaled(
        quadrature::integrate_polar([&](double t) { return ang.fisher_density(t) * std::sin(t); }, polar_config(tol)),
        kTwoPi);
    out.r_minus2 = r_minus2.value;
    out.total = out.radial.value + r_minus2.value * out.angular.value;
    out.error = out.radial.error + std::abs(out.angular.value) * r_minus2.error +
                std::abs(r_minus2.value) * out.angular.error;
    return out;
}

double entropic_power(double S) { return std::exp(2.0 * S / 3.0) / (2.0 * std::numbers::pi * std::numbers::e); }

MeasureSet measure_set(double Z, const QuantumState& state, Framework framework, const Tolerances& tol) {
    MeasureSet m;
    m.framework = framework;
    m.state = state;
    m.Z = Z;
    const auto rad = hydrogenic::radial_density(Z, state, framework);
    const AngularDensity ang(state);
    if (framework == Framework::dirac) {
        const auto ctx = hydrogenic::PhysicalContext::make(Z, state);
        m.energy = ctx.E;
        m.binding = ctx.binding;
    } else {
        m.energy = hydrogenic::schrodinger_energy(Z, state.n());
        m.binding = -m.energy;
    }

    const auto s = shannon_entropy(rad, ang, tol);
    m.S = s.total;
    m.S_radial = s.radial.value;
    m.S_angular = s.angular.value;
    m.err_S = s.error;
    m.J = entropic_power(m.S);

    try {
        const auto d = disequilibrium(rad, ang, tol);
        m.D = d.total;
        m.D_radial = d.radial.value;
        m.D_angular = d.angular.value;
        m.err_D = d.error;
        m.C_LMC = d.total * std::exp(m.S);
    } catch (const DivergentIntegral&) {
        m.err_D = std::numeric_limits<double>::infinity();
    }

    try {
        const auto r2 = expectation_r_minus2(rad, tol);
        const auto fi = fisher_information(rad, ang, r2, tol);
        m.r_minus2 = r2.value;
        m.I_radial = fi.radial.value;
        m.I_angular = fi.angular.value;
        m.I = fi.total;
        m.err_I = fi.error;
        m.C_FS = fi.total * m.J;
    } catch (const DivergentIntegral&) {
        m.I_angular = 0.0;
        m.err_I = std::numeric_limits<double>::infinity();
    }
    return m;
}

RatioSet ratio_set(const MeasureSet& dirac, const MeasureSet& schrodinger) {
    RatioSet r;
    if (dirac.C_LMC && schrodinger.C_LMC) r.zeta_LMC = 1.0 - *schrodinger.C_LMC / *dirac.C_LMC;
    if (dirac.C_FS && schrodinger.C_FS) r.zeta_FS = 1.0 - *schrodinger.C_FS / *dirac.C_FS;
    return r;
}

RatioSet ratio_set(double Z, const QuantumState& state, const Tolerances& tol) {
    return ratio_set(measure_set(Z, state, Framework::dirac, tol), measure_set(Z, state, Framework::schrodinger, tol));
}

std::vector<ProfilePoint> radial_profile(const RadialDensity& rad, std::span<const double> grid) {
    std::vector<ProfilePoint> out;
    out.reserve(grid.size());
    for (double r : grid) {
        if (!(r > 0.0)) throw DomainError("profile radii must be > 0");
        out.push_back({r, rad.weighted(r, 2.0), rad.fisher_kernel(r)});
    }
    return out;
}

std::vector<ProfilePoint> radial_profile(double Z, const QuantumState& state, Framework framework,
                                         std::span<const double> grid) {
    return radial_profile(hydrogenic::radial_density(Z, state, framework), grid);
}

std::vector<ComponentPoint> component_split(double Z, const QuantumState& state, std::span<const double> grid) {
    const auto rad = hydrogenic::radial_density(Z, state, Framework::dirac);
    std::vector<ComponentPoint> out;
    out.reserve(grid.size());
    for (double r : grid) {
        if (!(r > 0.0)) throw DomainError("profile radii must be > 0");
        const auto u = rad.amplitudes(r);
        out.push_back({r, r * r * u[0] * u[0], r * r * u[1] * u[1]});
    }
    return out;
}

std::pair<Estimate, Estimate> component_norms(double Z, const QuantumState& state, const Tolerances& tol) {
    const auto rad = hydrogenic::radial_density(Z, state, Framework::dirac);
    const double a = rad.power();
    const auto cfg = config(tol, 2.0 * a + 2.0, rad.decay_rate(), 2.0 * a + 2.0 + rad.polynomial_degree());
    auto piece = [&](std::size_t i) {
        return quadrature::integrate_radial(
            [&rad, i](double r) {
                const double u = rad.amplitudes(r)[i];
                return r * r * u * u;
            },
            cfg, rad.amplitude_zeros(static_cast<int>(i)));
    };
    return {piece(0), piece(1)};
}

} // namespace relinfo::measures
