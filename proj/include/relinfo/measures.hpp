#pragma once

#include <optional>
#include <span>
#include <vector>

#include "relinfo/hydrogenic.hpp"
#include "relinfo/quadrature.hpp"

/// Information-theoretic functionals of the separable densities
/// rho(r, theta) = rho_radial(r) rho_angular(theta).
namespace relinfo::measures {

using hydrogenic::AngularDensity;
using hydrogenic::Framework;
using hydrogenic::QuantumState;
using hydrogenic::RadialDensity;
using quadrature::Estimate;

/// Tolerances shared by every integral of one measure evaluation.
struct Tolerances {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_subdivisions = 2000;
};

struct Split {
    Estimate radial;
    Estimate angular;
    double total = 0.0;
    double error = 0.0;
};

/// S = S_radial + S_angular (nats).
Split shannon_entropy(const RadialDensity& rad, const AngularDensity& ang, const Tolerances& tol = {});

/// D = D_radial * D_angular (bohr^-3).
Split disequilibrium(const RadialDensity& rad, const AngularDensity& ang, const Tolerances& tol = {});

/// <r^-2> = integral of rho_radial dr. Throws DivergentIntegral when the
/// density's origin exponent is <= -1.
Estimate expectation_r_minus2(const RadialDensity& rad, const Tolerances& tol = {});

struct FisherParts {
    Estimate radial;
    Estimate angular;
    double r_minus2 = 0.0;
    double total = 0.0;
    double error = 0.0;
};

/// I = I_radial + <r^-2> I_angular (bohr^-2). Throws DivergentIntegral when
/// rho_radial ~ r^p with p <= -1 (gamma <= 1/2 for |k| = 1).
FisherParts fisher_information(const RadialDensity& rad, const AngularDensity& ang, const Estimate& r_minus2,
                               const Tolerances& tol = {});

/// J = e^{2S/3} / (2 pi e) (bohr^2).
double entropic_power(double S);

struct MeasureSet {
    Framework framework = Framework::dirac;
    QuantumState state{1, -1, kHalf};
    double Z = 0.0;
    /// total energy in hartree: E (rest energy included) for Dirac, E_n for Schrodinger
    double energy = 0.0;
    /// M - E for Dirac, -E_n for Schrodinger
    double binding = 0.0;

    double S = 0.0;
    double J = 0.0;
    std::optional<double> D;
    std::optional<double> I;
    std::optional<double> C_LMC;
    std::optional<double> C_FS;

    double S_radial = 0.0;
    double S_angular = 0.0;
    std::optional<double> D_radial;
    double D_angular = 0.0;
    std::optional<double> I_radial;
    double I_angular = 0.0;
    std::optional<double> r_minus2;

    /// absolute quadrature error estimates, propagated to the composite
    double err_S = 0.0;
    double err_D = 0.0;
    double err_I = 0.0;

    bool fisher_divergent() const { return !I.has_value(); }
};

/// S, D, I, J and the two complexities for one state. Divergent D or I are
/// recorded as empty optionals; S is always finite.
MeasureSet measure_set(double Z, const QuantumState& state, Framework framework, const Tolerances& tol = {});

struct RatioSet {
    std::optional<double> zeta_LMC;
    std::optional<double> zeta_FS;
};

/// zeta_X = 1 - C_X^S / C_X^D.
RatioSet ratio_set(const MeasureSet& dirac, const MeasureSet& schrodinger);
RatioSet ratio_set(double Z, const QuantumState& state, const Tolerances& tol = {});

struct ProfilePoint {
    double r = 0.0;
    double D_of_r = 0.0;   // r^2 rho_radial
    double I_kernel = 0.0; // r^2 (rho')^2 / rho
};

std::vector<ProfilePoint> radial_profile(const RadialDensity& rad, std::span<const double> grid);
std::vector<ProfilePoint> radial_profile(double Z, const QuantumState& state, Framework framework,
                                         std::span<const double> grid);

struct ComponentPoint {
    double r = 0.0;
    double g_density = 0.0; // r^2 g^2
    double f_density = 0.0; // r^2 f^2
};

/// Large/small component contributions to r^2 rho for a Dirac state.
std::vector<ComponentPoint> component_split(double Z, const QuantumState& state, std::span<const double> grid);

/// r^2 g^2 and r^2 f^2 integrated over (0, inf).
std::pair<Estimate, Estimate> component_norms(double Z, const QuantumState& state, const Tolerances& tol = {});

/// Normalization integral of r^2 rho_radial.
Estimate radial_norm(const RadialDensity& rad, const Tolerances& tol = {});
/// Normalization 2 pi * integral of rho_angular sin(theta).
Estimate angular_norm(const AngularDensity& ang, const Tolerances& tol = {});

} // namespace relinfo::measures
