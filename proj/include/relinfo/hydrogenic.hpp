#pragma once

#include <string>
#include <vector>

#include "relinfo/half_integer.hpp"
#include "relinfo/specfun.hpp"

/// Dirac and Schrodinger hydrogenic bound states in atomic units
/// (hbar = m = e = 1, c = 1/alpha, rest energy M = 1/alpha^2 hartree).
namespace relinfo::hydrogenic {

inline constexpr double kFineStructure = 7.2973525693e-3;
inline constexpr double kKleinCharge = 137.0;

enum class Framework { dirac, schrodinger };

std::string to_string(Framework f);
Framework framework_from_string(const std::string& s);

/// Bound state |n k m_j>. Externally labelled by (n, l, j, m_j).
class QuantumState {
  public:
    /// Throws DomainError for invalid quantum numbers.
    QuantumState(int n, int k, HalfInteger m_j);

    static QuantumState from_nljm(int n, int l, HalfInteger j, HalfInteger m_j);

    int n() const { return n_; }
    int k() const { return k_; }
    HalfInteger m_j() const { return m_j_; }
    HalfInteger j() const { return HalfInteger::from_twice(2 * std::abs(k_) - 1); }
    /// orbital number of the large component
    int l() const { return k_ > 0 ? k_ : -k_ - 1; }
    /// orbital number of the small component
    int l_prime() const { return k_ > 0 ? k_ - 1 : -k_; }
    /// radial quantum number n - |k|
    int n_prime() const { return n_ - std::abs(k_); }

    /// "3p1/2 m_j=1/2"
    std::string label() const;

    friend bool operator==(const QuantumState&, const QuantumState&) = default;

  private:
    int n_;
    int k_;
    HalfInteger m_j_;
};

/// Derived physical quantities of one Dirac state at charge Z.
struct PhysicalContext {
    double Z = 0.0;
    double alpha = kFineStructure;
    double M = 0.0;        // rest energy, hartree
    double gamma = 0.0;    // sqrt(k^2 - (alpha Z)^2)
    double lambda = 0.0;   // sqrt(M^2 - E^2)/c, bohr^-1
    double E = 0.0;        // total energy including rest energy, hartree
    double binding = 0.0;  // M - E, computed without cancellation
    double E_over_M = 0.0;

    /// Throws DomainError for Z >= 137, Z <= 0, or alpha Z >= |k|.
    static PhysicalContext make(double Z, const QuantumState& state, double alpha = kFineStructure);
};

/// Total Dirac energy E (hartree, rest energy included).
double dirac_energy(double Z, const QuantumState& state, double alpha = kFineStructure);

/// -Z^2 / (2 n^2) hartree.
double schrodinger_energy(double Z, int n);

/// Large and small radial components, bohr^-3/2.
struct RadialPair {
    double g;
    double f;
};

RadialPair dirac_radial_components(const PhysicalContext& ctx, const QuantumState& state, double r);

/// Radial density written as a sum of squared amplitudes sharing a common
/// envelope:
///
///   u_i(r) = A_i z^a e^{-z/2} P_i(z),  z = s r,  rho(r) = sum_i u_i(r)^2
///
/// Dirac: s = 2 lambda, a = gamma - 1, u = (g, f).
/// Schrodinger: s = 2Z/n, a = l, a single Laguerre amplitude.
/// Near the origin rho ~ r^(2a); the tail decays as e^{-s r}.
class RadialDensity {
  public:
    struct Component {
        double amplitude;
        specfun::Polynomial poly;
        specfun::Polynomial dpoly;
    };

    RadialDensity(Framework framework, double scale, double power, std::vector<Component> components);

    Framework framework() const { return framework_; }
    double origin_exponent() const { return 2.0 * power_; }
    double decay_rate() const { return scale_; }
    double scale() const { return scale_; }
    double power() const { return power_; }
    /// degree of sum_i P_i^2
    int polynomial_degree() const;
    const std::vector<Component>& components() const { return components_; }

    /// rho(r); throws DomainError for r <= 0.
    double operator()(double r) const;
    /// ln rho(r) evaluated in log space (-inf at exact nodes).
    double log_density(double r) const;
    double derivative(double r) const;
    /// (d rho/dr)^2 / rho, finite at nodes of single-component densities.
    double fisher_density(double r) const;
    /// r^2 (d rho/dr)^2 / rho without the r^-2 pole of the bare density,
    /// so it stays finite where fisher_density would overflow.
    double fisher_kernel(double r) const;
    /// r^power rho(r)^exponent, combined in log space.
    double weighted(double r, double power, int exponent = 1) const;
    /// u_i(r) for each component.
    std::vector<double> amplitudes(double r) const;

    /// Radii where some amplitude polynomial changes sign, sorted. For a
    /// Schrodinger density these are the nodes of rho.
    std::vector<double> amplitude_zeros(int component) const;
    /// Zeros of rho (single-component densities only; empty otherwise).
    std::vector<double> nodes() const;
    /// Interior stationary points of rho, located by sign changes of rho'.
    std::vector<double> stationary_points() const;
    /// Radius beyond which the envelope is negligible; used for root scans.
    double scan_limit() const;

  private:
    struct Terms {
        double log_envelope; // a ln z - z/2
        double z;
        bool negligible = false; // far tail: every quantity underflows to zero
    };
    Terms terms(double r) const;

    Framework framework_;
    double scale_;
    double power_;
    std::vector<Component> components_;
    double log_coeff_bound_ = 0.0; // max_i ln(|A_i| sum_j |c_ij|)
    int max_degree_ = 0;
};

RadialDensity dirac_radial_density(const PhysicalContext& ctx, const QuantumState& state);
RadialDensity schrodinger_radial_density(double Z, int n, int l);

/// Build the radial density for a state in the requested framework.
RadialDensity radial_density(double Z, const QuantumState& state, Framework framework,
                             double alpha = kFineStructure);

/// rho_angular(theta) = sum_s cg^2 |Y_{l, m_j -/+ 1/2}|^2, shared by both
/// frameworks. Each term is also kept as an amplitude
/// w_s = c_s sin^m(theta) T_s(cos theta) for analytic derivatives.
class AngularDensity {
  public:
    explicit AngularDensity(const QuantumState& state);

    int l() const { return l_; }
    HalfInteger j() const { return j_; }
    HalfInteger m_j() const { return m_j_; }

    double operator()(double theta) const;
    double derivative(double theta) const;
    /// (d rho/d theta)^2 / rho
    double fisher_density(double theta) const;

  private:
    struct Term {
        double weight; // cg^2
        int m;
        double amplitude; // sqrt(cg^2 * norm)
        specfun::Polynomial poly;
        specfun::Polynomial dpoly;
    };
    struct Amp {
        double w;
        double dw;
    };
    Amp amplitude(const Term& t, double theta) const;

    int l_;
    HalfInteger j_;
    HalfInteger m_j_;
    std::vector<Term> terms_;
};

AngularDensity angular_density(const QuantumState& state);

} // namespace relinfo::hydrogenic
