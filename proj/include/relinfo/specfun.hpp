#pragma once

#include <span>
#include <vector>

#include "relinfo/half_integer.hpp"

/// Real special functions needed by the hydrogenic wavefunctions.
namespace relinfo::specfun {

/// Dense polynomial c_0 + c_1 x + ... + c_m x^m in the monomial basis.
/// Trailing zero coefficients are trimmed so that degree() is exact.
class Polynomial {
  public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const double> coeffs() const { return coeffs_; }
    double operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

    /// Horner evaluation.
    double operator()(double x) const;

    Polynomial derivative() const;
    Polynomial operator*(double s) const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    /// Real roots in (lo, hi), located by sign changes on a uniform grid of
    /// `samples` cells and refined by bisection to ~1e-15 relative width.
    std::vector<double> real_roots(double lo, double hi, int samples = 4000) const;

  private:
    std::vector<double> coeffs_;
};

/// ln Gamma(x) for x > 0. Lanczos approximation, with Taylor series around
/// x = 1 and x = 2 so that the relative error stays below 1e-13 near the
/// zeros of ln Gamma.
double ln_gamma(double x);

/// Terminating Kummer series F(-n', b; z) as a degree-n' polynomial in z.
Polynomial kummer_truncated(int n_prime, double b);

/// Generalized Laguerre polynomial L_n^(alpha).
Polynomial laguerre(int n, double alpha);

/// |Y_{l,m}(theta, phi)|^2, independent of phi.
double sph_harm_sq(int l, int m, double theta);

/// d^m P_l / dx^m as a polynomial in x = cos(theta). With it,
/// P_l^m(x)^2 = (1 - x^2)^m * legendre_derivative(l, m)(x)^2.
Polynomial legendre_derivative(int l, int m);

/// (2l+1)/(4 pi) * (l-|m|)!/(l+|m|)!
double sph_harm_norm(int l, int m);

enum class Spin { up, down };

/// <l, m_j -/+ 1/2; 1/2, +/-1/2 | j, m_j> for spin up/down.
double cg_half(int l, HalfInteger j, HalfInteger m_j, Spin spin);

} // namespace relinfo::specfun
