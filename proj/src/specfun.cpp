#include "relinfo/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "relinfo/errors.hpp"

namespace relinfo {

HalfInteger HalfInteger::from_double(double value) {
    const double twice = 2.0 * value;
    const double rounded = std::round(twice);
    if (!std::isfinite(value) || std::abs(twice - rounded) > 1e-9) {
        throw DomainError("value " + std::to_string(value) + " is not a multiple of 1/2");
    }
    return HalfInteger(static_cast<int>(rounded));
}

std::string HalfInteger::to_string() const {
    if (!is_half_odd()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

} // namespace relinfo

namespace relinfo::specfun {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator*(double s) const {
    std::vector<double> c = coeffs_;
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

std::vector<double> Polynomial::real_roots(double lo, double hi, int samples) const {
    std::vector<double> roots;
    if (degree() == 0 || !(hi > lo) || samples < 1) return roots;
    const double h = (hi - lo) / samples;
    double x0 = lo;
    double f0 = (*this)(x0);
    for (int i = 1; i <= samples; ++i) {
        const double x1 = (i == samples) ? hi : lo + i * h;
        const double f1 = (*this)(x1);
        if (f1 == 0.0) {
            roots.push_back(x1);
        } else if (f0 != 0.0 && std::signbit(f0) != std::signbit(f1)) {
            double a = x0, b = x1, fa = f0;
            for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
                const double m = 0.5 * (a + b);
                const double fm = (*this)(m);
                if (fm == 0.0) {
                    a = b = m;
                    break;
                }
                if (std::signbit(fm) == std::signbit(fa)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        x0 = x1;
        f0 = f1;
    }
    return roots;
}

namespace {

// g = 7, n = 9 Lanczos coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993227684700473478,  676.520368121885098567009190444019,
    -1259.13921672240287047156078755283, 771.3234287776530788486528258894,
    -176.61502916214059906584551354,     12.507343278686904814458936853,
    -0.13857109526572011689554707,       9.984369578019570859563e-6,
    1.50563273514931155834e-7};

// zeta(k) for k = 2..30, used by the Taylor series of ln Gamma(1 + e).
constexpr std::array<double, 29> kZeta = {
    1.64493406684822643647, 1.2020569031595942854,  1.08232323371113819152, 1.03692775514336992633,
    1.01734306198444913971, 1.00834927738192282684, 1.00407735619794433938, 1.00200839282608221442,
    1.00099457512781808534, 1.00049418860411946456, 1.0002460865533080483,  1.00012271334757848915,
    1.00006124813505870483, 1.00003058823630702049, 1.00001528225940865187, 1.00000763719763789976,
    1.00000381729326499984, 1.00000190821271655394, 1.0000009539620338728,  1.00000047693298678781,
    1.00000023845050272773, 1.00000011921992596531, 1.00000005960818905126, 1.00000002980350351465,
    1.00000001490155482837, 1.00000000745071178984, 1.00000000372533402479, 1.00000000186265972351,
    1.00000000093132743242};

constexpr double kSeriesRadius = 0.25;

// ln Gamma(1 + e) = -gamma_E e + sum_{k>=2} (-1)^k zeta(k) e^k / k, |e| <= 1/4.
double ln_gamma_1p_series(double e) {
    double sum = 0.0;
    double power = -e; // becomes e^2 on the first pass
    for (std::size_t i = 0; i < kZeta.size(); ++i) {
        power *= -e;
        const double k = static_cast<double>(i + 2);
        sum += kZeta[i] * power / k;
    }
    return -std::numbers::egamma * e + sum;
}

double ln_gamma_lanczos(double x) {
    // valid for x >= 1/2
    const double z = x - 1.0;
    double a = kLanczos[0];
    const double t = z + kLanczosG + 0.5;
    for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (z + static_cast<double>(i));
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

} // namespace

double ln_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("ln_gamma requires x > 0, got " + std::to_string(x));
    }
    if (std::abs(x - 1.0) <= kSeriesRadius) return ln_gamma_1p_series(x - 1.0);
    if (std::abs(x - 2.0) <= kSeriesRadius) return std::log1p(x - 2.0) + ln_gamma_1p_series(x - 2.0);
    if (x < 0.5) return ln_gamma(x + 1.0) - std::log(x);
    return ln_gamma_lanczos(x);
}

Polynomial kummer_truncated(int n_prime, double b) {
    if (n_prime < 0) throw DomainError("kummer_truncated requires n' >= 0");
    if (!(b > 0.0)) throw DomainError("kummer_truncated requires b > 0");
    std::vector<double> c(static_cast<std::size_t>(n_prime) + 1);
    c[0] = 1.0;
    for (int m = 0; m < n_prime; ++m) {
        // (-n')_{m+1} / ((b)_{m+1} (m+1)!) from the previous term
        c[static_cast<std::size_t>(m) + 1] =
            c[static_cast<std::size_t>(m)] * (m - n_prime) / ((b + m) * (m + 1.0));
    }
    return Polynomial(std::move(c));
}

Polynomial laguerre(int n, double alpha) {
    if (n < 0) throw DomainError("laguerre requires n >= 0");
    if (!(alpha > -1.0)) throw DomainError("laguerre requires alpha > -1");
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    // c_0 = binom(n + alpha, n)
    double c0 = 1.0;
    for (int t = 1; t <= n; ++t) c0 *= (alpha + t) / t;
    c[0] = c0;
    for (int i = 0; i < n; ++i) {
        c[static_cast<std::size_t>(i) + 1] =
            c[static_cast<std::size_t>(i)] * (-(n - i)) / ((alpha + i + 1.0) * (i + 1.0));
    }
    return Polynomial(std::move(c));
}

double sph_harm_norm(int l, int m) {
    const int am = std::abs(m);
    double ratio = 1.0; // (l-|m|)!/(l+|m|)!
    for (int t = l - am + 1; t <= l + am; ++t) ratio /= t;
    return (2.0 * l + 1.0) / (4.0 * std::numbers::pi) * ratio;
}

double sph_harm_sq(int l, int m, double theta) {
    if (l < 0 || std::abs(m) > l) {
        throw DomainError("sph_harm_sq requires |m| <= l, got l=" + std::to_string(l) + " m=" + std::to_string(m));
    }
    const int am = std::abs(m);
    const double x = std::cos(theta);
    const double s = std::sin(theta);
    // P_m^m seed, then upward in l
    double pmm = 1.0;
    for (int i = 1; i <= am; ++i) pmm *= -(2.0 * i - 1.0) * s;
    double p = pmm;
    if (l > am) {
        double prev = pmm;
        double cur = x * (2.0 * am + 1.0) * pmm;
        for (int ll = am + 2; ll <= l; ++ll) {
            const double next = (x * (2.0 * ll - 1.0) * cur - (ll + am - 1.0) * prev) / (ll - am);
            prev = cur;
            cur = next;
        }
        p = cur;
    }
    return sph_harm_norm(l, am) * p * p;
}

Polynomial legendre_derivative(int l, int m) {
    if (l < 0 || m < 0 || m > l) throw DomainError("legendre_derivative requires 0 <= m <= l");
    // P_l(x) = 2^-l sum_k (-1)^k C(l,k) C(2l-2k,l) x^(l-2k)
    auto binom = [](int top, int bottom) {
        double b = 1.0;
        for (int i = 1; i <= bottom; ++i) b = b * (top - bottom + i) / i;
        return b;
    };
    std::vector<double> c(static_cast<std::size_t>(l) + 1, 0.0);
    for (int k = 0; 2 * k <= l; ++k) {
        const double mag = std::ldexp(binom(l, k) * binom(2 * l - 2 * k, l), -l);
        c[static_cast<std::size_t>(l - 2 * k)] = (k % 2 == 0 ? 1.0 : -1.0) * mag;
    }
    Polynomial p(std::move(c));
    for (int i = 0; i < m; ++i) p = p.derivative();
    return p;
}

double cg_half(int l, HalfInteger j, HalfInteger m_j, Spin spin) {
    const bool j_upper = j.twice() == 2 * l + 1;
    const bool j_lower = j.twice() == 2 * l - 1;
    if (l < 0 || !(j_upper || j_lower) || j.twice() < 1 || !m_j.is_half_odd() || std::abs(m_j.twice()) > j.twice()) {
        throw DomainError("invalid spin-1/2 coupling l=" + std::to_string(l) + " j=" + j.to_string() +
                          " m_j=" + m_j.to_string());
    }
    const double denom = 2.0 * l + 1.0;
    const double mj = m_j.value();
    if (j_upper) {
        return spin == Spin::up ? std::sqrt((l + mj + 0.5) / denom) : std::sqrt((l - mj + 0.5) / denom);
    }
    return spin == Spin::up ? -std::sqrt((l - mj + 0.5) / denom) : std::sqrt((l + mj + 0.5) / denom);
}

} // namespace relinfo::specfun
