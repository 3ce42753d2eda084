#include "relinfo/hydrogenic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "relinfo/errors.hpp"

namespace relinfo::hydrogenic {

using specfun::Polynomial;

std::string to_string(Framework f) { return f == Framework::dirac ? "dirac" : "schrodinger"; }

Framework framework_from_string(const std::string& s) {
    if (s == "dirac" || s == "D") return Framework::dirac;
    if (s == "schrodinger" || s == "S") return Framework::schrodinger;
    throw DomainError("unknown framework '" + s + "'");
}

QuantumState::QuantumState(int n, int k, HalfInteger m_j) : n_(n), k_(k), m_j_(m_j) {
    if (n < 1) throw DomainError("n >= 1 required, got n=" + std::to_string(n));
    if (k == 0) throw DomainError("k = 0 is not a Dirac quantum number");
    if (k < -n || k > n - 1) {
        throw DomainError("k must satisfy -n <= k <= n-1, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    if (!m_j.is_half_odd()) throw DomainError("m_j must be half-odd, got " + m_j.to_string());
    if (std::abs(m_j.twice()) > j().twice()) {
        throw DomainError("|m_j| <= j required, got m_j=" + m_j.to_string() + " j=" + j().to_string());
    }
}

QuantumState QuantumState::from_nljm(int n, int l, HalfInteger j, HalfInteger m_j) {
    if (l < 0 || l > n - 1) {
        throw DomainError("0 <= l <= n-1 required, got n=" + std::to_string(n) + " l=" + std::to_string(l));
    }
    int k = 0;
    if (j.twice() == 2 * l + 1) {
        k = -(l + 1);
    } else if (j.twice() == 2 * l - 1 && l >= 1) {
        k = l;
    } else {
        throw DomainError("j = l +/- 1/2 required, got l=" + std::to_string(l) + " j=" + j.to_string());
    }
    return QuantumState(n, k, m_j);
}

std::string QuantumState::label() const {
    static constexpr const char* kLetters = "spdfghiklmnoqrtuv";
    const int ll = l();
    const std::string letter = ll < 17 ? std::string(1, kLetters[ll]) : "[l=" + std::to_string(ll) + "]";
    return std::to_string(n_) + letter + j().to_string() + " m_j=" + m_j_.to_string();
}

PhysicalContext PhysicalContext::make(double Z, const QuantumState& state, double alpha) {
    if (!std::isfinite(Z) || !(Z > 0.0)) throw DomainError("Z > 0 required");
    if (Z >= kKleinCharge) throw DomainError("Z >= 137 (Klein regime) is outside the bound-state domain");
    if (!(alpha > 0.0)) throw DomainError("alpha > 0 required");
    const double az = alpha * Z;
    const double kk = std::abs(state.k());
    if (az >= kk) throw DomainError("alpha*Z >= |k|: gamma is not real");

    PhysicalContext ctx;
    ctx.Z = Z;
    ctx.alpha = alpha;
    ctx.M = 1.0 / (alpha * alpha);
    ctx.gamma = std::sqrt((kk - az) * (kk + az));
    const double shifted = state.n_prime() + ctx.gamma;
    const double x = (az * az) / (shifted * shifted);
    const double root = std::sqrt(1.0 + x);
    ctx.E_over_M = 1.0 / root;
    ctx.E = ctx.M * ctx.E_over_M;
    ctx.binding = ctx.M * x / ((1.0 + root) * root);
    ctx.lambda = alpha * ctx.M * std::sqrt(x / (1.0 + x));
    return ctx;
}

double dirac_energy(double Z, const QuantumState& state, double alpha) {
    return PhysicalContext::make(Z, state, alpha).E;
}

double schrodinger_energy(double Z, int n) {
    if (!(Z > 0.0)) throw DomainError("Z > 0 required");
    if (n < 1) throw DomainError("n >= 1 required");
    return -Z * Z / (2.0 * n * n);
}

// ---------------------------------------------------------------------------

RadialDensity::RadialDensity(Framework framework, double scale, double power, std::vector<Component> components)
    : framework_(framework), scale_(scale), power_(power), components_(std::move(components)) {
    log_coeff_bound_ = -std::numeric_limits<double>::infinity();
    for (const auto& c : components_) {
        double s = 0.0;
        for (double v : c.poly.coeffs()) s += std::abs(v);
        if (s > 0.0 && c.amplitude != 0.0) log_coeff_bound_ = std::max(log_coeff_bound_, std::log(std::abs(c.amplitude) * s));
        max_degree_ = std::max(max_degree_, c.poly.degree());
    }
}

int RadialDensity::polynomial_degree() const {
    int d = 0;
    for (const auto& c : components_) d = std::max(d, 2 * c.poly.degree());
    return d;
}

RadialDensity::Terms RadialDensity::terms(double r) const {
    if (std::isnan(r) || r < 0.0 || (r == 0.0 && (framework_ == Framework::dirac || power_ < 0.0))) {
        throw DomainError("radial density requires r > 0");
    }
    const double z = scale_ * r;
    if (z == 0.0) {
        return {power_ == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity(), 0.0};
    }
    const double log_env = power_ * std::log(z) - 0.5 * z;
    // |A P(z)| <= |A| sum|c| z^deg for z >= 1; one more power of z covers the kernels
    const bool negligible =
        z > 1.0 && log_env + log_coeff_bound_ + (max_degree_ + 1) * std::log(z) + std::log(max_degree_ + 2.0) < -750.0;
    return {log_env, z, negligible};
}

double RadialDensity::operator()(double r) const {
    const auto t = terms(r);
    if (t.negligible) return 0.0;
    double sum = 0.0;
    for (const auto& c : components_) {
        const double p = c.amplitude * c.poly(t.z);
        sum += p * p;
    }
    return std::exp(2.0 * t.log_envelope) * sum;
}

double RadialDensity::log_density(double r) const {
    const auto t = terms(r);
    if (t.negligible) return -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (const auto& c : components_) {
        const double p = c.amplitude * c.poly(t.z);
        sum += p * p;
    }
    return 2.0 * t.log_envelope + std::log(sum);
}

std::vector<double> RadialDensity::amplitudes(double r) const {
    const auto t = terms(r);
    if (t.negligible) return std::vector<double>(components_.size(), 0.0);
    const double env = std::exp(t.log_envelope);
    std::vector<double> out;
    out.reserve(components_.size());
    for (const auto& c : components_) out.push_back(c.amplitude * env * c.poly(t.z));
    return out;
}

namespace {

// d/dz [z^a e^{-z/2} P(z)] / (z^a e^{-z/2}) = (a/z - 1/2) P + P'
double log_derivative_factor(double a, double z, double p, double dp) {
    const double pole = (a == 0.0) ? 0.0 : a / z;
    return (pole - 0.5) * p + dp;
}

} // namespace

double RadialDensity::derivative(double r) const {
    const auto t = terms(r);
    if (t.negligible) return 0.0;
    double sum = 0.0;
    for (const auto& c : components_) {
        const double p = c.poly(t.z);
        sum += c.amplitude * c.amplitude * p * log_derivative_factor(power_, t.z, p, c.dpoly(t.z));
    }
    return 2.0 * scale_ * std::exp(2.0 * t.log_envelope) * sum;
}

double RadialDensity::fisher_density(double r) const {
    const auto t = terms(r);
    if (t.negligible) return 0.0;
    const double env2 = std::exp(2.0 * t.log_envelope);
    if (components_.size() == 1) {
        const auto& c = components_.front();
        const double d = c.amplitude * log_derivative_factor(power_, t.z, c.poly(t.z), c.dpoly(t.z));
        return 4.0 * scale_ * scale_ * env2 * d * d;
    }
    double num = 0.0;
    double den = 0.0;
    for (const auto& c : components_) {
        const double p = c.poly(t.z);
        const double a2 = c.amplitude * c.amplitude;
        num += a2 * p * log_derivative_factor(power_, t.z, p, c.dpoly(t.z));
        den += a2 * p * p;
    }
    if (den == 0.0) return 0.0;
    return 4.0 * scale_ * scale_ * env2 * num * num / den;
}

double RadialDensity::fisher_kernel(double r) const {
    const auto t = terms(r);
    if (t.negligible) return 0.0;
    const double env2 = std::exp(2.0 * t.log_envelope);
    // z ((a/z - 1/2) P + P') = a P + z (P' - P/2)
    auto zd = [&](const Component& c) {
        const double p = c.poly(t.z);
        return power_ * p + t.z * (c.dpoly(t.z) - 0.5 * p);
    };
    if (components_.size() == 1) {
        const auto& c = components_.front();
        const double d = c.amplitude * zd(c);
        return 4.0 * env2 * d * d;
    }
    double num = 0.0;
    double den = 0.0;
    for (const auto& c : components_) {
        const double p = c.poly(t.z);
        const double a2 = c.amplitude * c.amplitude;
        num += a2 * p * zd(c);
        den += a2 * p * p;
    }
    if (den == 0.0) return 0.0;
    return 4.0 * env2 * num * num / den;
}

double RadialDensity::weighted(double r, double power, int exponent) const {
    const auto t = terms(r);
    if (t.negligible) return 0.0;
    double sum = 0.0;
    for (const auto& c : components_) {
        const double p = c.amplitude * c.poly(t.z);
        sum += p * p;
    }
    if (sum == 0.0) return 0.0;
    const double log_r = (power == 0.0) ? 0.0 : power * std::log(r);
    return std::exp(exponent * 2.0 * t.log_envelope + log_r) * std::pow(sum, exponent);
}

double RadialDensity::scan_limit() const {
    const double zmax = 4.0 * (polynomial_degree() + 1) + 4.0 * (std::abs(power_) + 1.0) + 40.0;
    return zmax / scale_;
}

std::vector<double> RadialDensity::amplitude_zeros(int component) const {
    const auto& c = components_.at(static_cast<std::size_t>(component));
    const double zmax = scale_ * scan_limit();
    auto roots = c.poly.real_roots(0.0, zmax, 20000);
    std::erase_if(roots, [](double z) { return z <= 0.0; });
    for (auto& z : roots) z /= scale_;
    return roots;
}

std::vector<double> RadialDensity::nodes() const {
    if (components_.size() != 1) return {};
    return amplitude_zeros(0);
}

std::vector<double> RadialDensity::stationary_points() const {
    // z * sum_i A_i^2 P_i ((a/z - 1/2) P_i + P_i') as a polynomial in z
    Polynomial numerator;
    const Polynomial z_poly(std::vector<double>{0.0, 1.0});
    for (const auto& c : components_) {
        const Polynomial inner = c.poly * power_ + z_poly * (c.dpoly + c.poly * -0.5);
        numerator = numerator + (c.poly * inner) * (c.amplitude * c.amplitude);
    }
    const double zmax = scale_ * scan_limit();
    auto roots = numerator.real_roots(0.0, zmax, 20000);
    std::erase_if(roots, [](double z) { return z <= 0.0; });
    for (auto& z : roots) z /= scale_;
    return roots;
}

// ---------------------------------------------------------------------------

RadialDensity dirac_radial_density(const PhysicalContext& ctx, const QuantumState& state) {
    const int np = state.n_prime();
    const double k = state.k();
    const double gamma = ctx.gamma;
    // N = (n' + gamma) M / E
    const double N = std::sqrt(static_cast<double>(np) * np + 2.0 * np * gamma + k * k);
    const double b = 2.0 * gamma + 1.0;

    const Polynomial f0 = specfun::kummer_truncated(np, b);
    const Polynomial f1 = np > 0 ? specfun::kummer_truncated(np - 1, b) : Polynomial();
    const Polynomial pg = f0 * (N - k) + f1 * (-static_cast<double>(np));
    const Polynomial pf = f0 * (N - k) + f1 * static_cast<double>(np);

    const double one_plus = 1.0 + ctx.E_over_M;
    const double one_minus = ctx.binding / ctx.M;
    const double log_common = 1.5 * std::log(2.0 * ctx.lambda) - specfun::ln_gamma(b) +
                              0.5 * (specfun::ln_gamma(b + np) - std::log(4.0) - std::log(N) - std::log(N - k) -
                                     specfun::ln_gamma(np + 1.0));
    const double ag = std::exp(log_common + 0.5 * std::log(one_plus));
    const double af = -std::exp(log_common + 0.5 * std::log(one_minus));

    std::vector<RadialDensity::Component> comps;
    comps.push_back({ag, pg, pg.derivative()});
    comps.push_back({af, pf, pf.derivative()});
    return RadialDensity(Framework::dirac, 2.0 * ctx.lambda, gamma - 1.0, std::move(comps));
}

RadialPair dirac_radial_components(const PhysicalContext& ctx, const QuantumState& state, double r) {
    if (!(r > 0.0)) throw DomainError("dirac radial components require r > 0");
    const auto amps = dirac_radial_density(ctx, state).amplitudes(r);
    return {amps[0], amps[1]};
}

RadialDensity schrodinger_radial_density(double Z, int n, int l) {
    if (!(Z > 0.0)) throw DomainError("Z > 0 required");
    if (n < 1) throw DomainError("n >= 1 required");
    if (l < 0 || l >= n) {
        throw DomainError("0 <= l <= n-1 required, got n=" + std::to_string(n) + " l=" + std::to_string(l));
    }
    const double s = 2.0 * Z / n;
    const double log_norm =
        specfun::ln_gamma(n - l) - std::log(2.0 * n) - specfun::ln_gamma(n + l + 1.0) + 3.0 * std::log(s);
    const Polynomial lag = specfun::laguerre(n - l - 1, 2.0 * l + 1.0);
    std::vector<RadialDensity::Component> comps;
    comps.push_back({std::exp(0.5 * log_norm), lag, lag.derivative()});
    return RadialDensity(Framework::schrodinger, s, static_cast<double>(l), std::move(comps));
}

RadialDensity radial_density(double Z, const QuantumState& state, Framework framework, double alpha) {
    if (framework == Framework::dirac) {
        return dirac_radial_density(PhysicalContext::make(Z, state, alpha), state);
    }
    if (!std::isfinite(Z) || Z >= kKleinCharge) {
        throw DomainError("Z >= 137 (Klein regime) is outside the bound-state domain");
    }
    return schrodinger_radial_density(Z, state.n(), state.l());
}

// ---------------------------------------------------------------------------

AngularDensity::AngularDensity(const QuantumState& state) : l_(state.l()), j_(state.j()), m_j_(state.m_j()) {
    for (auto spin : {specfun::Spin::up, specfun::Spin::down}) {
        const int twice_m = m_j_.twice() + (spin == specfun::Spin::up ? -1 : 1);
        const int m = twice_m / 2;
        const double cg = specfun::cg_half(l_, j_, m_j_, spin);
        if (std::abs(m) > l_ || cg == 0.0) continue;
        const double weight = cg * cg;
        const int am = std::abs(m);
        const Polynomial t = specfun::legendre_derivative(l_, am);
        terms_.push_back({weight, m, std::sqrt(weight * specfun::sph_harm_norm(l_, am)), t, t.derivative()});
    }
}

double AngularDensity::operator()(double theta) const {
    double sum = 0.0;
    for (const auto& t : terms_) sum += t.weight * specfun::sph_harm_sq(l_, t.m, theta);
    return sum;
}

AngularDensity::Amp AngularDensity::amplitude(const Term& t, double theta) const {
    const int am = std::abs(t.m);
    const double s = std::sin(theta);
    const double x = std::cos(theta);
    const double tx = t.poly(x);
    const double sm = std::pow(s, am);
    double dw = -sm * s * t.dpoly(x);
    if (am > 0) dw += am * std::pow(s, am - 1) * x * tx;
    return {t.amplitude * sm * tx, t.amplitude * dw};
}

double AngularDensity::derivative(double theta) const {
    double sum = 0.0;
    for (const auto& t : terms_) {
        const auto a = amplitude(t, theta);
        sum += a.w * a.dw;
    }
    return 2.0 * sum;
}

double AngularDensity::fisher_density(double theta) const {
    if (terms_.size() == 1) {
        const auto a = amplitude(terms_.front(), theta);
        return 4.0 * a.dw * a.dw;
    }
    double num = 0.0;
    double den = 0.0;
    for (const auto& t : terms_) {
        const auto a = amplitude(t, theta);
        num += a.w * a.dw;
        den += a.w * a.w;
    }
    if (den == 0.0) return 0.0;
    return 4.0 * num * num / den;
}

AngularDensity angular_density(const QuantumState& state) { return AngularDensity(state); }

} // namespace relinfo::hydrogenic
