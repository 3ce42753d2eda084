#include "relinfo/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

#include "relinfo/errors.hpp"

namespace relinfo::quadrature {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTailLogRatio = -41.446531673892822; // ln(1e-18)

// 21-point Kronrod abscissae (positive half) and weights, with the
// embedded 10-point Gauss weights (QUADPACK dqk21).
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452, 0.930157491355708226001207180059508,
    0.865063366688984510732096688423493, 0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784, 0.294392862701460198131126603103866,
    0.148874338981631210884826001129720, 0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390, 0.054755896574351996031381300244580,
    0.075039674810919952767043140916190, 0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707, 0.142775938577060080797094273138717,
    0.147739104901338491374841515972068, 0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
                                       0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
                                       0.295524224714752870173892994651338};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    double resabs;
    int segment;
};

struct ByError {
    bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

Panel gk21(const Integrand& f, double a, double b, int segment) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double resg = 0.0;
    double resk = fc * kWgk[10];
    double resabs = std::abs(resk);
    std::array<double, 10> fv1{};
    std::array<double, 10> fv2{};
    for (std::size_t j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    const double reskh = 0.5 * resk;
    double resasc = kWgk[10] * std::abs(fc - reskh);
    for (std::size_t j = 0; j < 10; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    const double result = resk * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(50.0 * kEps * resabs, err);
    if (!std::isfinite(result) || !std::isfinite(err)) {
        throw ToleranceNotMet("non-finite integrand value on [" + std::to_string(a) + ", " + std::to_string(b) + "]",
                              result, std::numeric_limits<double>::infinity());
    }
    return {a, b, result, err, resabs, segment};
}

struct Segment {
    Integrand f;
    std::vector<double> edges; // initial partition, sorted, >= 2 points
};

// Globally adaptive refinement over all panels of all segments.
Estimate refine(const std::vector<Segment>& segments, const QuadratureConfig& cfg) {
    std::priority_queue<Panel, std::vector<Panel>, ByError> active;
    std::vector<Panel> settled;
    double value = 0.0;
    double error = 0.0;
    int evaluated = 0;
    for (std::size_t s = 0; s < segments.size(); ++s) {
        const auto& seg = segments[s];
        for (std::size_t i = 0; i + 1 < seg.edges.size(); ++i) {
            const auto p = gk21(seg.f, seg.edges[i], seg.edges[i + 1], static_cast<int>(s));
            ++evaluated;
            value += p.value;
            error += p.error;
            active.push(p);
        }
    }
    int subdivisions = 0;
    while (true) {
        const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value));
        if (error <= target || active.empty()) break;
        const Panel worst = active.top();
        // panels whose error is at the rounding floor or that can no longer be
        // split are settled; their error stays in the total
        const double width = worst.b - worst.a;
        if (worst.error <= 50.0 * kEps * worst.resabs ||
            width <= 4.0 * kEps * std::max(std::abs(worst.a), std::abs(worst.b))) {
            active.pop();
            settled.push_back(worst);
            continue;
        }
        if (subdivisions >= cfg.max_subdivisions) {
            throw ToleranceNotMet("adaptive quadrature exhausted " + std::to_string(cfg.max_subdivisions) +
                                      " subdivisions (error " + std::to_string(error) + ", target " +
                                      std::to_string(target) + ")",
                                  value, error);
        }
        active.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const auto& f = segments[static_cast<std::size_t>(worst.segment)].f;
        const auto left = gk21(f, worst.a, mid, worst.segment);
        const auto right = gk21(f, mid, worst.b, worst.segment);
        evaluated += 2;
        ++subdivisions;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        active.push(left);
        active.push(right);
    }
    // re-sum to shed the drift of incremental updates
    double v = 0.0;
    double e = 0.0;
    for (const auto& p : settled) {
        v += p.value;
        e += p.error;
    }
    while (!active.empty()) {
        v += active.top().value;
        e += active.top().error;
        active.pop();
    }
    return {v, e, subdivisions};
}

std::vector<double> sorted_edges(double a, double b, std::span<const double> interior) {
    std::vector<double> edges{a, b};
    for (double x : interior) {
        if (x > a && x < b) edges.push_back(x);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

} // namespace

double tail_cutoff(double tail_power, double decay_rate) {
    if (!(decay_rate > 0.0)) throw DomainError("decay_rate > 0 required");
    const double m = std::max(tail_power, 0.0);
    if (m == 0.0) return -kTailLogRatio / decay_rate;
    const double peak = m / decay_rate;
    auto excess = [&](double r) { return m * std::log(r / peak) - decay_rate * (r - peak) - kTailLogRatio; };
    double lo = peak;
    double hi = peak + (-kTailLogRatio) / decay_rate;
    while (excess(hi) > 0.0) hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) > 0.0 ? lo : hi) = mid;
    }
    return hi;
}

Estimate integrate_interval(const Integrand& f, double a, double b, const QuadratureConfig& cfg,
                            std::span<const double> breakpoints) {
    if (!(cfg.rel_tol > 0.0)) throw DomainError("rel_tol > 0 required");
    if (!(b > a)) return {};
    return refine({Segment{f, sorted_edges(a, b, breakpoints)}}, cfg);
}

Estimate integrate_polar(const Integrand& f, const QuadratureConfig& cfg) {
    constexpr double pi = std::numbers::pi;
    const std::array<double, 3> cuts = {0.25 * pi, 0.5 * pi, 0.75 * pi};
    return integrate_interval(f, 0.0, pi, cfg, cuts);
}

Estimate integrate_radial(const Integrand& f, const QuadratureConfig& cfg, std::span<const double> breakpoints) {
    if (!(cfg.rel_tol > 0.0)) throw DomainError("rel_tol > 0 required");
    const double p = cfg.origin_exponent;
    if (!(p > -1.0)) {
        throw DivergentIntegral("integrand ~ r^" + std::to_string(p) + " at the origin is not integrable");
    }
    const double beta = cfg.decay_rate;
    if (!(beta > 0.0)) throw DomainError("decay_rate > 0 required");

    double r0 = 1.0 / beta;
    for (double x : breakpoints) {
        if (x > 0.0) r0 = std::min(r0, 0.5 * x);
    }
    double rmax = tail_cutoff(cfg.tail_power, beta);
    for (double x : breakpoints) rmax = std::max(rmax, 1.5 * x);
    rmax = std::max(rmax, 4.0 * r0);

    std::vector<Segment> segments;
    Estimate origin_tail;
    if (p < 0.0) {
        // r = r0 t^q, q = 1/(1+p): dr = r0 q t^{q-1} dt and t^{q-1} = (r/r0)^{-p}
        const double q = 1.0 / (1.0 + p);
        Integrand mapped = [&f, r0, q, p](double t) {
            const double ratio = std::pow(t, q);
            return r0 * q * f(r0 * ratio) * std::pow(ratio, -p);
        };
        // Below r_c = r0 * 1e-250 the integrand is its leading power c r^p to
        // double precision; that piece is added in closed form. Near p = -1 it
        // carries a finite share of the integral and f(r) overflows before
        // r reaches the smallest double.
        constexpr double kOriginCut = 1e-250;
        const double t_c = std::pow(kOriginCut, 1.0 + p);
        const double r_c = r0 * kOriginCut;
        const double f_c = f(r_c);
        if (!std::isfinite(f_c)) {
            throw ToleranceNotMet("non-finite integrand at r = " + std::to_string(r_c), f_c, f_c);
        }
        origin_tail.value = f_c * r_c / (1.0 + p);
        origin_tail.error = std::abs(origin_tail.value) * 1e-14;
        segments.push_back({std::move(mapped), {t_c, 0.5 * (t_c + 1.0), 1.0}});
    } else {
        segments.push_back({f, {0.0, 0.5 * r0, r0}});
    }

    // geometric initial partition of the bulk, plus caller breakpoints
    std::vector<double> interior;
    constexpr int kBulkPanels = 12;
    for (int i = 1; i < kBulkPanels; ++i) interior.push_back(r0 * std::pow(rmax / r0, static_cast<double>(i) / kBulkPanels));
    interior.insert(interior.end(), breakpoints.begin(), breakpoints.end());
    segments.push_back({f, sorted_edges(r0, rmax, interior)});

    Estimate total = refine(segments, cfg);
    total.value += origin_tail.value;
    total.error += origin_tail.error;

    // the cutoff is accepted once [rmax, 2 rmax] contributes below tolerance
    for (int extension = 0; extension < 8; ++extension) {
        const auto tail = integrate_interval(f, rmax, 2.0 * rmax, cfg);
        total.value += tail.value;
        total.error += tail.error;
        total.subdivisions += tail.subdivisions;
        rmax *= 2.0;
        if (std::abs(tail.value) <= 0.1 * std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total.value))) break;
        if (extension == 7) {
            throw ToleranceNotMet("radial tail does not decay below tolerance", total.value, total.error);
        }
    }
    return total;
}

} // namespace relinfo::quadrature
