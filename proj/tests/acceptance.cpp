// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/minima.hpp>

#include "oracles.hpp"
#include "relinfo/catalog.hpp"
#include "relinfo/errors.hpp"
#include "relinfo/measures.hpp"
#include "relinfo/sweep.hpp"

using namespace relinfo;
using hydrogenic::Framework;
using hydrogenic::QuantumState;
using measures::MeasureSet;

namespace {

// Pinned tolerances.
constexpr double kClosedFormComplexityTol = 1e-6;
constexpr double kClosedFormMeasureTol = 1e-8;
constexpr double kDiracNormTol = 1e-8;
constexpr double kSchrodingerNormTol = 1e-10;
constexpr double kNonrelativisticTol = 1e-3;
constexpr double kSeparabilityTol = 1e-6;
constexpr double kMjInvarianceTol = 1e-8;
constexpr double kKernelNodeFraction = 1e-10;
constexpr double kLmcBound = 1.0;
constexpr double kFsBound = 3.0;

const std::vector<double> kCatalogZ = {1.0, 19.0, 50.0, 55.0, 90.0, 118.0};

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

QuantumState st(int n, int l, int twice_j, int twice_mj) {
    return QuantumState::from_nljm(n, l, HalfInteger::from_twice(twice_j), HalfInteger::from_twice(twice_mj));
}

QuantumState stretched(int n, int k) { return QuantumState(n, k, HalfInteger::from_twice(2 * std::abs(k) - 1)); }

// Full n <= 6 catalog at the bound-suite charges, both frameworks, computed once.
const std::vector<report::MeasureRow>& catalog_rows() {
    static const std::vector<report::MeasureRow> rows = [] {
        sweep::SweepSpec spec;
        spec.z_values = kCatalogZ;
        spec.states = catalog::all_states(6);
        spec.jobs = sweep::default_jobs();
        auto res = sweep::run_measures(spec);
        if (res.tolerance_failure) throw std::runtime_error("catalog sweep did not converge");
        return res.rows;
    }();
    return rows;
}

Outcome closed_forms() {
    Outcome o;
    const QuantumState s(1, -1, kHalf);
    const double e = std::exp(1.0);
    double worst_c = 0, worst_m = 0;
    for (double Z : {1.0, 19.0, 50.0, 90.0}) {
        const auto m = measures::measure_set(Z, s, Framework::schrodinger);
        worst_c = std::max({worst_c, rel(*m.C_LMC, e * e * e / 8), rel(*m.C_FS, 2 * e * std::cbrt(1 / oracle::kPi))});
        worst_m = std::max({worst_m, rel(m.S, 3 + std::log(oracle::kPi) - 3 * std::log(Z)),
                            rel(*m.D, Z * Z * Z / (8 * oracle::kPi)), rel(*m.I, 4 * Z * Z)});
    }
    o.pass = worst_c <= kClosedFormComplexityTol && worst_m <= kClosedFormMeasureTol;
    o.detail = fmt("max rel err C %.2e (tol %.0e), S/D/I %.2e (tol %.0e)", worst_c, kClosedFormComplexityTol, worst_m,
                   kClosedFormMeasureTol);
    return o;
}

Outcome normalization() {
    Outcome o;
    double worst_d = 0, worst_s = 0;
    std::string where;
    for (double Z : {1.0, 19.0, 50.0, 55.0, 90.0}) {
        for (const auto& s : catalog::all_states(6)) {
            const auto [g, f] = measures::component_norms(Z, s);
            const double dd = std::abs(g.value + f.value - 1.0);
            if (dd > worst_d) {
                worst_d = dd;
                where = fmt("Z=%g %s", Z, s.label().c_str());
            }
            const auto rad = hydrogenic::radial_density(Z, s, Framework::schrodinger);
            worst_s = std::max(worst_s, std::abs(measures::radial_norm(rad).value - 1.0));
        }
    }
    o.pass = worst_d <= kDiracNormTol && worst_s <= kSchrodingerNormTol;
    o.detail = fmt("max |norm-1| Dirac %.2e at %s (tol %.0e), Schrodinger %.2e (tol %.0e)", worst_d, where.c_str(),
                   kDiracNormTol, worst_s, kSchrodingerNormTol);
    return o;
}

Outcome nonrelativistic_limit() {
    Outcome o;
    std::map<std::string, std::pair<double, std::string>> worst;
    for (const auto& s : catalog::all_states(3)) {
        const auto d = measures::measure_set(1.0, s, Framework::dirac);
        const auto r = measures::measure_set(1.0, s, Framework::schrodinger);
        const std::pair<const char*, std::pair<double, double>> pairs[] = {
            {"S", {d.S, r.S}},         {"D", {*d.D, *r.D}},         {"I", {*d.I, *r.I}},
            {"J", {d.J, r.J}},         {"C_LMC", {*d.C_LMC, *r.C_LMC}}, {"C_FS", {*d.C_FS, *r.C_FS}}};
        for (const auto& [name, v] : pairs) {
            const double e = rel(v.first, v.second);
            auto& w = worst[name];
            if (e > w.first) w = {e, s.label()};
        }
    }
    std::ostringstream os;
    for (const auto& [name, w] : worst) {
        if (w.first > kNonrelativisticTol) o.pass = false;
        os << name << " " << fmt("%.1e", w.first) << (w.first > kNonrelativisticTol ? " (" + w.second + ")" : "")
           << "; ";
    }
    o.detail = "max rel dev at Z=1: " + os.str() + fmt("tol %.0e", kNonrelativisticTol);
    return o;
}

// Direct two-dimensional quadrature of rho(r, theta) = g^2 A_l + f^2 A_l', with
// gradients by five-point differences and no use of the separated forms.
struct DirectMeasures {
    double S, D, I;
};

DirectMeasures direct_2d(double Z, int n, int l, int twice_j, int twice_mj) {
    const int k = twice_j == 2 * l + 1 ? -(l + 1) : l;
    const int lp = k < 0 ? l + 1 : l - 1;
    const oracle::DiracState ds{n, k, Z};
    const double R = 70.0 / static_cast<double>(ds.lambda());
    auto rho = [&](double r, double th) {
        const double g = ds.g(r), f = ds.f(r);
        return g * g * oracle::spinor_angular(l, twice_j, twice_mj, th) +
               f * f * oracle::spinor_angular(lp, twice_j, twice_mj, th);
    };
    auto d5 = [](const std::function<double(double)>& fn, double x, double h) {
        return (fn(x - 2 * h) - 8 * fn(x - h) + 8 * fn(x + h) - fn(x + 2 * h)) / (12 * h);
    };
    boost::math::quadrature::tanh_sinh<double> ts(12);
    auto integrate = [&](auto&& kernel) {
        auto outer = [&](double th) {
            auto inner = [&](double r) { return kernel(r, th); };
            // mass below 1e-200 bohr is ~r^(2 gamma + 1); the stencil needs normal doubles
            return ts.integrate(inner, 1e-200, R, 1e-12) * std::sin(th);
        };
        return 2 * oracle::kPi *
               boost::math::quadrature::gauss_kronrod<double, 31>::integrate(outer, 0.0, oracle::kPi, 12, 1e-11);
    };
    DirectMeasures m{};
    m.S = integrate([&](double r, double th) {
        const double p = rho(r, th);
        return p > 0 ? -r * r * p * std::log(p) : 0.0;
    });
    m.D = integrate([&](double r, double th) {
        const double p = rho(r, th);
        return r * r * p * p;
    });
    m.I = integrate([&](double r, double th) {
        const double p = rho(r, th);
        if (!(p > 0)) return 0.0;
        const double dr = d5([&](double x) { return rho(x, th); }, r, 1e-3 * r);
        const double dth = d5([&](double t) { return rho(r, t); }, th, 1e-3);
        return (r * r * dr * dr + dth * dth) / p;
    });
    return m;
}

Outcome separability() {
    Outcome o;
    const double Z = 50.0;
    const std::array<std::array<int, 4>, 3> cases = {{{1, 0, 1, 1}, {2, 1, 3, 1}, {3, 2, 5, 3}}};
    std::ostringstream os;
    for (const auto& c : cases) {
        const auto sep = measures::measure_set(Z, st(c[0], c[1], c[2], c[3]), Framework::dirac);
        const auto dir = direct_2d(Z, c[0], c[1], c[2], c[3]);
        const double e = std::max({rel(sep.S, dir.S), rel(*sep.D, dir.D), rel(*sep.I, dir.I)});
        if (!(e <= kSeparabilityTol)) o.pass = false;
        os << fmt("(%d,%d,%d/2,%d/2) %.1e; ", c[0], c[1], c[2], c[3], e);
    }
    o.detail = "max rel dev separable vs 2D at Z=50: " + os.str() + fmt("tol %.0e", kSeparabilityTol);
    return o;
}

Outcome bounds() {
    Outcome o;
    double min_lmc = 1e300, min_fs = 1e300;
    std::size_t checked = 0, fs_undefined = 0;
    for (const auto& row : catalog_rows()) {
        if (!row.measures) {
            o.pass = false;
            o.detail = "evaluation failed: " + row.status;
            return o;
        }
        const auto& m = *row.measures;
        ++checked;
        min_lmc = std::min(min_lmc, *m.C_LMC);
        if (m.C_FS)
            min_fs = std::min(min_fs, *m.C_FS);
        else
            ++fs_undefined;
    }
    o.pass = min_lmc >= kLmcBound && min_fs >= kFsBound;
    o.detail = fmt("%zu evaluations, min C_LMC %.6f, min C_FS %.6f (%zu divergent)", checked, min_lmc, min_fs,
                   fs_undefined);
    return o;
}

Outcome singularity_gate() {
    Outcome o;
    const QuantumState s(1, -1, kHalf);
    const auto at118 = measures::measure_set(118.0, s, Framework::dirac);
    const auto at119 = measures::measure_set(119.0, s, Framework::dirac);
    const bool finite = at118.I && std::isfinite(*at118.I);
    const bool divergent = at119.fisher_divergent();
    bool monotone = true;
    double prev = 0.0;
    for (int Z = 100; Z <= 118; ++Z) {
        const auto m = measures::measure_set(Z, s, Framework::dirac);
        if (!m.I || *m.I <= prev) monotone = false;
        if (m.I) prev = *m.I;
    }
    o.pass = finite && divergent && monotone;
    o.detail = fmt("I(118) = %.6e, I(119) %s, I increasing on Z=100..118: %s", finite ? *at118.I : NAN,
                   divergent ? "divergent" : "finite", monotone ? "yes" : "no");
    return o;
}

Outcome ratio_signs() {
    Outcome o;
    std::vector<std::string> fails;
    // zeta_LMC > 0 over the whole catalog
    double min_zeta = 1e300;
    for (const auto& row : catalog_rows())
        if (row.ratios && row.ratios->zeta_LMC) min_zeta = std::min(min_zeta, *row.ratios->zeta_LMC);
    if (!(min_zeta > 0)) fails.push_back(fmt("min zeta_LMC %.3e", min_zeta));

    std::vector<double> zs = {1.0};
    for (int Z = 5; Z <= 115; Z += 5) zs.push_back(Z);
    zs.push_back(118.0);
    for (int n = 1; n <= 3; ++n) {
        const auto s = stretched(n, -n);
        double prev = -1.0;
        for (double Z : zs) {
            const double z = *measures::ratio_set(Z, s).zeta_LMC;
            if (z <= prev) fails.push_back(fmt("zeta_LMC not increasing for %s at Z=%g", s.label().c_str(), Z));
            prev = z;
        }
    }
    const double fs3p = *measures::ratio_set(19.0, st(3, 1, 1, 1)).zeta_FS;
    if (!(fs3p < 0)) fails.push_back(fmt("zeta_FS(3p1/2, Z=19) = %.4e", fs3p));
    for (double Z : zs) {
        const auto r = measures::ratio_set(Z, QuantumState(1, -1, kHalf));
        if (!r.zeta_FS || !(*r.zeta_FS > 0)) fails.push_back(fmt("zeta_FS(1s) <= 0 at Z=%g", Z));
    }
    // j ordering at Z = 90 for stretched states m_j = j
    for (int n = 2; n <= 6; ++n) {
        for (int l = 1; l < n; ++l) {
            const auto lo = measures::ratio_set(90.0, st(n, l, 2 * l - 1, 2 * l - 1));
            const auto hi = measures::ratio_set(90.0, st(n, l, 2 * l + 1, 2 * l + 1));
            if (!(*lo.zeta_LMC > *hi.zeta_LMC))
                fails.push_back(fmt("(n,l)=(%d,%d) zeta_LMC j-: %.4f <= j+: %.4f", n, l, *lo.zeta_LMC, *hi.zeta_LMC));
            if (!(*hi.zeta_FS > *lo.zeta_FS))
                fails.push_back(fmt("(n,l)=(%d,%d) zeta_FS j+: %.4f <= j-: %.4f", n, l, *hi.zeta_FS, *lo.zeta_FS));
        }
    }
    o.pass = fails.empty();
    if (o.pass) {
        o.detail = fmt("min zeta_LMC %.3e, zeta_FS(3p1/2, Z=19) %.4f; orderings hold", min_zeta, fs3p);
    } else {
        for (const auto& f : fails) o.detail += f + "; ";
    }
    return o;
}

Outcome mj_invariance() {
    Outcome o;
    double worst = 0.0;
    for (double Z : {19.0, 55.0, 90.0}) {
        for (int n = 2; n <= 5; ++n) {
            for (int l = 1; l < n; ++l) {
                for (int tj : {2 * l - 1, 2 * l + 1}) {
                    const double ref = *measures::ratio_set(Z, st(n, l, tj, tj)).zeta_LMC;
                    for (int tm = -tj; tm < tj; tm += 2)
                        worst = std::max(worst, std::abs(*measures::ratio_set(Z, st(n, l, tj, tm)).zeta_LMC - ref));
                }
            }
        }
    }
    o.pass = worst <= kMjInvarianceTol;
    o.detail = fmt("max |zeta_LMC(m_j) - zeta_LMC(j)| %.2e (tol %.0e)", worst, kMjInvarianceTol);
    return o;
}

Outcome node_structure() {
    Outcome o;
    const double Z = 50.0;
    const auto s = st(5, 2, 3, 3);
    const auto sch = hydrogenic::radial_density(Z, s, Framework::schrodinger);
    const auto dir = hydrogenic::radial_density(Z, s, Framework::dirac);
    const auto nodes = sch.nodes();
    // independent count: sign changes of the Schrodinger amplitude on a fine grid
    int sign_changes = 0;
    {
        const double r_end = sch.scan_limit();
        double prev = sch.amplitudes(r_end * 1e-6)[0];
        for (int i = 1; i <= 200000; ++i) {
            const double a = sch.amplitudes(r_end * (1e-6 + (1 - 1e-6) * i / 200000.0))[0];
            if (a * prev < 0) ++sign_changes;
            if (a != 0) prev = a;
        }
    }
    const double r_max = 5.0;
    const auto grid = catalog::log_grid(r_max * 1e-6, r_max, 10000);
    double min_D = 1e300, peak = 0.0;
    for (double r : grid) {
        min_D = std::min(min_D, r * r * dir(r));
        peak = std::max(peak, dir.fisher_kernel(r));
    }
    double worst_fraction = 0.0;
    for (double rn : nodes) {
        const double a = 0.8 * rn, b = 1.25 * rn;
        double best_r = a, best = 1e300;
        for (int i = 0; i <= 4000; ++i) {
            const double r = a + (b - a) * i / 4000.0;
            const double v = dir.fisher_kernel(r);
            if (v < best) best = v, best_r = r;
        }
        const double h = (b - a) / 4000.0;
        const auto m = boost::math::tools::brent_find_minima([&](double r) { return dir.fisher_kernel(r); },
                                                             best_r - h, best_r + h, 60);
        worst_fraction = std::max(worst_fraction, std::min(best, m.second) / peak);
    }
    o.pass = nodes.size() == 2 && sign_changes == 2 && min_D > 0 && worst_fraction <= kKernelNodeFraction;
    o.detail = fmt("Schrodinger zeros %zu (grid sign changes %d); Dirac min D(r) %.3e; kernel min/peak near nodes "
                   "%.2e (tol %.0e)",
                   nodes.size(), sign_changes, min_D, worst_fraction, kKernelNodeFraction);
    return o;
}

Outcome ns_extrema() {
    Outcome o;
    std::vector<double> lmc, fs;
    for (int n = 1; n <= 6; ++n) {
        const auto r = measures::ratio_set(55.0, QuantumState(n, -1, kHalf));
        lmc.push_back(*r.zeta_LMC);
        fs.push_back(*r.zeta_FS);
    }
    const int n_max = static_cast<int>(std::max_element(lmc.begin(), lmc.end()) - lmc.begin()) + 1;
    const int n_min = static_cast<int>(std::min_element(fs.begin(), fs.end()) - fs.begin()) + 1;
    o.pass = n_max == 3 && n_min == 4;
    o.detail = fmt("argmax zeta_LMC n=%d (%.5f), argmin zeta_FS n=%d (%.6f; n=4 %.6f, n=5 %.6f)", n_max,
                   lmc[n_max - 1], n_min, fs[n_min - 1], fs[3], fs[4]);
    return o;
}

Outcome k_dependence() {
    Outcome o;
    std::vector<std::string> fails;
    for (int n = 1; n <= 6; ++n) {
        std::map<int, MeasureSet> by_k;
        for (int k = -n; k < n; ++k)
            if (k != 0) by_k.emplace(k, measures::measure_set(90.0, stretched(n, k), Framework::dirac));
        const auto best = std::max_element(by_k.begin(), by_k.end(), [](const auto& a, const auto& b) {
            return *a.second.C_LMC < *b.second.C_LMC;
        });
        if (best->first != -1) fails.push_back(fmt("n=%d: C_LMC maximal at k=%d", n, best->first));
        // C_FS decreasing in l along each j branch and across the l-manifold
        auto fs = [&](int k) { return *by_k.at(k).C_FS; };
        for (int l = 0; l + 1 < n; ++l) {
            if (!(fs(-(l + 2)) < fs(-(l + 1)))) fails.push_back(fmt("n=%d j=l+1/2: C_FS rises at l=%d", n, l + 1));
            if (l >= 1 && !(fs(l + 1) < fs(l))) fails.push_back(fmt("n=%d j=l-1/2: C_FS rises at l=%d", n, l + 1));
            const double lo_l = l == 0 ? fs(-1) : std::min(fs(-(l + 1)), fs(l));
            const double hi_next = std::max(fs(-(l + 2)), fs(l + 1));
            if (!(hi_next < lo_l)) fails.push_back(fmt("n=%d: C_FS manifolds overlap at l=%d", n, l + 1));
        }
    }
    o.pass = fails.empty();
    if (o.pass) o.detail = "C_LMC peaks at k=-1 and C_FS falls with l for n=1..6 (m_j=j)";
    for (const auto& f : fails) o.detail += f + "; ";
    return o;
}

std::pair<int, std::string> run_cli(const std::string& args) {
    const std::string cmd = std::string(RELINFO_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::array<char, 8192> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome determinism() {
    Outcome o;
    const std::vector<std::string> sweeps = {
        "sweep-z --z-from 1 --z-to 118 --z-steps 12 --states 1s,2s,2p-,2p,3d-,3d",
        "sweep-states --Z 90 --n-max 4",
        "plane --Z 55 --n-max 5",
        "profile --Z 50 --n 5 --l 2 --j 3/2 --r-min 1e-4 --r-max 5 --points 500 --spacing log",
    };
    std::size_t bytes = 0;
    for (const auto& args : sweeps) {
        std::string reference;
        for (int rep = 0; rep < 2; ++rep) {
            for (int jobs : {1, 8}) {
                const auto [code, out] = run_cli(args + " --jobs " + std::to_string(jobs));
                if (code != 0 || out.empty()) {
                    o.pass = false;
                    o.detail += fmt("'%s' exited %d; ", args.c_str(), code);
                    continue;
                }
                if (reference.empty()) reference = out;
                if (out != reference) {
                    o.pass = false;
                    o.detail += fmt("'%s' differs for --jobs %d; ", args.c_str(), jobs);
                }
            }
        }
        bytes += reference.size();
    }
    if (o.pass) o.detail = fmt("4 sweeps x 2 repeats x {--jobs 1, --jobs 8}: identical (%zu bytes)", bytes);
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"closed-form ground state", closed_forms},
        {"normalization n<=6", normalization},
        {"nonrelativistic limit Z=1", nonrelativistic_limit},
        {"separability vs 2D quadrature", separability},
        {"complexity bounds n<=6", bounds},
        {"Fisher singularity gate", singularity_gate},
        {"ratio sign structure", ratio_signs},
        {"m_j invariance of zeta_LMC", mj_invariance},
        {"node structure 5d3/2 Z=50", node_structure},
        {"ns extrema Z=55", ns_extrema},
        {"k dependence Z=90", k_dependence},
        {"sweep determinism", determinism},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) ++failures;
        std::printf("%s [%02d] %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
