// relinfo: information measures of hydrogenic Dirac and Schrodinger states.
//
//   relinfo state --Z 1 --n 1 --l 0 --j 0.5 --mj 0.5 --framework schrodinger
//   relinfo sweep-z --z-from 1 --z-to 118 --z-steps 118 --states 1s,2p,3d
//   relinfo sweep-states --Z 90 --n-max 6
//   relinfo profile --Z 50 --n 5 --l 2 --j 3/2 --r-min 1e-4 --r-max 3 --spacing log
//   relinfo plane --Z 55 --n-max 6
//
// Exit codes: 0 success, 2 input domain error, 3 tolerance not met.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relinfo/catalog.hpp"
#include "relinfo/errors.hpp"
#include "relinfo/report.hpp"
#include "relinfo/sweep.hpp"

namespace {

using namespace relinfo;

constexpr int kExitDomain = 2;
constexpr int kExitTolerance = 3;

struct StateArgs {
    std::optional<int> n;
    std::optional<int> l;
    std::string j;
    std::string mj;
    std::string states;
    std::optional<int> n_max;
};

struct Options {
    double Z = 0.0;
    bool z_given = false;
    double z_from = 1.0;
    double z_to = 118.0;
    int z_steps = 0;
    StateArgs st;
    std::string framework = "both";
    double rel_tol = measures::Tolerances{}.rel_tol;
    double abs_tol = measures::Tolerances{}.abs_tol;
    int max_subdivisions = measures::Tolerances{}.max_subdivisions;
    std::string out;
    std::string format = "csv";
    int jobs = sweep::default_jobs();
    double r_min = 1e-4;
    double r_max = 10.0;
    int points = 1000;
    std::string spacing = "linear";
};

measures::Tolerances tolerances(const Options& o) {
    if (!(o.rel_tol > 0.0) || !(o.abs_tol >= 0.0)) throw DomainError("tolerances must be positive");
    if (o.max_subdivisions < 1) throw DomainError("max subdivisions must be >= 1");
    return {o.rel_tol, o.abs_tol, o.max_subdivisions};
}

hydrogenic::QuantumState single_state(const StateArgs& a) {
    if (!a.states.empty()) return catalog::parse_spectroscopic(a.states);
    if (!a.n || !a.l) throw DomainError("state needs --n and --l (or --states LABEL)");
    const auto j = a.j.empty() ? HalfInteger::from_twice(2 * *a.l + 1) : catalog::parse_half_integer(a.j);
    const auto mj = a.mj.empty() ? j : catalog::parse_half_integer(a.mj);
    return hydrogenic::QuantumState::from_nljm(*a.n, *a.l, j, mj);
}

std::vector<hydrogenic::QuantumState> state_list(const StateArgs& a) {
    if (a.n_max) return catalog::all_states(*a.n_max);
    if (!a.states.empty()) {
        std::vector<hydrogenic::QuantumState> out;
        std::stringstream ss(a.states);
        for (std::string item; std::getline(ss, item, ',');) {
            if (!item.empty()) out.push_back(catalog::parse_spectroscopic(item));
        }
        return out;
    }
    return {single_state(a)};
}

// Writes to --out when given, stdout otherwise.
template <class F>
void emit(const std::string& path, F&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw DomainError("cannot open output file '" + path + "'");
    write(file);
}

void require_csv(const Options& o) {
    if (o.format != "csv") throw DomainError("this subcommand writes CSV only (--format csv)");
}

int run_state(const Options& o) {
    const auto state = single_state(o.st);
    const auto tol = tolerances(o);
    const auto sel = sweep::parse_framework_selection(o.framework);
    if (o.format == "csv") {
        sweep::SweepSpec spec{{o.Z}, {state}, sel, tol, 1};
        const auto res = sweep::run_measures(spec);
        for (const auto& row : res.rows) {
            if (row.status.rfind("domain_error", 0) == 0) throw DomainError(row.status);
        }
        emit(o.out, [&](std::ostream& os) { sweep::write_measures_csv(os, res); });
        return res.tolerance_failure ? kExitTolerance : 0;
    }
    if (o.format != "json") throw DomainError("--format must be csv or json");

    using hydrogenic::Framework;
    std::optional<measures::MeasureSet> dirac, schrodinger;
    if (sel != sweep::FrameworkSelection::schrodinger) dirac = measures::measure_set(o.Z, state, Framework::dirac, tol);
    if (sel != sweep::FrameworkSelection::dirac) {
        schrodinger = measures::measure_set(o.Z, state, Framework::schrodinger, tol);
    }
    const auto text = report::state_report_json(o.Z, state, tol, dirac, schrodinger);
    emit(o.out, [&](std::ostream& os) { os << text << '\n'; });
    return 0;
}

int run_sweep_z(const Options& o) {
    require_csv(o);
    sweep::SweepSpec spec;
    if (o.z_steps > 0) {
        spec.z_values = catalog::linear_grid(o.z_from, o.z_to, o.z_steps);
    } else if (o.z_given) {
        spec.z_values = {o.Z};
    } else {
        throw DomainError("sweep-z needs --z-steps (with --z-from/--z-to) or --Z");
    }
    spec.states = state_list(o.st);
    spec.frameworks = sweep::parse_framework_selection(o.framework);
    spec.tolerances = tolerances(o);
    spec.jobs = o.jobs;
    const auto res = sweep::sweep_z(spec);
    emit(o.out, [&](std::ostream& os) { sweep::write_measures_csv(os, res); });
    return res.tolerance_failure ? kExitTolerance : 0;
}

int run_sweep_states(const Options& o) {
    require_csv(o);
    const auto res = sweep::sweep_states(o.Z, o.st.n_max.value_or(3), sweep::parse_framework_selection(o.framework),
                                         tolerances(o), o.jobs);
    emit(o.out, [&](std::ostream& os) { sweep::write_measures_csv(os, res); });
    return res.tolerance_failure ? kExitTolerance : 0;
}

int run_profile(const Options& o) {
    require_csv(o);
    if (o.spacing != "linear" && o.spacing != "log") throw DomainError("--spacing must be linear or log");
    sweep::ProfileSpec spec;
    spec.Z = o.Z;
    spec.state = single_state(o.st);
    spec.r_min = o.r_min;
    spec.r_max = o.r_max;
    spec.points = o.points;
    spec.log_spacing = o.spacing == "log";
    const auto rows = sweep::profile(spec);
    emit(o.out, [&](std::ostream& os) { sweep::write_profile_csv(os, rows); });
    return 0;
}

int run_plane(const Options& o) {
    require_csv(o);
    const auto res = sweep::plane(o.Z, o.st.n_max.value_or(6), sweep::parse_framework_selection(o.framework),
                                  tolerances(o), o.jobs);
    emit(o.out, [&](std::ostream& os) { sweep::write_plane_csv(os, res); });
    return res.tolerance_failure ? kExitTolerance : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Information-theoretic measures of hydrogenic Dirac and Schrodinger states"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--framework", o.framework, "dirac, schrodinger or both")->capture_default_str();
        sub->add_option("--rel-tol", o.rel_tol, "relative quadrature tolerance")->capture_default_str();
        sub->add_option("--abs-tol", o.abs_tol, "absolute quadrature tolerance")->capture_default_str();
        sub->add_option("--max-subdivisions", o.max_subdivisions, "adaptive panel budget")->capture_default_str();
        sub->add_option("--out", o.out, "output file (default stdout)");
        sub->add_option("--format", o.format, "csv or json")->capture_default_str();
        sub->add_option("--jobs", o.jobs, "worker threads")->capture_default_str();
    };
    auto z_option = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option_function<double>(
            "--Z", [&](double z) { o.Z = z; o.z_given = true; }, "nuclear charge");
        if (required) opt->required();
    };
    auto single = [&](CLI::App* sub) {
        sub->add_option("--n", o.st.n, "principal quantum number");
        sub->add_option("--l", o.st.l, "orbital quantum number");
        sub->add_option("--j", o.st.j, "total angular momentum (default l+1/2)");
        sub->add_option("--mj", o.st.mj, "magnetic quantum number (default j)");
    };

    auto* state = app.add_subcommand("state", "single-state report");
    z_option(state, true);
    single(state);
    state->add_option("--states", o.st.states, "spectroscopic label instead of --n/--l/--j, e.g. 3p-:-1/2");
    common(state);
    o.format = "json";

    auto* sz = app.add_subcommand("sweep-z", "measures along a grid of Z");
    z_option(sz, false);
    sz->add_option("--z-from", o.z_from)->capture_default_str();
    sz->add_option("--z-to", o.z_to)->capture_default_str();
    sz->add_option("--z-steps", o.z_steps, "number of grid points");
    single(sz);
    sz->add_option("--states", o.st.states, "comma-separated labels, e.g. 1s,2p,3d");
    sz->add_option("--n-max", o.st.n_max, "every state with n <= N");
    common(sz);

    auto* ss = app.add_subcommand("sweep-states", "every state with n <= n_max at one Z");
    z_option(ss, true);
    ss->add_option("--n-max", o.st.n_max, "largest n (<= 8)");
    common(ss);

    auto* pr = app.add_subcommand("profile", "radial density and Fisher kernel profiles");
    z_option(pr, true);
    single(pr);
    pr->add_option("--states", o.st.states, "spectroscopic label");
    pr->add_option("--r-min", o.r_min)->capture_default_str();
    pr->add_option("--r-max", o.r_max)->capture_default_str();
    pr->add_option("--points", o.points)->capture_default_str();
    pr->add_option("--spacing", o.spacing, "linear or log")->capture_default_str();
    common(pr);

    auto* pl = app.add_subcommand("plane", "information-plane dataset (m_j = j = l+1/2)");
    z_option(pl, true);
    pl->add_option("--n-max", o.st.n_max, "largest n (<= 8)");
    common(pl);

    // The state subcommand defaults to JSON, everything else to CSV.
    for (auto* sub : {sz, ss, pr, pl}) sub->preparse_callback([&](std::size_t) { o.format = "csv"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitDomain;
    }

    try {
        if (*state) return run_state(o);
        if (*sz) return run_sweep_z(o);
        if (*ss) return run_sweep_states(o);
        if (*pr) return run_profile(o);
        if (*pl) return run_plane(o);
    } catch (const DomainError& e) {
        std::cerr << "relinfo: domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const ToleranceNotMet& e) {
        std::cerr << "relinfo: tolerance not met: " << e.what() << " (value " << report::format_number(e.value())
                  << ", error " << report::format_number(e.error()) << ")\n";
        return kExitTolerance;
    }
    return kExitDomain;
}
