#include "relinfo/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "relinfo/errors.hpp"

namespace relinfo::sweep {

namespace {

struct Evaluated {
    std::optional<measures::MeasureSet> measures;
    std::string status = "ok";
    bool tolerance_failure = false;
};

Evaluated evaluate(double Z, const QuantumState& state, Framework fw, const measures::Tolerances& tol) {
    Evaluated out;
    try {
        out.measures = measures::measure_set(Z, state, fw, tol);
    } catch (const ToleranceNotMet& e) {
        out.status = std::string("tolerance_not_met: ") + e.what();
        out.tolerance_failure = true;
    } catch (const DomainError& e) {
        out.status = std::string("domain_error: ") + e.what();
    }
    return out;
}

std::vector<Framework> selected(FrameworkSelection sel) {
    switch (sel) {
    case FrameworkSelection::dirac: return {Framework::dirac};
    case FrameworkSelection::schrodinger: return {Framework::schrodinger};
    case FrameworkSelection::both: break;
    }
    return {Framework::dirac, Framework::schrodinger};
}

void check_z(double Z) {
    if (!(Z > 0.0) || !std::isfinite(Z)) throw DomainError("Z must be positive");
    if (Z >= hydrogenic::kKleinCharge) {
        throw DomainError("Z >= 137 (Klein regime) is outside the bound-state domain");
    }
}

} // namespace

FrameworkSelection parse_framework_selection(const std::string& s) {
    if (s == "both") return FrameworkSelection::both;
    return hydrogenic::framework_from_string(s) == Framework::dirac ? FrameworkSelection::dirac
                                                                     : FrameworkSelection::schrodinger;
}

void SweepSpec::validate() const {
    if (z_values.empty()) throw DomainError("sweep needs at least one Z value");
    if (states.empty()) throw DomainError("sweep needs at least one state");
    for (double Z : z_values) check_z(Z);
    if (jobs < 1) throw DomainError("jobs must be >= 1");
}

int default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task) {
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

SweepResult run_measures(const SweepSpec& spec) {
    spec.validate();
    auto zs = spec.z_values;
    std::sort(zs.begin(), zs.end());
    auto states = spec.states;
    std::stable_sort(states.begin(), states.end(), catalog::canonical_less);
    const auto fws = selected(spec.frameworks);

    const std::size_t tasks = zs.size() * states.size();
    std::vector<std::vector<report::MeasureRow>> slots(tasks);
    std::vector<char> tol_fail(tasks, 0);

    parallel_for(tasks, spec.jobs, [&](std::size_t i) {
        const double Z = zs[i / states.size()];
        const auto& state = states[i % states.size()];

        std::optional<double> e_dirac;
        try {
            e_dirac = -hydrogenic::PhysicalContext::make(Z, state).binding;
        } catch (const DomainError&) {
        }
        const double e_schrodinger = hydrogenic::schrodinger_energy(Z, state.n());

        std::vector<Evaluated> results;
        for (auto fw : fws) results.push_back(evaluate(Z, state, fw, spec.tolerances));

        std::optional<measures::RatioSet> ratios;
        if (fws.size() == 2 && results[0].measures && results[1].measures) {
            ratios = measures::ratio_set(*results[0].measures, *results[1].measures);
        }
        auto& rows = slots[i];
        for (std::size_t f = 0; f < fws.size(); ++f) {
            report::MeasureRow row;
            row.Z = Z;
            row.state = state;
            row.framework = fws[f];
            row.measures = results[f].measures;
            row.ratios = ratios;
            row.energy_dirac = e_dirac;
            row.energy_schrodinger = e_schrodinger;
            row.status = results[f].status;
            if (results[f].tolerance_failure) tol_fail[i] = 1;
            rows.push_back(std::move(row));
        }
    });

    SweepResult out;
    for (std::size_t i = 0; i < tasks; ++i) {
        for (auto& row : slots[i]) out.rows.push_back(std::move(row));
        if (tol_fail[i]) out.tolerance_failure = true;
    }
    return out;
}

SweepResult sweep_z(const SweepSpec& spec) { return run_measures(spec); }

SweepResult sweep_states(double Z, int n_max, FrameworkSelection frameworks, const measures::Tolerances& tol,
                         int jobs) {
    SweepSpec spec;
    spec.z_values = {Z};
    spec.states = catalog::all_states(n_max);
    spec.frameworks = frameworks;
    spec.tolerances = tol;
    spec.jobs = jobs;
    return run_measures(spec);
}

PlaneResult plane(double Z, int n_max, FrameworkSelection frameworks, const measures::Tolerances& tol, int jobs) {
    check_z(Z);
    auto states = catalog::stretched_states(n_max);
    std::erase_if(states, [](const QuantumState& s) { return s.k() > 0; });
    const auto fws = selected(frameworks);

    const std::size_t tasks = states.size() * fws.size();
    std::vector<report::PlaneRow> rows(tasks);
    std::vector<char> tol_fail(tasks, 0);
    parallel_for(tasks, jobs, [&](std::size_t i) {
        const auto& state = states[i / fws.size()];
        const auto fw = fws[i % fws.size()];
        auto res = evaluate(Z, state, fw, tol);
        rows[i] = report::PlaneRow{Z, state, fw, res.measures, res.status};
        tol_fail[i] = res.tolerance_failure ? 1 : 0;
    });
    PlaneResult out;
    out.rows = std::move(rows);
    out.tolerance_failure = std::any_of(tol_fail.begin(), tol_fail.end(), [](char c) { return c != 0; });
    return out;
}

std::vector<report::ProfileRow> profile(const ProfileSpec& spec) {
    check_z(spec.Z);
    if (!(spec.r_min > 0.0)) throw DomainError("profile r_min must be > 0");
    if (!(spec.r_max > spec.r_min)) throw DomainError("profile r_max must exceed r_min");
    if (spec.points < 2) throw DomainError("profile needs at least 2 points");

    const auto grid = spec.log_spacing ? catalog::log_grid(spec.r_min, spec.r_max, spec.points)
                                       : catalog::linear_grid(spec.r_min, spec.r_max, spec.points);
    const auto s = measures::radial_profile(spec.Z, spec.state, Framework::schrodinger, grid);
    const auto d = measures::radial_profile(spec.Z, spec.state, Framework::dirac, grid);
    const auto c = measures::component_split(spec.Z, spec.state, grid);

    std::vector<report::ProfileRow> rows(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        rows[i] = {grid[i], s[i].D_of_r, d[i].D_of_r, s[i].I_kernel, d[i].I_kernel, c[i].g_density, c[i].f_density};
    }
    return rows;
}

void write_measures_csv(std::ostream& out, const SweepResult& result) {
    out << report::measures_header() << '\n';
    for (const auto& row : result.rows) out << report::measures_line(row) << '\n';
}

void write_plane_csv(std::ostream& out, const PlaneResult& result) {
    out << report::plane_header() << '\n';
    for (const auto& row : result.rows) out << report::plane_line(row) << '\n';
}

void write_profile_csv(std::ostream& out, const std::vector<report::ProfileRow>& rows) {
    out << report::profile_header() << '\n';
    for (const auto& row : rows) out << report::profile_line(row) << '\n';
}

} // namespace relinfo::sweep
