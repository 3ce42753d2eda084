#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "relinfo/catalog.hpp"
#include "relinfo/measures.hpp"
#include "relinfo/report.hpp"

/// Orchestration behind the command-line interface: parameter grids,
/// parallel evaluation and order-preserving output.
namespace relinfo::sweep {

using hydrogenic::Framework;
using hydrogenic::QuantumState;

enum class FrameworkSelection { dirac, schrodinger, both };

FrameworkSelection parse_framework_selection(const std::string& s);

struct SweepSpec {
    std::vector<double> z_values;
    std::vector<QuantumState> states;
    FrameworkSelection frameworks = FrameworkSelection::both;
    measures::Tolerances tolerances;
    int jobs = 1;

    /// Throws DomainError when empty or when a Z is out of range.
    void validate() const;
};

/// Runs `task(i)` for i in [0, count) on `jobs` threads. Results must be
/// written by index; the call returns after every task has finished.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& task);

/// Default worker count: hardware concurrency, at least 1.
int default_jobs();

struct SweepResult {
    std::vector<report::MeasureRow> rows;
    bool tolerance_failure = false;
};

/// One row per (Z, state, framework), rows ordered by Z, then state in
/// canonical order, then framework (dirac before schrodinger).
SweepResult run_measures(const SweepSpec& spec);

/// Z sweep over the given states (sweep-z).
SweepResult sweep_z(const SweepSpec& spec);
/// Every state with n <= n_max at one Z (sweep-states).
SweepResult sweep_states(double Z, int n_max, FrameworkSelection frameworks, const measures::Tolerances& tol,
                         int jobs);

struct PlaneResult {
    std::vector<report::PlaneRow> rows;
    bool tolerance_failure = false;
};

/// Information-plane dataset: states with m_j = j = l + 1/2, n <= n_max.
PlaneResult plane(double Z, int n_max, FrameworkSelection frameworks, const measures::Tolerances& tol, int jobs);

struct ProfileSpec {
    double Z = 1.0;
    QuantumState state{1, -1, kHalf};
    double r_min = 1e-4;
    double r_max = 10.0;
    int points = 1000;
    bool log_spacing = false;
};

std::vector<report::ProfileRow> profile(const ProfileSpec& spec);

void write_measures_csv(std::ostream& out, const SweepResult& result);
void write_plane_csv(std::ostream& out, const PlaneResult& result);
void write_profile_csv(std::ostream& out, const std::vector<report::ProfileRow>& rows);

} // namespace relinfo::sweep
